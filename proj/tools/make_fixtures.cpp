// Writes the built-in corpus as knot files into a directory.

#include <filesystem>
#include <iostream>

#include "knotprime/corpus.hpp"
#include "knotprime/knot_file.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: knotprime_fixtures DIR\n";
    return 1;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& fixture : knotprime::corpus::builtin()) {
    knotprime::save_knot_file(fixture.input, dir / fixture.file);
    std::cout << "wrote " << (dir / fixture.file).string() << '\n';
  }
  return 0;
}
