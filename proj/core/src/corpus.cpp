#include "knotprime/corpus.hpp"

#include "knotprime/knot_file.hpp"

namespace knotprime::corpus {

FilteredComplex torus_staircase(int n) {
  if (n < 1 || n % 2 == 0) throw InvalidInput("torus_staircase needs an odd n >= 1");
  const int genus = (n - 1) / 2;
  std::vector<Generator> gens;
  std::vector<Arrow> arrows;
  for (int k = 0; k < n; ++k) gens.push_back({"x" + std::to_string(k), -k, genus - k});
  for (int m = 0; m < genus; ++m) {
    arrows.push_back({"x" + std::to_string(2 * m + 1), "x" + std::to_string(2 * m + 2)});
  }
  return FilteredComplex(std::move(gens), arrows);
}

FilteredComplex figure_eight_complex() {
  return FilteredComplex(
      {{"g1", 0, 0}, {"g2", 1, 1}, {"g3", 0, 0}, {"g4", 0, 0}, {"g5", -1, -1}},
      {{"g2", "g3"}, {"g4", "g5"}});
}

FilteredComplex unknot_complex() { return FilteredComplex({{"u", 0, 0}}, {}); }

KnotInput from_complex(std::string name, const FilteredComplex& c) {
  KnotInput out;
  out.name = std::move(name);
  out.ranks = graded_ranks(c);
  out.complex = c;
  return out;
}

namespace {

KnotInput labeled(KnotInput k, Status expected) {
  k.expected_verdict = expected;
  return k;
}

}  // namespace

std::vector<KnotInput> prime_fixtures() {
  return {
      from_complex("T(2,3)", torus_staircase(3)),
      from_complex("-T(2,3)", mirror(torus_staircase(3))),
      from_complex("4_1", figure_eight_complex()),
      from_complex("T(2,5)", torus_staircase(5)),
      from_complex("-T(2,5)", mirror(torus_staircase(5))),
      from_complex("T(2,7)", torus_staircase(7)),
  };
}

std::vector<Fixture> builtin() {
  const auto primes = prime_fixtures();
  const KnotInput& t23 = primes[0];
  const KnotInput& mt23 = primes[1];
  const KnotInput& fig8 = primes[2];

  KnotInput synthetic = connected_sum(t23, fig8);
  synthetic.name = "synthetic-t3-logic";
  synthetic.complex.reset();
  synthetic.certificates = {"T(2,3)", "-T(2,3)"};

  KnotInput malformed;
  malformed.name = "malformed";
  malformed.ranks = {{Monomial{1, 1}, 1}, {Monomial{0, 0}, 1}};

  std::vector<Fixture> out = {
      {"unknot.json", labeled(from_complex("unknot", unknot_complex()), Status::Unknot)},
      {"t23.json", labeled(t23, Status::Prime)},
      {"mt23.json", labeled(mt23, Status::Prime)},
      {"fig8.json", labeled(fig8, Status::Prime)},
      {"t25.json", labeled(primes[3], Status::Prime)},
      {"mt25.json", labeled(primes[4], Status::Prime)},
      {"t27.json", labeled(primes[5], Status::Prime)},
      {"granny.json", labeled(connected_sum(t23, t23), Status::ConditionallyPrime)},
      {"square.json", labeled(connected_sum(t23, mt23), Status::ConditionallyPrime)},
      {"t23_fig8.json", labeled(connected_sum(t23, fig8), Status::ConditionallyPrime)},
      {"synthetic_t3.json", labeled(synthetic, Status::Prime)},
      {"malformed.json", labeled(malformed, Status::Invalid)},
  };
  return out;
}

}  // namespace knotprime::corpus
