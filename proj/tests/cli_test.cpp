#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "knotprime/engine.hpp"
#include "knotprime/knot_file.hpp"

using namespace knotprime;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) {
  return (std::filesystem::path(KNOTPRIME_FIXTURE_DIR) / name).string();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", fixture("t23.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "PRIME via T2, BAR; δ=3 b_e=1 b_o=0 τ=1\n");

  r = run({"analyze", fixture("granny.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "CONDITIONALLY_PRIME pending exclusion of T(2,3), -T(2,3); δ=9 b_e=3 b_o=1 τ=2\n");

  r = run({"analyze", fixture("synthetic_t3.json")});
  CHECK(r.out == "PRIME via T3; δ=15\n");

  r = run({"analyze", fixture("unknot.json")});
  CHECK(r.out == "UNKNOT; δ=1 b_e=0 b_o=0 τ=0\n");

  r = run({"analyze", fixture("malformed.json")});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("INVALID: ", 0) == 0);

  r = run({"analyze", fixture("missing.json")});
  CHECK(r.code == 1);
}

TEST_CASE("analyze --explain") {
  auto r = run({"analyze", fixture("granny.json"), "--explain"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "CONDITIONALLY_PRIME pending exclusion of T(2,3), -T(2,3); δ=9 b_e=3 b_o=1 τ=2\n"
        "  Omega = t^2 + 2*s^-1*t + 3*s^-2 + 2*s^-3*t^-1 + s^-4*t^-2\n"
        "  irreducible factors: (s^2*t^2 + s*t + 1)^2\n"
        "  T2: 1 maximal symmetric factorization(s): (s^2*t + s + t^-1) * "
        "(s^-2*t + s^-3 + s^-4*t^-1)\n"
        "  T3: prime once these are excluded as summands: T(2,3), -T(2,3)\n"
        "  BAR: inconclusive (delta=9 b_e=3 b_o=1)\n");
}

TEST_CASE("analyze --json round-trips") {
  auto r = run({"analyze", fixture("t25.json"), "--json"});
  CHECK(r.code == 0);
  auto v = verdict_from_json(r.out);
  CHECK(v.status == Status::Prime);
  CHECK(v == analyze(load_knot_file(fixture("t25.json"))));
  CHECK(r.out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("tensor then analyze") {
  auto target = (std::filesystem::temp_directory_path() / "knotprime-cli-granny.json").string();
  auto r = run({"tensor", fixture("t23.json"), fixture("t23.json"), "--out", target});
  CHECK(r.code == 0);
  auto sum = load_knot_file(target);
  auto t23 = load_knot_file(fixture("t23.json"));
  CHECK(build_omega(sum.ranks) == build_omega(t23.ranks) * build_omega(t23.ranks));
  r = run({"analyze", target});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("CONDITIONALLY_PRIME", 0) == 0);
  std::filesystem::remove(target);
}

TEST_CASE("reduce") {
  auto r = run({"reduce", fixture("fig8.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "τ=0\n"
        "bar top=0 bottom=-1 grading=-1 odd\n"
        "bar top=1 bottom=0 grading=0 even\n"
        "δ=5 b_e=1 b_o=1\n"
        "inequality test: PRIME\n");
  CHECK(run({"reduce", fixture("synthetic_t3.json")}).code == 1);
}

TEST_CASE("factor") {
  auto r = run({"factor", fixture("t23_fig8.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "Omega = s*t^2 + 4*t + 5*s^-1 + 4*s^-2*t^-1 + s^-3*t^-2\n"
        "irreducible: (s^2*t^2 + s*t + 1) (s^2*t^2 + 3*s*t + 1)\n"
        "symmetric factorizations: 1\n"
        "  (s^2*t + s + t^-1) * (s^-1*t + 3*s^-2 + s^-3*t^-1)\n"
        "    part 0 matches T(2,3) -T(2,3)\n"
        "    part 1 matches 4_1\n");
  CHECK(run({"factor", fixture("malformed.json")}).code == 1);
}

TEST_CASE("batch") {
  auto r = run({"batch", KNOTPRIME_FIXTURE_DIR});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,status,methods,delta,b_even,b_odd,tau\n", 0) == 0);
  CHECK(r.out.find("malformed,INVALID,,") != std::string::npos);

  auto csv = (std::filesystem::temp_directory_path() / "knotprime-cli.csv").string();
  r = run({"batch", KNOTPRIME_FIXTURE_DIR, "--out", csv});
  CHECK(r.code == 0);
  CHECK(r.out.find("labels matched: 12/12") != std::string::npos);
  CHECK(std::filesystem::file_size(csv) > 0);
  std::filesystem::remove(csv);
}

TEST_CASE("selftest") {
  auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"analyze"}).code == 1);
  CHECK(run({"analyze", fixture("t23.json"), "--bogus"}).code == 1);
  CHECK(run({"tensor", fixture("t23.json"), fixture("t23.json")}).code == 1);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("selftest") != std::string::npos);
}
