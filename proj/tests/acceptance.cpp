// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "knotprime/barred.hpp"
#include "knotprime/corpus.hpp"
#include "knotprime/engine.hpp"
#include "knotprime/factor.hpp"
#include "knotprime/knot_file.hpp"
#include "support.hpp"

using namespace knotprime;
using knotprime::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kPerKnotSeconds = 1.0;
constexpr double kSumCountsSeconds = 30.0;
constexpr double kRoundTripSeconds = 60.0;
constexpr int kSumCountPairs = 200;
constexpr int kOracleComplexes = 100;
constexpr int kRoundTripProducts = 100;
constexpr int kMaxGenerators = 12;
constexpr int kBarWindowLo = -3;
constexpr int kBarWindowHi = 3;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

KnotInput ranks_only(std::string name, const Laurent& omega) {
  KnotInput k;
  k.name = std::move(name);
  k.ranks = ranks_from_omega(omega);
  return k;
}

const KnotInput& builtin(std::string_view file) {
  static const auto all = corpus::builtin();
  for (const auto& f : all) {
    if (f.file == file) return f.input;
  }
  throw std::logic_error("missing fixture " + std::string(file));
}

void five_knots(Outcome& o) {
  const std::pair<const char*, const char*> list[] = {
      {"T(2,3)", "t + s^-1 + s^-2*t^-1"},
      {"-T(2,3)", "s^2*t + s + t^-1"},
      {"T(2,5)", "t^2 + s^-1*t + s^-2 + s^-3*t^-1 + s^-4*t^-2"},
      {"-T(2,5)", "s^4*t^2 + s^3*t + s^2 + s*t^-1 + t^-2"},
      {"4_1", "s*t + 3 + s^-1*t^-1"},
  };
  double worst = 0;
  for (const auto& [name, omega] : list) {
    auto start = Clock::now();
    auto v = analyze(ranks_only(name, parse_laurent(omega)));
    double t = seconds_since(start);
    worst = std::max(worst, t);
    if (v.status != Status::Prime || !v.methods.count(Method::T2)) {
      o.fail(std::string(name) + " gave " + std::string(to_string(v.status)));
    }
    if (t >= kPerKnotSeconds) o.fail(std::string(name) + " took " + fmt(t));
  }
  if (o.pass) o.detail << "5/5 PRIME via T2, slowest " << fmt(worst);
}

void composite_soundness(Outcome& o) {
  auto primes = corpus::prime_fixtures();
  int checked = 0;
  for (const auto& a : primes) {
    for (const auto& b : primes) {
      auto sum = connected_sum(a, b);
      auto bare = sum;
      bare.complex.reset();
      for (const auto* k : {&sum, &bare}) {
        ++checked;
        if (analyze(*k).status == Status::Prime) o.fail(k->name + " certified PRIME");
      }
    }
  }
  auto granny = analyze(builtin("granny.json"));
  if (granny.status != Status::ConditionallyPrime ||
      granny.required_exclusions != std::vector<std::string>{"T(2,3)", "-T(2,3)"}) {
    o.fail("granny gave " + std::string(to_string(granny.status)));
  }
  if (o.pass) {
    o.detail << checked << " products never PRIME; granny pending {T(2,3), -T(2,3)}";
  }
}

void bar_counts(Outcome& o) {
  struct Row {
    const char* file;
    long long delta, be, bo;
    int tau;
  };
  const Row rows[] = {{"t23.json", 3, 1, 0, 1},
                      {"mt23.json", 3, 0, 1, -1},
                      {"fig8.json", 5, 1, 1, 0},
                      {"t25.json", 5, 2, 0, 2},
                      {"t27.json", 7, 3, 0, 3}};
  for (const auto& r : rows) {
    auto bars = reduce(*builtin(r.file).complex);
    auto c = counts(bars);
    if (c != BarCounts{r.delta, r.be, r.bo} || bars.tau_filtration != r.tau) {
      std::ostringstream os;
      os << r.file << " gave (" << c.delta << "," << c.b_even << "," << c.b_odd << ","
         << bars.tau_filtration << ")";
      o.fail(os.str());
    }
  }
  if (o.pass) o.detail << "5/5 exact";
}

void sum_counts(Outcome& o) {
  Rng rng(3303);
  auto start = Clock::now();
  int agree = 0;
  std::size_t largest = 0;
  for (int k = 0; k < kSumCountPairs; ++k) {
    auto a = testing::random_basis_change(testing::random_knot_complex(rng, kMaxGenerators), rng, 8);
    auto b = testing::random_basis_change(testing::random_knot_complex(rng, kMaxGenerators), rng, 8);
    auto predicted = predict_sum_counts(counts(reduce(a)), counts(reduce(b)));
    auto product = tensor(a, b);
    largest = std::max(largest, product.size());
    if (counts(reduce(product)) == predicted) {
      ++agree;
    } else if (o.pass) {
      o.fail("pair " + std::to_string(k) + " disagrees");
    }
  }
  double t = seconds_since(start);
  if (t >= kSumCountsSeconds) o.fail("took " + fmt(t));
  if (o.pass) {
    o.detail << agree << "/" << kSumCountPairs << " pairs exact in " << fmt(t)
             << " (largest product " << largest << " generators)";
  }
}

void bar_products(Outcome& o) {
  auto report = check_bar_tensor_products(kBarWindowLo, kBarWindowHi);
  if (report.failures != 0 || report.cases == 0) {
    o.fail(std::to_string(report.failures) + " of " + std::to_string(report.cases) + " cases");
  } else {
    o.detail << report.cases << " cases, 0 failures";
  }
}

void oracle(Outcome& o) {
  Rng rng(5353);
  int agree = 0, changed = 0;
  for (int k = 0; k < kOracleComplexes; ++k) {
    auto c = testing::random_knot_complex(rng, kMaxGenerators);
    auto base = reduce(c);
    if (barcode_via_ranks(c) != base) o.fail("complex " + std::to_string(k));
    auto d = testing::random_basis_change(c, rng, 25);
    changed += !(d == c);
    if (reduce(d) != base || barcode_via_ranks(d) != base) {
      o.fail("basis change " + std::to_string(k));
    } else {
      ++agree;
    }
  }
  if (o.pass) {
    o.detail << agree << "/" << kOracleComplexes << " equal before and after basis change ("
             << changed << " differentials altered)";
  }
}

void round_trip(Outcome& o) {
  Rng rng(5454);
  auto start = Clock::now();
  int recovered = 0;
  for (int k = 0; k < kRoundTripProducts; ++k) {
    int count = rng.uniform(2, 4);
    std::map<CanonicalForm, int> expected;
    Laurent product = Laurent::one();
    for (int m = 0; m < count;) {
      auto f = testing::random_canonical(rng, 3, 3);
      if (factor_canonical(f).factor_count() != 1) continue;
      ++expected[f];
      product = product * f.poly();
      ++m;
    }
    auto result = factor_canonical(canonicalize(product).first);
    std::map<CanonicalForm, int> got(result.factors.begin(), result.factors.end());
    if (got == expected && result.expand() == canonicalize(product).first.poly()) {
      ++recovered;
    } else if (o.pass) {
      o.fail("product " + std::to_string(k) + " not recovered: " + to_string(product));
    }
  }
  double t = seconds_since(start);
  if (t >= kRoundTripSeconds) o.fail("took " + fmt(t));
  if (o.pass) o.detail << recovered << "/" << kRoundTripProducts << " recovered in " << fmt(t);
}

void delta_test(Outcome& o) {
  int lspace = 0;
  for (const auto& f : corpus::builtin()) {
    if (!f.input.complex) continue;
    auto c = counts(reduce(*f.input.complex));
    if (c.b_odd != 0 || c.delta <= 1) continue;
    ++lspace;
    auto v = analyze(f.input);
    if (v.status != Status::Prime || !v.methods.count(Method::Bar)) {
      o.fail(f.input.name + " not PRIME via BAR");
    }
  }
  if (bar_count_test({9, 3, 1}) != BarTest::Inconclusive) o.fail("(9,3,1) certified");
  if (bar_count_test({9, 4, 0}) != BarTest::Prime) o.fail("(9,4,0) not certified");
  if (bar_count_test({49, 2, 10}) != BarTest::Prime) o.fail("(49,2,10) not certified");
  if (lspace == 0) o.fail("no fixtures with b_odd = 0");
  if (o.pass) o.detail << lspace << " b_odd=0 fixtures PRIME via BAR; count examples exact";
}

void multiplicativity(Outcome& o) {
  std::vector<KnotInput> with_complex;
  for (const auto& f : corpus::builtin()) {
    if (f.input.complex) with_complex.push_back(f.input);
  }
  int pairs = 0;
  for (const auto& a : with_complex) {
    for (const auto& b : with_complex) {
      ++pairs;
      auto omega = build_omega(graded_ranks(tensor(*a.complex, *b.complex)));
      if (omega != build_omega(a.ranks) * build_omega(b.ranks)) o.fail(a.name + " x " + b.name);
    }
  }
  if (o.pass) o.detail << pairs << " pairs exact";
}

void corpus_regression(Outcome& o) {
  auto summary = batch_directory(KNOTPRIME_FIXTURE_DIR);
  for (const auto& e : summary.entries) {
    if (!e.expected) o.fail(e.verdict.name + " unlabeled");
    else if (!e.matches_expected()) {
      o.fail(e.verdict.name + ": " + std::string(to_string(e.verdict.status)));
    }
  }
  if (summary.entries.empty()) o.fail("no fixtures found");
  if (o.pass) {
    o.detail << summary.label_matches << "/" << summary.labeled << " labels matched (100%)";
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"five-knot certification", five_knots},
      {"composite soundness", composite_soundness},
      {"bar counts", bar_counts},
      {"connected-sum count formulas", sum_counts},
      {"bar tensor products", bar_products},
      {"rank-function oracle equivalence", oracle},
      {"factorization round-trip", round_trip},
      {"bar-count primality test", delta_test},
      {"Omega multiplicativity", multiplicativity},
      {"corpus regression", corpus_regression},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed;
}
