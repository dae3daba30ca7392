#pragma once

// Primality verdicts from knot Floer data.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "knotprime/barred.hpp"
#include "knotprime/factor.hpp"
#include "knotprime/laurent.hpp"

namespace knotprime {

/// Dimension of knot Floer homology keyed by (alexander, maslov).
using RankTable = std::map<Monomial, int>;

enum class Status { Unknot, Prime, ConditionallyPrime, Inconclusive, Invalid };

/// Certification routes: symmetric irreducibility (T2), two-part
/// factorization with a known-knot factor excluded (T3), and the
/// delta / b_even / b_odd inequality on the bar-complex (BAR).
enum class Method { T2, T3, Bar };

std::string_view to_string(Status s);
std::string_view to_string(Method m);
std::optional<Status> parse_status(std::string_view text);
std::optional<Method> parse_method(std::string_view text);

struct KnotInput {
  std::string name;
  RankTable ranks;
  std::optional<FilteredComplex> complex;
  /// Known-knot names asserted not to be connected summands.
  std::set<std::string> certificates;
  std::optional<Status> expected_verdict;

  friend bool operator==(const KnotInput&, const KnotInput&) = default;
};

struct Diagnostics {
  std::string omega;
  std::optional<long long> delta;
  std::optional<long long> b_even;
  std::optional<long long> b_odd;
  std::optional<int> tau;
  std::optional<bool> l_space_pattern;
  std::vector<std::string> irreducible_factors;
  std::vector<std::string> symmetric_factorizations;
  std::vector<std::string> certificates;
  std::vector<std::string> warnings;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct Verdict {
  std::string name;
  Status status = Status::Inconclusive;
  std::set<Method> methods;
  /// Known-knot names still to be excluded, in list order.
  std::vector<std::string> required_exclusions;
  Diagnostics diagnostics;
  std::string message;
  /// Human-readable proof trace.
  std::vector<std::string> trace;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Polynomial with coefficient c(i, j) = ranks[(i, j)]. Throws InvalidInput on
/// nonpositive dimensions.
Laurent build_omega(const RankTable& ranks);

/// Inverse of build_omega; throws InvalidInput on nonpositive coefficients.
RankTable ranks_from_omega(const Laurent& omega);

struct TwoFactorResult {
  Status status = Status::Inconclusive;  // Prime, ConditionallyPrime or Inconclusive
  std::vector<std::string> required_exclusions;
};

/// Applies only when every maximal symmetric factorization has exactly two
/// parts; each must then contain a known-knot class whose members are all
/// certified absent.
TwoFactorResult two_factor_analysis(const Laurent& omega, const std::set<std::string>& certificates);

Verdict analyze(const KnotInput& input);

struct BatchEntry {
  Verdict verdict;
  std::optional<Status> expected;

  bool matches_expected() const { return !expected || *expected == verdict.status; }
};

struct BatchSummary {
  std::vector<BatchEntry> entries;  // ordered by name
  std::map<Status, int> by_status;
  std::map<Method, int> by_method;
  int labeled = 0;
  int label_matches = 0;

  /// PRIME verdicts over all valid inputs other than the unknot, in percent.
  double percent_certified() const;
};

/// Analyzes every input; threads == 0 picks the hardware concurrency.
BatchSummary batch(const std::vector<KnotInput>& inputs, unsigned threads = 0);

/// Loads every *.json file in dir; unreadable files become INVALID entries
/// named after the file.
BatchSummary batch_directory(const std::filesystem::path& dir, unsigned threads = 0);

/// Columns name,status,methods,delta,b_even,b_odd,tau.
std::string to_csv(const BatchSummary& summary);

}  // namespace knotprime
