#pragma once

// Filtered, graded chain complexes over the two-element field and their
// bar-complex (barcode) representatives.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotprime/laurent.hpp"

namespace knotprime {

struct Generator {
  std::string id;
  int maslov = 0;     // homological grading j
  int alexander = 0;  // filtration level i

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Arrow {
  std::string from;
  std::string to;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Generators are kept sorted by (alexander, maslov, id); the differential is
/// stored as sorted index lists.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// Throws InvalidInput on duplicate ids or arrows naming unknown ids.
  FilteredComplex(std::vector<Generator> generators, const std::vector<Arrow>& arrows);

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t k) const { return generators_[k]; }
  /// Sorted indices of the boundary of generator k.
  const std::vector<std::size_t>& boundary(std::size_t k) const { return boundary_[k]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Every arrow, ordered by (from index, to index).
  std::vector<Arrow> arrows() const;

  friend bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
    return a.generators_ == b.generators_ && a.boundary_ == b.boundary_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<std::vector<std::size_t>> boundary_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Violation {
  enum class Kind { BoundarySquared, GradingMismatch, FiltrationIncrease, NotKnotLike };
  Kind kind;
  std::vector<std::string> generators;
  std::string message;
};

/// Empty when c is a valid knot-like complex.
std::vector<Violation> validate(const FilteredComplex& c);

struct Bar {
  int top_filtration = 0;
  int bottom_filtration = 0;
  int bottom_grading = 0;

  bool even() const { return bottom_grading % 2 == 0; }
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct BarComplex {
  int tau_filtration = 0;
  std::vector<Bar> bars;  // sorted

  friend bool operator==(const BarComplex&, const BarComplex&) = default;
};

/// Persistence data of an arbitrary filtered complex.
struct Barcode {
  struct Essential {
    int filtration = 0;
    int grading = 0;
    friend auto operator<=>(const Essential&, const Essential&) = default;
  };
  std::vector<Bar> bars;             // sorted; equal-filtration pairs omitted
  std::vector<Essential> essential;  // sorted

  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Filtration-ordered column reduction.
Barcode persistence(const FilteredComplex& c);

/// Barcode read off the rank function of inclusion-induced maps on the
/// homology of the filtration sublevels. Independent of persistence().
Barcode barcode_from_ranks(const FilteredComplex& c);

/// Bar-complex of a knot-like complex. Throws InvalidInput otherwise.
BarComplex reduce(const FilteredComplex& c);
BarComplex barcode_via_ranks(const FilteredComplex& c);

/// Generators x|y with gradings and filtrations added; Leibniz differential.
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);

/// Negates gradings and filtrations and reverses every arrow.
FilteredComplex mirror(const FilteredComplex& c);

/// Associated graded homology ranks keyed by (alexander, maslov).
std::map<Monomial, int> graded_ranks(const FilteredComplex& c);

struct BarCounts {
  long long delta = 1;
  long long b_even = 0;
  long long b_odd = 0;

  /// delta == 1 + 2 (b_even + b_odd)
  bool consistent() const { return delta == 1 + 2 * (b_even + b_odd); }
  friend bool operator==(const BarCounts&, const BarCounts&) = default;
};

BarCounts counts(const BarComplex& b);

/// Connected-sum counts: delta multiplies and each parity count gains
/// (delta_a - 1)(delta_b - 1) / 4.
BarCounts predict_sum_counts(const BarCounts& a, const BarCounts& b);

enum class BarTest { Prime, Inconclusive };

/// Prime when no factorization delta = d1 * d2 with d1, d2 >= 2 satisfies
/// (d1 - 1)(d2 - 1) <= 4 min(b_even, b_odd). The unknot (delta = 1) is
/// reported inconclusive.
BarTest bar_count_test(const BarCounts& b);

/// All bars even with at least one bar: the staircase shape of L-space knots.
bool l_space_pattern(const BarCounts& b);

std::string to_string(const Violation& v);

struct BarTensorReport {
  long long cases = 0;
  long long failures = 0;
};

/// Tensors every pair of single-bar complexes with gradings and filtrations
/// in [lo, hi] and checks that the product reduces to one even and one odd
/// bar, the first starting at the sum of the bottoms and the second ending
/// at the sum of the tops.
BarTensorReport check_bar_tensor_products(int lo, int hi);

}  // namespace knotprime
