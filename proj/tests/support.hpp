#pragma once

// Random generators and small oracles shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "knotprime/barred.hpp"
#include "knotprime/laurent.hpp"

namespace knotprime::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial with up to `terms` terms, exponents in [-range, range]
/// and coefficients in [-coef, coef].
Laurent random_laurent(Rng& rng, int terms, int range, int coef = 5);

/// Random primitive canonical polynomial with bidegree at most (deg, deg),
/// coefficients in [-coef, coef], and at least two terms.
CanonicalForm random_canonical(Rng& rng, int deg, int coef);

/// Random knot-like complex: one free generator in grading 0 plus random
/// bars and equal-filtration pairs, at most `max_generators` generators.
FilteredComplex random_knot_complex(Rng& rng, int max_generators = 12);

/// Applies `steps` random filtered changes of basis e_u -> e_u + e_v with
/// v of equal grading and no larger filtration.
FilteredComplex random_basis_change(const FilteredComplex& c, Rng& rng, int steps);

/// Direct double loop over both supports.
Laurent naive_product(const Laurent& a, const Laurent& b);

}  // namespace knotprime::testing
