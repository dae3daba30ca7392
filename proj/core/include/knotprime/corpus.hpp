#pragma once

// Hand-built knot Floer data for small knots, and the labeled regression
// corpus assembled from them.

#include <string>
#include <vector>

#include "knotprime/barred.hpp"
#include "knotprime/engine.hpp"

namespace knotprime::corpus {

/// Staircase complex of the torus knot T(2, n), n odd >= 1: generators at
/// (alexander (n-1)/2 - k, maslov -k) for k = 0..n-1 with arrows x_{2m+1} ->
/// x_{2m+2}.
FilteredComplex torus_staircase(int n);

/// Figure-eight: a free generator plus two bars of opposite parity.
FilteredComplex figure_eight_complex();

/// Unknot: one generator at (0, 0).
FilteredComplex unknot_complex();

/// Knot input with ranks read off the complex.
KnotInput from_complex(std::string name, const FilteredComplex& c);

struct Fixture {
  std::string file;  // file name in the fixtures directory
  KnotInput input;
};

/// The bundled corpus, each entry labeled with its expected verdict.
std::vector<Fixture> builtin();

/// The prime entries of the corpus that carry complexes.
std::vector<KnotInput> prime_fixtures();

}  // namespace knotprime::corpus
