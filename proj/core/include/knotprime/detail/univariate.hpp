#pragma once

// Dense univariate polynomials over the integers and over prime fields, with
// complete factorization over the integers (Berlekamp modulo a small prime,
// quadratic Hensel lifting, Zassenhaus recombination).

#include <cstdint>
#include <utility>
#include <vector>

#include "knotprime/laurent.hpp"

namespace knotprime::detail {

/// Coefficients low degree first; no trailing zeros; the zero polynomial is
/// empty.
using UPoly = std::vector<Integer>;

/// Coefficients in [0, p), low degree first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

void trim(UPoly& f);
int degree(const UPoly& f);
const Integer& leading(const UPoly& f);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& f);

/// a / b when b divides a in Z[x].
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);

Integer content(const UPoly& f);
/// f / content(f), with positive leading coefficient.
UPoly primitive_part(const UPoly& f);
/// Primitive gcd with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Monic irreducible factors of f modulo p (f squarefree mod p, p prime,
/// p not dividing the leading coefficient).
std::vector<ModPoly> factor_mod_p(const UPoly& f, std::uint64_t p);

/// Irreducible factors over Z of a primitive squarefree f with f(0) != 0,
/// each primitive with positive leading coefficient.
std::vector<UPoly> factor_squarefree(const UPoly& f);

/// (primitive squarefree factor, multiplicity) with pairwise coprime factors.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

struct UFactorization {
  Integer unit;          // signed content
  int x_valuation = 0;   // power of x
  std::vector<std::pair<UPoly, int>> factors;
};

/// Complete factorization f = unit * x^v * prod g^e over Z.
UFactorization factor(const UPoly& f);

}  // namespace knotprime::detail
