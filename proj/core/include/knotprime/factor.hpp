#pragma once

// Factorization of bivariate Laurent polynomials over the integers and
// enumeration of factorizations into parts that satisfy the knot Floer
// symmetry condition.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotprime/laurent.hpp"

namespace knotprime {

/// What to do with integer content > 1. Genuine knot Floer polynomials have
/// content 1 (their value at s = -1, t = 1 is a unit).
enum class ContentPolicy { Reject, Split };

struct IrreducibleFactorization {
  MonomialUnit unit;
  Integer content = 1;
  /// Distinct irreducible canonical factors in ascending order.
  std::vector<std::pair<CanonicalForm, int>> factors;

  std::size_t factor_count() const;
  /// unit * content * prod(factor^multiplicity)
  Laurent expand() const;
};

/// Complete factorization of a canonical form into integer-irreducible
/// canonical factors. Bivariate factors are recovered from a univariate
/// factorization of the Kronecker image t -> x, s -> x^(2*deg_t + 1).
IrreducibleFactorization factor_canonical(const CanonicalForm& c,
                                          ContentPolicy policy = ContentPolicy::Reject);

/// Canonicalizes p, then factors it; the canonicalization unit is reported.
IrreducibleFactorization factor_laurent(const Laurent& p,
                                        ContentPolicy policy = ContentPolicy::Reject);

struct SymmetricPart {
  CanonicalForm canonical;
  int beta = 0;  // t^beta * canonical is symmetric
  std::vector<CanonicalForm> constituents;

  friend bool operator==(const SymmetricPart&, const SymmetricPart&) = default;
};

struct SymmetricFactorization {
  std::vector<SymmetricPart> parts;
  /// Unit of the canonicalization of the factored polynomial.
  MonomialUnit total_unit;

  /// The Laurent placement of part k. The unit's sign and s-shift go to the
  /// last part; every other part is t^beta * canonical.
  Laurent part_polynomial(std::size_t k) const;
  /// Product of all placed parts; equals the factored polynomial.
  Laurent expand() const;

  friend bool operator==(const SymmetricFactorization&,
                         const SymmetricFactorization&) = default;
};

/// Every factorization into >= 2 symmetrically irreducible symmetric parts.
/// Throws InvalidInput for asymmetric or zero input.
std::vector<SymmetricFactorization> maximal_symmetric_factorizations(const Laurent& omega);

/// Throws InvalidInput for asymmetric input or a unit.
bool is_symmetrically_irreducible(const Laurent& omega);

/// A knot known to be determined by its knot Floer complex.
struct KnownKnot {
  std::string name;
  Laurent omega;
  CanonicalForm canonical;
  int beta;
};

/// T(2,3), -T(2,3), T(2,5), -T(2,5), 4_1 in that order.
const std::vector<KnownKnot>& known_knots();
const KnownKnot* find_known_knot(std::string_view name);

struct PartMatch {
  std::size_t part = 0;
  std::vector<std::string> knots;

  friend bool operator==(const PartMatch&, const PartMatch&) = default;
};

/// Parts whose (canonical, beta) class equals some known knot's, with every
/// knot in that class. Mirror pairs share a class.
std::vector<PartMatch> known_knot_matches(const SymmetricFactorization& f);

}  // namespace knotprime
