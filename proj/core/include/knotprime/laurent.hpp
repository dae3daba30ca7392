#pragma once

// Integer-coefficient Laurent polynomials in two variables.
//
// The variable s carries the Maslov grading (exponent j) and t carries the
// Alexander grading (exponent i). A term c*s^j*t^i is keyed by (i, j).

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotprime {

using Integer = boost::multiprecision::cpp_int;

/// Raised for inputs that violate an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent pair of a monomial s^maslov * t^alexander. Ordered
/// lexicographically by (alexander, maslov).
struct Monomial {
  int alexander = 0;
  int maslov = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Laurent {
 public:
  using Terms = std::map<Monomial, Integer>;

  Laurent() = default;
  explicit Laurent(Integer constant);
  explicit Laurent(Terms terms);

  /// c * s^maslov * t^alexander
  static Laurent monomial(Integer c, int alexander, int maslov);
  static Laurent one() { return Laurent(Integer(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(int alexander, int maslov) const;

  // Support bounds; undefined on the zero polynomial.
  int min_alexander() const;
  int max_alexander() const;
  int min_maslov() const;
  int max_maslov() const;

  /// Multiplies by s^dmaslov * t^dalexander.
  Laurent shifted(int dalexander, int dmaslov) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void accumulate(const Monomial& m, const Integer& c);

  Terms terms_;
};

Laurent add(const Laurent& p, const Laurent& q);
Laurent mul(const Laurent& p, const Laurent& q);

/// The involution s -> s, t -> s^-2 t^-1, i.e. (i, j) -> (-i, j - 2i) on
/// exponents.
Laurent sigma(const Laurent& p);

/// True iff c(i, j) == c(-i, j - 2i) everywhere.
bool is_symmetric(const Laurent& p);

/// A Laurent unit sign * s^maslov_shift * t^alexander_shift.
struct MonomialUnit {
  int sign = 1;
  int alexander_shift = 0;
  int maslov_shift = 0;

  Laurent as_polynomial() const;
  MonomialUnit operator*(const MonomialUnit& other) const;
  friend bool operator==(const MonomialUnit&, const MonomialUnit&) = default;
};

Laurent operator*(const MonomialUnit& u, const Laurent& p);

/// A polynomial whose minimal exponents are both zero and whose
/// lexicographically greatest monomial has a positive coefficient.
class CanonicalForm {
 public:
  /// Throws InvalidInput if `poly` is not canonical.
  explicit CanonicalForm(Laurent poly);

  const Laurent& poly() const { return poly_; }
  int alexander_degree() const { return poly_.max_alexander(); }
  int maslov_degree() const { return poly_.max_maslov(); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  /// Orders by (alexander degree, maslov degree, term list).
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);

 private:
  Laurent poly_;
};

/// p == unit * canonical. Throws InvalidInput on the zero polynomial.
std::pair<CanonicalForm, MonomialUnit> canonicalize(const Laurent& p);

/// The unique beta with t^beta * c symmetric, if any. Symmetry does not
/// depend on s-shifts, so none is returned.
std::optional<int> symmetric_placement(const CanonicalForm& c);

/// Univariate Laurent polynomial in t, keyed by exponent.
struct UnivariateLaurent {
  std::map<int, Integer> terms;

  /// Value at t = 1.
  Integer at_one() const;
  friend bool operator==(const UnivariateLaurent&,
                         const UnivariateLaurent&) = default;
};

/// Substitutes s = -1.
UnivariateLaurent specialize_alexander(const Laurent& p);

/// Value at s = 1, t = 1.
Integer evaluate_at_one(const Laurent& p);

/// Renders terms in (i desc, j desc) order, e.g. "t + s^-1 + s^-2*t^-1".
std::string to_string(const Laurent& p);
std::string to_string(const UnivariateLaurent& p);

/// Parses the format produced by to_string. Throws InvalidInput.
Laurent parse_laurent(std::string_view text);

}  // namespace knotprime
