#include "knotprime/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotprime {

Laurent::Laurent(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

Laurent::Laurent(Terms terms) {
  for (auto& [m, c] : terms) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

Laurent Laurent::monomial(Integer c, int alexander, int maslov) {
  Terms t;
  t.emplace(Monomial{alexander, maslov}, std::move(c));
  return Laurent(std::move(t));
}

Integer Laurent::coefficient(int alexander, int maslov) const {
  auto it = terms_.find(Monomial{alexander, maslov});
  return it == terms_.end() ? Integer(0) : it->second;
}

int Laurent::min_alexander() const { return terms_.begin()->first.alexander; }
int Laurent::max_alexander() const { return terms_.rbegin()->first.alexander; }

int Laurent::min_maslov() const {
  int best = terms_.begin()->first.maslov;
  for (const auto& [m, c] : terms_) best = std::min(best, m.maslov);
  return best;
}

int Laurent::max_maslov() const {
  int best = terms_.begin()->first.maslov;
  for (const auto& [m, c] : terms_) best = std::max(best, m.maslov);
  return best;
}

Laurent Laurent::shifted(int dalexander, int dmaslov) const {
  Laurent out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(),
                            Monomial{m.alexander + dalexander, m.maslov + dmaslov}, c);
  }
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Laurent::accumulate(const Monomial& m, const Integer& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.accumulate(Monomial{ma.alexander + mb.alexander, ma.maslov + mb.maslov}, ca * cb);
    }
  }
  return out;
}

Laurent add(const Laurent& p, const Laurent& q) { return p + q; }
Laurent mul(const Laurent& p, const Laurent& q) { return p * q; }

Laurent sigma(const Laurent& p) {
  Laurent::Terms out;
  for (const auto& [m, c] : p.terms()) {
    out.emplace(Monomial{-m.alexander, m.maslov - 2 * m.alexander}, c);
  }
  return Laurent(std::move(out));
}

bool is_symmetric(const Laurent& p) {
  for (const auto& [m, c] : p.terms()) {
    if (p.coefficient(-m.alexander, m.maslov - 2 * m.alexander) != c) return false;
  }
  return true;
}

Laurent MonomialUnit::as_polynomial() const {
  return Laurent::monomial(Integer(sign), alexander_shift, maslov_shift);
}

MonomialUnit MonomialUnit::operator*(const MonomialUnit& other) const {
  return {sign * other.sign, alexander_shift + other.alexander_shift,
          maslov_shift + other.maslov_shift};
}

Laurent operator*(const MonomialUnit& u, const Laurent& p) {
  Laurent out = p.shifted(u.alexander_shift, u.maslov_shift);
  return u.sign < 0 ? -out : out;
}

CanonicalForm::CanonicalForm(Laurent poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw InvalidInput("zero polynomial has no canonical form");
  if (poly_.min_alexander() != 0 || poly_.min_maslov() != 0) {
    throw InvalidInput("canonical form must have minimal exponents zero: " + to_string(poly_));
  }
  if (poly_.terms().rbegin()->second < 0) {
    throw InvalidInput("canonical form must have a positive leading coefficient: " +
                       to_string(poly_));
  }
}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  auto key = [](const CanonicalForm& c) {
    return std::pair{c.alexander_degree(), c.maslov_degree()};
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return std::lexicographical_compare(a.poly().terms().begin(), a.poly().terms().end(),
                                      b.poly().terms().begin(), b.poly().terms().end());
}

std::pair<CanonicalForm, MonomialUnit> canonicalize(const Laurent& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial has no canonical form");
  MonomialUnit unit{p.terms().rbegin()->second < 0 ? -1 : 1, p.min_alexander(),
                    p.min_maslov()};
  Laurent c = p.shifted(-unit.alexander_shift, -unit.maslov_shift);
  if (unit.sign < 0) c = -c;
  return {CanonicalForm(std::move(c)), unit};
}

std::optional<int> symmetric_placement(const CanonicalForm& c) {
  const Laurent& p = c.poly();
  int span = p.min_alexander() + p.max_alexander();
  if (span % 2 != 0) return std::nullopt;
  int beta = -span / 2;
  if (!is_symmetric(p.shifted(beta, 0))) return std::nullopt;
  return beta;
}

Integer UnivariateLaurent::at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms) sum += c;
  return sum;
}

UnivariateLaurent specialize_alexander(const Laurent& p) {
  UnivariateLaurent out;
  for (const auto& [m, c] : p.terms()) {
    Integer v = (m.maslov % 2 == 0) ? c : Integer(-c);
    auto& slot = out.terms[m.alexander];
    slot += v;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer evaluate_at_one(const Laurent& p) {
  Integer sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c;
  return sum;
}

namespace {

// Appends one term "c*s^j*t^i" with the sign handled by the caller.
void render_term(std::ostringstream& os, const Integer& magnitude, int alexander,
                 int maslov) {
  bool has_var = alexander != 0 || maslov != 0;
  bool wrote = false;
  if (!has_var || magnitude != 1) {
    os << magnitude;
    wrote = true;
  }
  auto var = [&](char name, int e) {
    if (e == 0) return;
    if (wrote) os << '*';
    os << name;
    if (e != 1) os << '^' << e;
    wrote = true;
  };
  var('s', maslov);
  var('t', alexander);
}

}  // namespace

std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    render_term(os, c < 0 ? Integer(-c) : c, m.alexander, m.maslov);
    first = false;
  }
  return os.str();
}

std::string to_string(const UnivariateLaurent& p) {
  Laurent::Terms terms;
  for (const auto& [e, c] : p.terms) terms.emplace(Monomial{e, 0}, c);
  return to_string(Laurent(std::move(terms)));
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  Laurent parse() {
    Laurent out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  Laurent parse_term(int sign) {
    Integer coeff = 1;
    int alexander = 0;
    int maslov = 0;
    bool need_factor = true;
    while (need_factor) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_natural();
      } else if (c == 's' || c == 't') {
        ++pos_;
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = parse_exponent();
        }
        (c == 's' ? maslov : alexander) += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return Laurent::monomial(sign * coeff, alexander, maslov);
  }

  Integer parse_natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    skip_space();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    Integer v = parse_natural();
    if (v > 1'000'000) fail("exponent out of range");
    int e = v.convert_to<int>();
    return negative ? -e : e;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse polynomial at offset " + std::to_string(pos_) + ": " +
                       what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent parse_laurent(std::string_view text) { return Scanner(text).parse(); }

}  // namespace knotprime
