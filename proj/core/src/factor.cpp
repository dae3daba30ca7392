#include "knotprime/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "knotprime/detail/univariate.hpp"

namespace knotprime {

using detail::UPoly;

std::size_t IrreducibleFactorization::factor_count() const {
  std::size_t n = 0;
  for (const auto& [f, e] : factors) n += static_cast<std::size_t>(e);
  return n;
}

Laurent IrreducibleFactorization::expand() const {
  Laurent out(content);
  for (const auto& [f, e] : factors) {
    for (int k = 0; k < e; ++k) out = out * f.poly();
  }
  return unit * out;
}

namespace {

// Kronecker substitution s^j t^i -> x^(j*width + i) for polynomials with
// nonnegative exponents and t-degree < width.
class Kronecker {
 public:
  explicit Kronecker(int width) : width_(width) {}

  UPoly image(const Laurent& p) const {
    UPoly out;
    for (const auto& [m, c] : p.terms()) {
      std::size_t k = static_cast<std::size_t>(m.maslov) * width_ + m.alexander;
      if (out.size() <= k) out.resize(k + 1);
      out[k] = c;
    }
    return out;
  }

  // Inverse image if every exponent residue is at most max_alexander.
  std::optional<Laurent> preimage(const UPoly& f, int max_alexander) const {
    Laurent::Terms terms;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] == 0) continue;
      int i = static_cast<int>(k % width_);
      int j = static_cast<int>(k / width_);
      if (i > max_alexander) return std::nullopt;
      terms.emplace(Monomial{i, j}, f[k]);
    }
    return Laurent(std::move(terms));
  }

 private:
  std::size_t width_;
};

Integer bivariate_content(const Laurent& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
  return g;
}

// r / g when g divides r; both have nonnegative exponents.
std::optional<Laurent> divide_exact(const Laurent& r, const Laurent& g, const Kronecker& k,
                                    int max_alexander) {
  auto q_image = detail::divide_exact(k.image(r), k.image(g));
  if (!q_image) return std::nullopt;
  auto q = k.preimage(*q_image, max_alexander);
  if (!q || q->is_zero() || (*q) * g != r) return std::nullopt;
  return q;
}

// Primitive step d with every support point equal to base + k*d, k >= 0,
// when the support is collinear.
struct Line {
  Monomial base;
  Monomial step;
};

std::optional<Line> collinear_support(const Laurent& p) {
  const Monomial first = p.terms().begin()->first;
  std::optional<Monomial> step;
  for (const auto& [m, c] : p.terms()) {
    int di = m.alexander - first.alexander;
    int dj = m.maslov - first.maslov;
    if (di == 0 && dj == 0) continue;
    if (!step) {
      int g = std::gcd(di, dj);
      step = Monomial{di / g, dj / g};
      if (step->alexander < 0 || (step->alexander == 0 && step->maslov < 0)) {
        step = Monomial{-step->alexander, -step->maslov};
      }
    } else if (di * step->maslov != dj * step->alexander) {
      return std::nullopt;
    }
  }
  if (!step) return std::nullopt;
  // The map order is lexicographic in (alexander, maslov), which agrees with
  // the order along the line, so the first term is the base point.
  return Line{first, *step};
}

// Polynomials supported on a line are polynomials in one monomial, and so are
// all their factors (a segment only decomposes into parallel segments).
std::vector<std::pair<CanonicalForm, int>> factor_on_line(const Laurent& p, const Line& line) {
  UPoly image;
  for (const auto& [m, c] : p.terms()) {
    int k = line.step.alexander != 0 ? (m.alexander - line.base.alexander) / line.step.alexander
                                     : (m.maslov - line.base.maslov) / line.step.maslov;
    if (image.size() <= static_cast<std::size_t>(k)) image.resize(k + 1);
    image[k] = c;
  }
  std::vector<std::pair<CanonicalForm, int>> out;
  for (const auto& [g, e] : detail::factor(image).factors) {
    Laurent h;
    for (std::size_t k = 0; k < g.size(); ++k) {
      int kk = static_cast<int>(k);
      h += Laurent::monomial(g[k], kk * line.step.alexander, kk * line.step.maslov);
    }
    out.emplace_back(canonicalize(h).first, e);
  }
  return out;
}

}  // namespace

IrreducibleFactorization factor_canonical(const CanonicalForm& c, ContentPolicy policy) {
  IrreducibleFactorization out;
  Laurent rest = c.poly();
  Integer cont = bivariate_content(rest);
  if (cont != 1) {
    if (policy == ContentPolicy::Reject) {
      throw InvalidInput("polynomial has integer content " + cont.str() +
                         "; knot Floer polynomials have content 1");
    }
    out.content = cont;
    Laurent::Terms terms;
    for (const auto& [m, v] : rest.terms()) terms.emplace(m, v / cont);
    rest = Laurent(std::move(terms));
  }
  if (rest == Laurent::one()) return out;

  if (auto line = collinear_support(rest)) {
    out.factors = factor_on_line(rest, *line);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  }

  const int max_t = rest.max_alexander();
  const Kronecker kron(2 * max_t + 1);
  const auto univariate = detail::factor(kron.image(rest));

  std::vector<const UPoly*> items;
  for (const auto& [g, e] : univariate.factors) {
    for (int k = 0; k < e; ++k) items.push_back(&g);
  }
  int valuation = univariate.x_valuation;

  std::vector<CanonicalForm> found;
  std::size_t size = 1;
  while (2 * size <= items.size()) {
    bool hit = false;
    std::vector<bool> pick(items.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      UPoly product = {Integer(1)};
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (pick[k]) product = detail::mul(product, *items[k]);
      }
      const int rest_t = rest.max_alexander();
      for (int shift = 0; shift <= valuation && !hit; ++shift) {
        for (int sign : {1, -1}) {
          UPoly shifted(static_cast<std::size_t>(shift), Integer(0));
          for (const auto& v : product) shifted.push_back(sign * v);
          auto g = kron.preimage(shifted, rest_t);
          if (!g || g->min_alexander() != 0 || g->min_maslov() != 0) continue;
          auto q = divide_exact(rest, *g, kron, rest_t);
          if (!q) continue;
          found.push_back(canonicalize(*g).first);
          rest = *q;
          valuation -= shift;
          std::vector<const UPoly*> kept;
          for (std::size_t k = 0; k < items.size(); ++k) {
            if (!pick[k]) kept.push_back(items[k]);
          }
          items = std::move(kept);
          hit = true;
          break;
        }
      }
      if (hit) break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!hit) ++size;
  }
  if (rest.size() > 1 || rest.terms().begin()->first != Monomial{0, 0}) {
    found.push_back(canonicalize(rest).first);
  } else if (rest.terms().begin()->second < 0) {
    // Products of canonical forms are canonical, so this cannot happen for
    // canonical input.
    out.unit.sign = -out.unit.sign;
  }

  std::sort(found.begin(), found.end());
  for (auto& f : found) {
    if (!out.factors.empty() && out.factors.back().first == f) {
      ++out.factors.back().second;
    } else {
      out.factors.emplace_back(std::move(f), 1);
    }
  }
  return out;
}

IrreducibleFactorization factor_laurent(const Laurent& p, ContentPolicy policy) {
  auto [canonical, unit] = canonicalize(p);
  auto out = factor_canonical(canonical, policy);
  out.unit = unit * out.unit;
  return out;
}

Laurent SymmetricFactorization::part_polynomial(std::size_t k) const {
  const auto& part = parts.at(k);
  Laurent out = part.canonical.poly().shifted(part.beta, 0);
  if (k + 1 == parts.size()) {
    out = MonomialUnit{total_unit.sign, 0, total_unit.maslov_shift} * out;
  }
  return out;
}

Laurent SymmetricFactorization::expand() const {
  Laurent out = Laurent::one();
  for (std::size_t k = 0; k < parts.size(); ++k) out = out * part_polynomial(k);
  return out;
}

namespace {

using Counts = std::vector<int>;

class PartitionSearch {
 public:
  explicit PartitionSearch(const IrreducibleFactorization& f) {
    for (const auto& [g, e] : f.factors) {
      factors_.push_back(g);
      total_.push_back(e);
    }
  }

  std::vector<std::vector<Counts>> run() {
    std::set<std::vector<Counts>> seen;
    std::vector<Counts> current;
    recurse(total_, current, seen);
    std::vector<std::vector<Counts>> out;
    for (const auto& p : seen) {
      if (p.size() >= 2) out.push_back(p);
    }
    return out;
  }

  const CanonicalForm& product(const Counts& group) { return entry(group).product; }
  int beta(const Counts& group) { return *entry(group).beta; }

  std::vector<CanonicalForm> constituents(const Counts& group) const {
    std::vector<CanonicalForm> out;
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (int e = 0; e < group[k]; ++e) out.push_back(factors_[k]);
    }
    return out;
  }

 private:
  struct Entry {
    CanonicalForm product;
    std::optional<int> beta;
    std::optional<bool> irreducible;
  };

  Entry& entry(const Counts& group) {
    auto it = memo_.find(group);
    if (it != memo_.end()) return it->second;
    Laurent prod = Laurent::one();
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (int e = 0; e < group[k]; ++e) prod = prod * factors_[k].poly();
    }
    CanonicalForm c(std::move(prod));
    auto beta = symmetric_placement(c);
    return memo_.emplace(group, Entry{std::move(c), beta, std::nullopt}).first->second;
  }

  bool placeable(const Counts& group) { return entry(group).beta.has_value(); }

  // Placeable and not splittable into two placeable groups.
  bool symmetrically_irreducible(const Counts& group) {
    if (!placeable(group)) return false;
    if (auto known = entry(group).irreducible) return *known;
    bool irreducible = true;
    for_each_sub(group, [&](const Counts& sub) {
      if (!irreducible || sub == group || is_empty(sub)) return;
      Counts other = minus(group, sub);
      if (placeable(sub) && placeable(other)) irreducible = false;
    });
    entry(group).irreducible = irreducible;
    return irreducible;
  }

  void recurse(const Counts& rest, std::vector<Counts>& current,
               std::set<std::vector<Counts>>& seen) {
    if (is_empty(rest)) {
      auto sorted = current;
      std::sort(sorted.begin(), sorted.end());
      seen.insert(std::move(sorted));
      return;
    }
    std::size_t first = 0;
    while (rest[first] == 0) ++first;
    for_each_sub(rest, [&](const Counts& group) {
      if (group[first] == 0) return;
      if (!symmetrically_irreducible(group)) return;
      current.push_back(group);
      recurse(minus(rest, group), current, seen);
      current.pop_back();
    });
  }

  template <typename F>
  static void for_each_sub(const Counts& bound, F&& visit) {
    Counts sub(bound.size(), 0);
    while (true) {
      visit(sub);
      std::size_t k = 0;
      while (k < sub.size() && sub[k] == bound[k]) sub[k++] = 0;
      if (k == sub.size()) return;
      ++sub[k];
    }
  }

  static bool is_empty(const Counts& c) {
    return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
  }

  static Counts minus(const Counts& a, const Counts& b) {
    Counts out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
  }

  std::vector<CanonicalForm> factors_;
  Counts total_;
  std::map<Counts, Entry> memo_;
};

bool part_less(const SymmetricPart& a, const SymmetricPart& b) {
  if (a.canonical == b.canonical) return a.beta < b.beta;
  return a.canonical < b.canonical;
}

}  // namespace

std::vector<SymmetricFactorization> maximal_symmetric_factorizations(const Laurent& omega) {
  if (omega.is_zero()) throw InvalidInput("zero polynomial");
  if (!is_symmetric(omega)) {
    throw InvalidInput("polynomial violates the symmetry condition: " + to_string(omega));
  }
  auto factorization = factor_laurent(omega);
  if (factorization.factor_count() < 2) return {};

  PartitionSearch search(factorization);
  std::vector<SymmetricFactorization> out;
  for (const auto& groups : search.run()) {
    SymmetricFactorization f;
    f.total_unit = factorization.unit;
    for (const auto& g : groups) {
      f.parts.push_back({search.product(g), search.beta(g), search.constituents(g)});
    }
    std::sort(f.parts.begin(), f.parts.end(), part_less);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                        b.parts.end(), part_less);
  });
  return out;
}

bool is_symmetrically_irreducible(const Laurent& omega) {
  if (omega.size() == 1 && abs(omega.terms().begin()->second) == 1) {
    throw InvalidInput("a unit has no irreducibility status");
  }
  return maximal_symmetric_factorizations(omega).empty();
}

const std::vector<KnownKnot>& known_knots() {
  static const std::vector<KnownKnot> knots = [] {
    const std::pair<const char*, const char*> table[] = {
        {"T(2,3)", "t + s^-1 + s^-2*t^-1"},
        {"-T(2,3)", "s^2*t + s + t^-1"},
        {"T(2,5)", "t^2 + s^-1*t + s^-2 + s^-3*t^-1 + s^-4*t^-2"},
        {"-T(2,5)", "s^4*t^2 + s^3*t + s^2 + s*t^-1 + t^-2"},
        {"4_1", "s*t + 3 + s^-1*t^-1"},
    };
    std::vector<KnownKnot> out;
    for (const auto& [name, text] : table) {
      Laurent omega = parse_laurent(text);
      auto [canonical, unit] = canonicalize(omega);
      int beta = symmetric_placement(canonical).value();
      out.push_back({name, std::move(omega), std::move(canonical), beta});
    }
    return out;
  }();
  return knots;
}

const KnownKnot* find_known_knot(std::string_view name) {
  for (const auto& k : known_knots()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

std::vector<PartMatch> known_knot_matches(const SymmetricFactorization& f) {
  std::vector<PartMatch> out;
  for (std::size_t k = 0; k < f.parts.size(); ++k) {
    PartMatch match{k, {}};
    for (const auto& knot : known_knots()) {
      if (knot.canonical == f.parts[k].canonical && knot.beta == f.parts[k].beta) {
        match.knots.push_back(knot.name);
      }
    }
    if (!match.knots.empty()) out.push_back(std::move(match));
  }
  return out;
}

}  // namespace knotprime
