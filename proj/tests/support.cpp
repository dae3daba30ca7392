#include "support.hpp"

#include <string>

#include "knotprime/corpus.hpp"

namespace knotprime::testing {

Laurent random_laurent(Rng& rng, int terms, int range, int coef) {
  Laurent out;
  int n = rng.uniform(1, terms);
  for (int k = 0; k < n; ++k) {
    out += Laurent::monomial(rng.uniform(-coef, coef), rng.uniform(-range, range),
                             rng.uniform(-range, range));
  }
  return out;
}

CanonicalForm random_canonical(Rng& rng, int deg, int coef) {
  for (;;) {
    Laurent p;
    int n = rng.uniform(2, 6);
    for (int k = 0; k < n; ++k) {
      p += Laurent::monomial(rng.uniform(-coef, coef), rng.uniform(0, deg), rng.uniform(0, deg));
    }
    if (p.size() < 2) continue;
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, c);
    if (g != 1) continue;
    return canonicalize(p).first;
  }
}

FilteredComplex random_knot_complex(Rng& rng, int max_generators) {
  std::vector<Generator> gens;
  std::vector<Arrow> arrows;
  if (rng.coin()) {
    // Start from a staircase, possibly mirrored.
    int n = 2 * rng.uniform(0, (max_generators - 1) / 2) + 1;
    auto stairs = corpus::torus_staircase(n);
    if (rng.coin()) stairs = mirror(stairs);
    gens = stairs.generators();
    arrows = stairs.arrows();
  } else {
    gens.push_back({"z", 0, rng.uniform(-3, 3)});
  }
  int budget = (max_generators - static_cast<int>(gens.size())) / 2;
  int pairs = rng.uniform(0, budget);
  for (int k = 0; k < pairs; ++k) {
    int grading = rng.uniform(-2, 1);
    int bottom = rng.uniform(-3, 3);
    int top = bottom + (rng.uniform(0, 4) == 0 ? 0 : rng.uniform(1, 4));
    std::string x = "p" + std::to_string(k), y = "q" + std::to_string(k);
    gens.push_back({x, grading + 1, top});
    gens.push_back({y, grading, bottom});
    arrows.push_back({x, y});
  }
  return FilteredComplex(std::move(gens), arrows);
}

FilteredComplex random_basis_change(const FilteredComplex& c, Rng& rng, int steps) {
  const std::size_t n = c.size();
  // d[i][j] == 1 when e_i appears in the boundary of e_j.
  std::vector<std::vector<char>> d(n, std::vector<char>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (auto i : c.boundary(j)) d[i][j] = 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& gu = c.generator(u);
      const auto& gv = c.generator(v);
      if (u != v && gu.maslov == gv.maslov && gv.alexander <= gu.alexander) moves.emplace_back(u, v);
    }
  }
  for (int s = 0; s < steps && !moves.empty(); ++s) {
    auto [u, v] = moves[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(moves.size()) - 1))];
    // New basis e_u + e_v: conjugate by I + E_{v,u}.
    for (std::size_t i = 0; i < n; ++i) d[i][u] ^= d[i][v];
    for (std::size_t j = 0; j < n; ++j) d[v][j] ^= d[u][j];
  }
  std::vector<Arrow> arrows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][j]) arrows.push_back({c.generator(j).id, c.generator(i).id});
    }
  }
  return FilteredComplex(c.generators(), arrows);
}

Laurent naive_product(const Laurent& a, const Laurent& b) {
  std::map<Monomial, Integer> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      acc[{ma.alexander + mb.alexander, ma.maslov + mb.maslov}] += ca * cb;
    }
  }
  Laurent out;
  for (const auto& [m, c] : acc) {
    if (c != 0) out += Laurent::monomial(c, m.alexander, m.maslov);
  }
  return out;
}

}  // namespace knotprime::testing
