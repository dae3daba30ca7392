#include "knotprime/barred.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "knotprime/detail/bitvector.hpp"

namespace knotprime {

using detail::BitVector;

FilteredComplex::FilteredComplex(std::vector<Generator> generators,
                                 const std::vector<Arrow>& arrows) {
  std::sort(generators.begin(), generators.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.alexander, a.maslov, a.id) < std::tie(b.alexander, b.maslov, b.id);
  });
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!index_.emplace(generators[k].id, k).second) {
      throw InvalidInput("duplicate generator id '" + generators[k].id + "'");
    }
  }
  generators_ = std::move(generators);
  std::vector<std::set<std::size_t>> targets(generators_.size());
  for (const auto& arrow : arrows) {
    auto from = index_of(arrow.from);
    auto to = index_of(arrow.to);
    if (!from) throw InvalidInput("differential names unknown generator '" + arrow.from + "'");
    if (!to) throw InvalidInput("differential names unknown generator '" + arrow.to + "'");
    // Coefficients live in the two-element field: a repeated arrow cancels.
    if (!targets[*from].insert(*to).second) targets[*from].erase(*to);
  }
  boundary_.reserve(targets.size());
  for (auto& t : targets) boundary_.emplace_back(t.begin(), t.end());
}

std::optional<std::size_t> FilteredComplex::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Arrow> FilteredComplex::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t k = 0; k < size(); ++k) {
    for (auto t : boundary_[k]) out.push_back({generators_[k].id, generators_[t].id});
  }
  return out;
}

namespace {

BitVector boundary_vector(const FilteredComplex& c, std::size_t k) {
  BitVector v(c.size());
  for (auto t : c.boundary(k)) v.flip(t);
  return v;
}

// Rank over the two-element field.
std::size_t rank_of(std::vector<BitVector> vectors) {
  std::map<std::size_t, BitVector> pivots;
  std::size_t rank = 0;
  for (auto& v : vectors) {
    while (auto top = v.highest()) {
      auto it = pivots.find(*top);
      if (it == pivots.end()) {
        pivots.emplace(*top, std::move(v));
        ++rank;
        break;
      }
      v ^= it->second;
    }
  }
  return rank;
}

// Basis of the kernel of the differential restricted to the given generators.
std::vector<BitVector> kernel_basis(const FilteredComplex& c,
                                    const std::vector<std::size_t>& domain) {
  std::map<std::size_t, std::pair<BitVector, BitVector>> pivots;  // image, combination
  std::vector<BitVector> kernel;
  for (auto k : domain) {
    BitVector image = boundary_vector(c, k);
    BitVector combination(c.size());
    combination.flip(k);
    bool reduced_to_zero = true;
    while (auto top = image.highest()) {
      auto it = pivots.find(*top);
      if (it == pivots.end()) {
        pivots.emplace(*top, std::pair{std::move(image), std::move(combination)});
        reduced_to_zero = false;
        break;
      }
      image ^= it->second.first;
      combination ^= it->second.second;
    }
    if (reduced_to_zero) kernel.push_back(std::move(combination));
  }
  return kernel;
}

BarComplex to_bar_complex(Barcode code) {
  if (code.essential.size() != 1 || code.essential.front().grading != 0) {
    throw InvalidInput("complex is not knot-like: homology must be one-dimensional in grading 0");
  }
  return {code.essential.front().filtration, std::move(code.bars)};
}

[[noreturn]] void throw_violations(const std::vector<Violation>& violations) {
  std::string message = "invalid complex:";
  for (const auto& v : violations) message += "\n  " + to_string(v);
  throw InvalidInput(message);
}

}  // namespace

std::vector<Violation> validate(const FilteredComplex& c) {
  std::vector<Violation> out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& gx = c.generator(x);
    for (auto y : c.boundary(x)) {
      const auto& gy = c.generator(y);
      if (gy.maslov != gx.maslov - 1) {
        out.push_back({Violation::Kind::GradingMismatch, {gx.id, gy.id},
                       "arrow " + gx.id + " -> " + gy.id + " does not lower the grading by 1"});
      }
      if (gy.alexander > gx.alexander) {
        out.push_back({Violation::Kind::FiltrationIncrease, {gx.id, gy.id},
                       "arrow " + gx.id + " -> " + gy.id + " increases the filtration"});
      }
    }
    BitVector square(c.size());
    for (auto y : c.boundary(x)) {
      for (auto z : c.boundary(y)) square.flip(z);
    }
    if (!square.none()) {
      Violation v{Violation::Kind::BoundarySquared, {gx.id}, ""};
      for (std::size_t z = 0; z < c.size(); ++z) {
        if (square.test(z)) v.generators.push_back(c.generator(z).id);
      }
      v.message = "boundary of boundary of " + gx.id + " is nonzero";
      out.push_back(std::move(v));
    }
  }
  if (!out.empty()) return out;

  // Homology in grading g has dimension |C_g| - rank d_g - rank d_{g+1}.
  std::map<int, std::vector<BitVector>> images;
  std::map<int, int> dims;
  for (std::size_t x = 0; x < c.size(); ++x) {
    images[c.generator(x).maslov].push_back(boundary_vector(c, x));
    ++dims[c.generator(x).maslov];
  }
  std::map<int, std::size_t> ranks;
  for (auto& [g, vs] : images) ranks[g] = rank_of(vs);
  long long total = 0;
  long long grading_zero = 0;
  for (const auto& [g, n] : dims) {
    long long h = n - static_cast<long long>(ranks[g]) -
                  static_cast<long long>(ranks.count(g + 1) ? ranks[g + 1] : 0);
    total += h;
    if (g == 0) grading_zero = h;
  }
  if (total != 1 || grading_zero != 1) {
    std::vector<std::string> ids;
    for (const auto& g : c.generators()) ids.push_back(g.id);
    out.push_back({Violation::Kind::NotKnotLike, std::move(ids),
                   "homology has total dimension " + std::to_string(total) +
                       " and dimension " + std::to_string(grading_zero) +
                       " in grading 0 (expected 1 and 1)"});
  }
  return out;
}

Barcode persistence(const FilteredComplex& c) {
  // Generators are already in a filtration-compatible order in which every
  // boundary element precedes its source.
  const std::size_t n = c.size();
  std::vector<BitVector> columns;
  columns.reserve(n);
  for (std::size_t k = 0; k < n; ++k) columns.push_back(boundary_vector(c, k));
  std::vector<std::optional<std::size_t>> owner(n);
  std::vector<bool> paired(n, false);
  Barcode out;
  for (std::size_t j = 0; j < n; ++j) {
    auto& col = columns[j];
    while (auto low = col.highest()) {
      if (!owner[*low]) break;
      col ^= columns[*owner[*low]];
    }
    auto low = col.highest();
    if (!low) continue;
    owner[*low] = j;
    paired[*low] = true;
    paired[j] = true;
    const auto& top = c.generator(j);
    const auto& bottom = c.generator(*low);
    if (bottom.alexander < top.alexander) {
      out.bars.push_back({top.alexander, bottom.alexander, bottom.maslov});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!paired[k]) out.essential.push_back({c.generator(k).alexander, c.generator(k).maslov});
  }
  std::sort(out.bars.begin(), out.bars.end());
  std::sort(out.essential.begin(), out.essential.end());
  return out;
}

Barcode barcode_from_ranks(const FilteredComplex& c) {
  std::set<int> level_set;
  std::set<int> gradings;
  for (const auto& g : c.generators()) {
    level_set.insert(g.alexander);
    gradings.insert(g.maslov);
  }
  const std::vector<int> levels(level_set.begin(), level_set.end());
  const int top = static_cast<int>(levels.size()) - 1;

  Barcode out;
  for (int g : gradings) {
    // Sublevel cycles in grading g and sublevel boundaries from grading g + 1,
    // indexed by level; index -1 is the empty sublevel.
    auto sublevel = [&](int grading, int level) {
      std::vector<std::size_t> idx;
      if (level < 0) return idx;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& gen = c.generator(k);
        if (gen.maslov == grading && gen.alexander <= levels[level]) idx.push_back(k);
      }
      return idx;
    };
    std::vector<std::vector<BitVector>> cycles(levels.size() + 1);
    std::vector<std::vector<BitVector>> boundaries(levels.size() + 1);
    for (int a = -1; a <= top; ++a) {
      cycles[a + 1] = kernel_basis(c, sublevel(g, a));
      for (auto k : sublevel(g + 1, a)) boundaries[a + 1].push_back(boundary_vector(c, k));
    }
    // Rank of H_g(C_a) -> H_g(C_b) for a <= b.
    auto rank_map = [&](int a, int b) -> long long {
      if (a < 0) return 0;
      std::vector<BitVector> both = cycles[a + 1];
      both.insert(both.end(), boundaries[b + 1].begin(), boundaries[b + 1].end());
      return static_cast<long long>(rank_of(std::move(both))) -
             static_cast<long long>(rank_of(boundaries[b + 1]));
    };
    for (int a = 0; a <= top; ++a) {
      for (int b = a + 1; b <= top; ++b) {
        long long mult = rank_map(a, b - 1) - rank_map(a - 1, b - 1) - rank_map(a, b) +
                         rank_map(a - 1, b);
        for (long long m = 0; m < mult; ++m) out.bars.push_back({levels[b], levels[a], g});
      }
      long long essential = rank_map(a, top) - rank_map(a - 1, top);
      for (long long m = 0; m < essential; ++m) out.essential.push_back({levels[a], g});
    }
  }
  std::sort(out.bars.begin(), out.bars.end());
  std::sort(out.essential.begin(), out.essential.end());
  return out;
}

BarComplex reduce(const FilteredComplex& c) {
  auto violations = validate(c);
  if (!violations.empty()) throw_violations(violations);
  return to_bar_complex(persistence(c));
}

BarComplex barcode_via_ranks(const FilteredComplex& c) {
  auto violations = validate(c);
  if (!violations.empty()) throw_violations(violations);
  return to_bar_complex(barcode_from_ranks(c));
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
  std::vector<Generator> gens;
  gens.reserve(a.size() * b.size());
  auto pair_id = [&](std::size_t x, std::size_t y) {
    return a.generator(x).id + "|" + b.generator(y).id;
  };
  std::vector<Arrow> arrows;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      const auto& gx = a.generator(x);
      const auto& gy = b.generator(y);
      gens.push_back({pair_id(x, y), gx.maslov + gy.maslov, gx.alexander + gy.alexander});
      for (auto dx : a.boundary(x)) arrows.push_back({pair_id(x, y), pair_id(dx, y)});
      for (auto dy : b.boundary(y)) arrows.push_back({pair_id(x, y), pair_id(x, dy)});
    }
  }
  return FilteredComplex(std::move(gens), arrows);
}

FilteredComplex mirror(const FilteredComplex& c) {
  std::vector<Generator> gens;
  for (const auto& g : c.generators()) gens.push_back({g.id, -g.maslov, -g.alexander});
  std::vector<Arrow> arrows;
  for (const auto& arrow : c.arrows()) arrows.push_back({arrow.to, arrow.from});
  return FilteredComplex(std::move(gens), arrows);
}

std::map<Monomial, int> graded_ranks(const FilteredComplex& c) {
  // Rank of the within-level part of the differential, by source (i, j).
  std::map<Monomial, std::vector<BitVector>> images;
  std::map<Monomial, int> dims;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& gx = c.generator(x);
    BitVector v(c.size());
    for (auto y : c.boundary(x)) {
      if (c.generator(y).alexander == gx.alexander) v.flip(y);
    }
    Monomial key{gx.alexander, gx.maslov};
    images[key].push_back(std::move(v));
    ++dims[key];
  }
  std::map<Monomial, long long> ranks;
  for (auto& [key, vs] : images) ranks[key] = static_cast<long long>(rank_of(vs));
  std::map<Monomial, int> out;
  for (const auto& [key, n] : dims) {
    Monomial above{key.alexander, key.maslov + 1};
    long long h = n - ranks[key] - (ranks.count(above) ? ranks[above] : 0);
    if (h > 0) out.emplace(key, static_cast<int>(h));
  }
  return out;
}

BarCounts counts(const BarComplex& b) {
  BarCounts out;
  out.delta = 1 + 2 * static_cast<long long>(b.bars.size());
  for (const auto& bar : b.bars) (bar.even() ? out.b_even : out.b_odd) += 1;
  return out;
}

BarCounts predict_sum_counts(const BarCounts& a, const BarCounts& b) {
  const long long cross = (a.delta - 1) * (b.delta - 1) / 4;
  return {a.delta * b.delta, a.b_even + b.b_even + cross, a.b_odd + b.b_odd + cross};
}

BarTest bar_count_test(const BarCounts& b) {
  if (b.delta <= 1) return BarTest::Inconclusive;
  const long long slack = 4 * std::min(b.b_even, b.b_odd);
  for (long long d1 = 2; d1 * d1 <= b.delta; ++d1) {
    if (b.delta % d1 != 0) continue;
    long long d2 = b.delta / d1;
    if ((d1 - 1) * (d2 - 1) <= slack) return BarTest::Inconclusive;
  }
  return BarTest::Prime;
}

bool l_space_pattern(const BarCounts& b) { return b.delta > 1 && b.b_odd == 0; }

std::string to_string(const Violation& v) { return v.message; }

BarTensorReport check_bar_tensor_products(int lo, int hi) {
  struct Shape {
    int grading, bottom, top;
  };
  std::vector<Shape> shapes;
  for (int g = lo; g < hi; ++g) {
    for (int bottom = lo; bottom <= hi; ++bottom) {
      for (int top = bottom + 1; top <= hi; ++top) shapes.push_back({g, bottom, top});
    }
  }
  auto complex_of = [](const Shape& s) {
    return FilteredComplex({{"B", s.grading, s.bottom}, {"T", s.grading + 1, s.top}},
                           {{"T", "B"}});
  };
  BarTensorReport report;
  for (const auto& s1 : shapes) {
    for (const auto& s2 : shapes) {
      ++report.cases;
      Barcode code = persistence(tensor(complex_of(s1), complex_of(s2)));
      const int g = s1.grading + s2.grading;
      const int cross_low = std::min(s1.top + s2.bottom, s1.bottom + s2.top);
      const int cross_high = std::max(s1.top + s2.bottom, s1.bottom + s2.top);
      std::vector<Bar> expected = {{cross_low, s1.bottom + s2.bottom, g},
                                   {s1.top + s2.top, cross_high, g + 1}};
      std::sort(expected.begin(), expected.end());
      bool parity_ok = code.bars.size() == 2 && code.bars[0].even() != code.bars[1].even();
      if (!code.essential.empty() || !parity_ok || code.bars != expected) ++report.failures;
    }
  }
  return report;
}

}  // namespace knotprime
