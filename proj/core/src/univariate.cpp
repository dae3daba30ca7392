#include "knotprime/detail/univariate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace knotprime::detail {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

const Integer& leading(const UPoly& f) { return f.back(); }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly derivative(const UPoly& f) {
  UPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<int>(i));
  trim(out);
  return out;
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw InvalidInput("division by the zero polynomial");
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly rem = a;
  UPoly q(a.size() - b.size() + 1);
  const Integer& lb = leading(b);
  for (int k = degree(q); k >= 0; --k) {
    const Integer& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    if (top % lb != 0) return std::nullopt;
    Integer c = top / lb;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    q[k] = std::move(c);
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

Integer content(const UPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& f) {
  if (f.empty()) return {};
  Integer c = content(f);
  if (leading(f) < 0) c = -c;
  UPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] / c;
  return out;
}

namespace {

// Pseudo-remainder of a by b, made primitive.
UPoly primitive_prem(UPoly a, const UPoly& b) {
  const Integer& lb = leading(b);
  while (degree(a) >= degree(b)) {
    Integer la = leading(a);
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
    if (a.empty()) return a;
  }
  return primitive_part(a);
}

}  // namespace

namespace {

Integer max_norm(const UPoly& f) {
  Integer m = 0;
  for (const auto& c : f) m = std::max(m, Integer(abs(c)));
  return m;
}

Integer evaluate(const UPoly& f, const Integer& x) {
  Integer v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
  return v;
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the candidate back off its balanced base-xi digits. A candidate dividing
// both inputs is the gcd once xi exceeds twice the smaller height.
std::optional<UPoly> heuristic_gcd(const UPoly& a, const UPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer gamma = boost::multiprecision::gcd(evaluate(a, xi), evaluate(b, xi));
    UPoly g;
    while (gamma != 0) {
      Integer c = gamma % xi;
      if (c < 0) c += xi;
      if (2 * c > xi) c -= xi;
      g.push_back(c);
      gamma = (gamma - c) / xi;
    }
    trim(g);
    if (!g.empty()) {
      g = primitive_part(g);
      if (divide_exact(a, g) && divide_exact(b, g)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  UPoly x = primitive_part(a);
  UPoly y = primitive_part(b);
  if (auto g = heuristic_gcd(x, y)) return *g;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = primitive_prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a small prime.

namespace {

using u64 = std::uint64_t;

// The integer versions stay visible next to the modular overloads below.
using detail::add;
using detail::degree;
using detail::derivative;
using detail::gcd;
using detail::mul;
using detail::sub;
using detail::trim;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

u64 inverse_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce(const Integer& c, u64 p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

ModPoly reduce(const UPoly& f, u64 p) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i], p);
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  u64 inv = inverse_mod(b.back(), p);
  for (int k = degree(q); k >= 0; --k) {
    u64 top = a[k + b.size() - 1];
    if (top == 0) continue;
    u64 c = top * inv % p;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) { return divmod(a, b, p).second; }

ModPoly monic(ModPoly f, u64 p) {
  if (f.empty()) return f;
  u64 inv = inverse_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 with deg s < deg b, deg t < deg a; a, b coprime.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = {1}, s1 = {};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  assert(r0.size() == 1);
  u64 inv = inverse_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  ModPoly s = rem(s0, b, p);
  // t = (1 - s*a) / b
  ModPoly one = {1};
  auto [t, r] = divmod(sub(one, mul(s, a, p), p), b, p);
  assert(r.empty());
  return {s, t};
}

ModPoly derivative(const ModPoly& f, u64 p) {
  ModPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (i % p) % p);
  trim(out);
  return out;
}

bool squarefree_mod(const UPoly& f, u64 p) {
  ModPoly fp = reduce(f, p);
  if (degree(fp) != degree(f)) return false;
  ModPoly g = gcd(fp, derivative(fp, p), p);
  return degree(g) == 0;
}

// Basis of the Berlekamp subalgebra {g : g^p == g mod f}.
std::vector<ModPoly> berlekamp_basis(const ModPoly& f, u64 p) {
  const int n = degree(f);
  ModPoly xp = {0, 1};
  {
    ModPoly base = {0, 1}, acc = {1};
    u64 e = p;
    while (e > 0) {
      if (e & 1) acc = rem(mul(acc, base, p), f, p);
      base = rem(mul(base, base, p), f, p);
      e >>= 1;
    }
    xp = acc;
  }
  // Row i holds x^(p*i) mod f; we need the null space of (Q - I)^T.
  std::vector<std::vector<u64>> a(n, std::vector<u64>(n, 0));
  ModPoly row = {1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u64 q = j < static_cast<int>(row.size()) ? row[j] : 0;
      if (i == j) q = (q + p - 1) % p;
      a[j][i] = q;
    }
    row = rem(mul(row, xp, p), f, p);
  }
  // Row-reduce a, then read off the null space.
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(n, -1);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    u64 inv = inverse_mod(a[r][col], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][col] == 0) continue;
      u64 c = a[i][col];
      for (int j = col; j < n; ++j) a[i][j] = (a[i][j] + p - c * a[r][j] % p) % p;
    }
    pivot_row_of_col[col] = r;
    ++r;
  }
  std::vector<ModPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (int col = 0; col < n; ++col) {
      int pr = pivot_row_of_col[col];
      if (pr >= 0) v[col] = (p - a[pr][free]) % p;
    }
    trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<ModPoly> factor_mod_p(const UPoly& f, std::uint64_t p) {
  ModPoly fp = monic(reduce(f, p), p);
  if (degree(fp) <= 1) return {fp};
  auto basis = berlekamp_basis(fp, p);
  std::size_t target = basis.size();
  std::vector<ModPoly> factors = {fp};
  for (const auto& v : basis) {
    if (factors.size() == target) break;
    if (degree(v) <= 0) continue;
    std::vector<ModPoly> next;
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
      ModPoly u = factors[idx];
      if (degree(u) <= 1) {
        next.push_back(std::move(u));
        continue;
      }
      for (u64 s = 0; s < p && degree(u) > 1; ++s) {
        ModPoly shifted = v;
        shifted[0] = (shifted[0] + p - s) % p;
        trim(shifted);
        ModPoly g = gcd(u, shifted, p);
        if (degree(g) > 0 && degree(g) < degree(u)) {
          next.push_back(g);
          u = divmod(u, g, p).first;
          if (next.size() + (factors.size() - idx) == target) break;
        }
      }
      next.push_back(std::move(u));
    }
    factors = std::move(next);
  }
  for (auto& g : factors) g = monic(g, p);
  std::sort(factors.begin(), factors.end(), [](const ModPoly& a, const ModPoly& b) {
    return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
  });
  return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting modulo p^(2^k).

namespace {

void reduce_in_place(UPoly& f, const Integer& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(f);
}

UPoly to_integer(const ModPoly& f) { return UPoly(f.begin(), f.end()); }

UPoly mul_mod(const UPoly& a, const UPoly& b, const Integer& m) {
  UPoly out = mul(a, b);
  reduce_in_place(out, m);
  return out;
}

// Division by a monic polynomial modulo m.
std::pair<UPoly, UPoly> divmod_monic(UPoly a, const UPoly& b, const Integer& m) {
  reduce_in_place(a, m);
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  for (int k = degree(q); k >= 0; --k) {
    Integer c = a[k + b.size() - 1] % m;
    if (c < 0) c += m;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    q[k] = c;
  }
  reduce_in_place(a, m);
  reduce_in_place(q, m);
  return {q, a};
}

struct Lift {
  UPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2.
Lift hensel_step(const UPoly& f, const Lift& in, const Integer& m2) {
  UPoly e = sub(f, mul(in.g, in.h));
  reduce_in_place(e, m2);
  auto [q, r] = divmod_monic(mul_mod(in.s, e, m2), in.h, m2);
  Lift out;
  out.g = add(add(in.g, mul(in.t, e)), mul(q, in.g));
  reduce_in_place(out.g, m2);
  out.h = add(in.h, r);
  reduce_in_place(out.h, m2);

  UPoly b = sub(add(mul(in.s, out.g), mul(in.t, out.h)), UPoly{Integer(1)});
  reduce_in_place(b, m2);
  auto [c, d] = divmod_monic(mul_mod(in.s, b, m2), out.h, m2);
  out.s = sub(in.s, d);
  reduce_in_place(out.s, m2);
  out.t = sub(sub(in.t, mul(in.t, b)), mul(c, out.g));
  reduce_in_place(out.t, m2);
  return out;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(r0 == 1);
  t0 %= m;
  if (t0 < 0) t0 += m;
  return t0;
}

// Lifts f == lc(f) * prod(factors) mod p to the same relation mod p^(2^steps).
// Returns monic lifted factors.
std::vector<UPoly> multifactor_lift(const UPoly& f, const std::vector<ModPoly>& factors,
                                    u64 p, int steps, const Integer& modulus) {
  if (factors.size() == 1) {
    UPoly out = f;
    reduce_in_place(out, modulus);
    Integer inv = inverse_mod(leading(out), modulus);
    for (auto& c : out) c = c * inv % modulus;
    return {out};
  }
  std::size_t half = factors.size() / 2;
  ModPoly g0 = {reduce(leading(f), p)};
  ModPoly h0 = {1};
  for (std::size_t i = 0; i < half; ++i) g0 = mul(g0, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = mul(h0, factors[i], p);
  auto [s0, t0] = bezout(g0, h0, p);

  Lift lift{to_integer(g0), to_integer(h0), to_integer(s0), to_integer(t0)};
  Integer m = p;
  for (int k = 0; k < steps; ++k) {
    m *= m;
    lift = hensel_step(f, lift, m);
  }
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  auto out = multifactor_lift(lift.g, left, p, steps, modulus);
  auto rest = multifactor_lift(lift.h, right, p, steps, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer symmetric(const Integer& c, const Integer& m) {
  Integer r = c % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 n = 3; out.size() < 200; n += 2) {
      bool prime = true;
      for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

}  // namespace

constexpr int kPrimeTrials = 8;

std::vector<UPoly> factor_squarefree(const UPoly& f) {
  if (degree(f) <= 1) return {f};
  const int n = degree(f);

  // Pick the admissible prime with the fewest modular factors among the first
  // few candidates. Degrees a true factor could have must be subset sums of
  // the modular factor degrees for every prime tried.
  std::vector<ModPoly> best;
  u64 best_p = 0;
  std::vector<bool> allowed(n + 1, true);
  int tried = 0;
  for (u64 p : small_primes()) {
    if (reduce(leading(f), p) == 0 || !squarefree_mod(f, p)) continue;
    auto mod_factors = factor_mod_p(f, p);
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (const auto& g : mod_factors) {
      for (int d = n; d >= degree(g); --d) {
        if (sums[d - degree(g)]) sums[d] = true;
      }
    }
    for (int d = 0; d <= n; ++d) allowed[d] = allowed[d] && sums[d];
    if (best_p == 0 || mod_factors.size() < best.size()) {
      best = std::move(mod_factors);
      best_p = p;
    }
    if (best.size() == 1 || ++tried == kPrimeTrials) break;
  }
  if (best_p == 0) throw InvalidInput("no admissible prime for factorization");
  if (best.size() == 1 || std::count(allowed.begin(), allowed.end(), true) == 2) return {f};

  // Coefficient bound for factors of lc(f) * f.
  Integer height = 0;
  for (const auto& c : f) height = std::max(height, Integer(abs(c)));
  Integer bound = Integer(n + 1) * (Integer(1) << n) * height * abs(leading(f));
  int steps = 0;
  Integer modulus = best_p;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }
  auto lifted = multifactor_lift(f, best, best_p, steps, modulus);

  // Zassenhaus recombination over subsets of increasing size.
  std::vector<UPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  UPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      int deg = 0;
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        if (pick[k]) deg += degree(lifted[remaining[k]]);
      }
      if (!allowed[deg]) continue;
      const Integer& lc = leading(rest);
      Integer constant = lc;
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        if (pick[k]) constant = constant * lifted[remaining[k]][0] % modulus;
      }
      constant = symmetric(constant, modulus);
      if (constant == 0 || (lc * rest[0]) % constant != 0) continue;
      UPoly candidate = {lc};
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        if (pick[k]) candidate = mul_mod(candidate, lifted[remaining[k]], modulus);
      }
      for (auto& c : candidate) c = symmetric(c, modulus);
      trim(candidate);
      candidate = primitive_part(candidate);
      auto quotient = divide_exact(rest, candidate);
      if (!quotient) continue;
      result.push_back(candidate);
      rest = primitive_part(*quotient);
      std::vector<std::size_t> kept;
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        if (!pick[k]) kept.push_back(remaining[k]);
      }
      remaining = std::move(kept);
      found = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (degree(rest) > 0) result.push_back(rest);
  std::sort(result.begin(), result.end(), [](const UPoly& a, const UPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  UPoly prim = primitive_part(f);
  if (degree(prim) <= 0) return {};
  // A squarefree image modulo some prime proves squarefreeness over Z.
  int checked = 0;
  for (u64 p : small_primes()) {
    if (reduce(leading(prim), p) == 0) continue;
    if (squarefree_mod(prim, p)) return {{prim, 1}};
    if (++checked == 20) break;
  }
  std::vector<std::pair<UPoly, int>> out;
  UPoly g = gcd(prim, derivative(prim));
  UPoly w = *divide_exact(prim, g);
  UPoly c = g;
  int multiplicity = 1;
  while (degree(w) > 0) {
    UPoly y = gcd(w, c);
    UPoly z = *divide_exact(w, y);
    if (degree(z) > 0) out.emplace_back(primitive_part(z), multiplicity);
    ++multiplicity;
    w = std::move(y);
    c = *divide_exact(c, w);
  }
  return out;
}

UFactorization factor(const UPoly& f) {
  if (f.empty()) throw InvalidInput("cannot factor the zero polynomial");
  UFactorization out;
  out.unit = content(f);
  if (leading(f) < 0) out.unit = -out.unit;
  UPoly prim = primitive_part(f);
  while (prim.front() == 0) {
    prim.erase(prim.begin());
    ++out.x_valuation;
  }
  for (auto& [part, e] : squarefree_decomposition(prim)) {
    for (auto& g : factor_squarefree(part)) out.factors.emplace_back(std::move(g), e);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

}  // namespace knotprime::detail
