#include "knotprime/engine.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "knotprime/knot_file.hpp"

namespace knotprime {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Unknot: return "UNKNOT";
    case Status::Prime: return "PRIME";
    case Status::ConditionallyPrime: return "CONDITIONALLY_PRIME";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::Invalid: return "INVALID";
  }
  return "INVALID";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::T2: return "T2";
    case Method::T3: return "T3";
    case Method::Bar: return "BAR";
  }
  return "";
}

std::optional<Status> parse_status(std::string_view text) {
  for (auto s : {Status::Unknot, Status::Prime, Status::ConditionallyPrime,
                 Status::Inconclusive, Status::Invalid}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
  for (auto m : {Method::T2, Method::T3, Method::Bar}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

Laurent build_omega(const RankTable& ranks) {
  Laurent::Terms terms;
  for (const auto& [m, dim] : ranks) {
    if (dim <= 0) {
      throw InvalidInput("rank at (alexander " + std::to_string(m.alexander) + ", maslov " +
                         std::to_string(m.maslov) + ") must be positive");
    }
    terms.emplace(m, Integer(dim));
  }
  return Laurent(std::move(terms));
}

RankTable ranks_from_omega(const Laurent& omega) {
  RankTable out;
  for (const auto& [m, c] : omega.terms()) {
    if (c <= 0 || c > std::numeric_limits<int>::max()) {
      throw InvalidInput("coefficient " + c.str() + " is not a valid rank");
    }
    out.emplace(m, c.convert_to<int>());
  }
  return out;
}

namespace {

// Known-knot names in list order.
std::vector<std::string> in_list_order(const std::set<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& k : known_knots()) {
    if (names.count(k.name)) out.push_back(k.name);
  }
  return out;
}

std::string render_part(const Laurent& p) { return "(" + to_string(p) + ")"; }

std::string render_factorization(const SymmetricFactorization& f) {
  std::string out;
  for (std::size_t k = 0; k < f.parts.size(); ++k) {
    if (k) out += " * ";
    out += render_part(f.part_polynomial(k));
  }
  return out;
}

TwoFactorResult two_factor_from(const std::vector<SymmetricFactorization>& all,
                             const std::set<std::string>& certificates) {
  TwoFactorResult out;
  if (all.empty()) return out;
  for (const auto& f : all) {
    if (f.parts.size() != 2) return out;
  }
  std::set<std::string> needed;
  bool blockable = true;
  for (const auto& f : all) {
    auto matches = known_knot_matches(f);
    if (matches.empty()) {
      blockable = false;
      continue;
    }
    bool blocked = std::any_of(matches.begin(), matches.end(), [&](const PartMatch& m) {
      return std::all_of(m.knots.begin(), m.knots.end(),
                         [&](const std::string& k) { return certificates.count(k) > 0; });
    });
    if (blocked) continue;
    // Smallest class first, then the earliest part.
    const PartMatch* pick = &matches.front();
    for (const auto& m : matches) {
      if (m.knots.size() < pick->knots.size()) pick = &m;
    }
    for (const auto& k : pick->knots) {
      if (!certificates.count(k)) needed.insert(k);
    }
  }
  if (!blockable) return out;
  if (needed.empty()) {
    out.status = Status::Prime;
  } else {
    out.status = Status::ConditionallyPrime;
    out.required_exclusions = in_list_order(needed);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

Verdict invalid(Verdict v, std::string message) {
  v.status = Status::Invalid;
  v.methods.clear();
  v.required_exclusions.clear();
  v.trace.push_back("invalid input: " + message);
  v.message = std::move(message);
  return v;
}

}  // namespace

TwoFactorResult two_factor_analysis(const Laurent& omega,
                                 const std::set<std::string>& certificates) {
  return two_factor_from(maximal_symmetric_factorizations(omega), certificates);
}

Verdict analyze(const KnotInput& input) {
  Verdict v;
  v.name = input.name;
  auto& diag = v.diagnostics;
  diag.certificates = in_list_order(input.certificates);
  for (const auto& c : input.certificates) {
    if (!find_known_knot(c)) return invalid(std::move(v), "unknown certificate '" + c + "'");
  }
  if (input.ranks.empty()) return invalid(std::move(v), "no ranks given");

  Laurent omega;
  try {
    omega = build_omega(input.ranks);
  } catch (const InvalidInput& e) {
    return invalid(std::move(v), e.what());
  }
  diag.omega = to_string(omega);
  long long total_rank = 0;
  for (const auto& [m, dim] : input.ranks) total_rank += dim;
  diag.delta = total_rank;
  v.trace.push_back("Omega = " + diag.omega);

  if (!is_symmetric(omega)) {
    return invalid(std::move(v), "Omega violates the symmetry condition c(i,j) = c(-i,j-2i)");
  }
  if (evaluate_at_one(omega) % 2 == 0) diag.warnings.push_back("Omega(1,1) is even");
  if (abs(specialize_alexander(omega).at_one()) != 1) {
    diag.warnings.push_back("Omega(-1,1) is not +-1");
  }

  std::optional<BarCounts> bar_counts;
  if (input.complex) {
    auto violations = validate(*input.complex);
    if (!violations.empty()) {
      std::vector<std::string> lines;
      for (const auto& viol : violations) lines.push_back(to_string(viol));
      return invalid(std::move(v), "invalid complex: " + join(lines, "; "));
    }
    if (graded_ranks(*input.complex) != input.ranks) {
      return invalid(std::move(v), "ranks do not match the homology of the complex");
    }
    BarComplex bars = reduce(*input.complex);
    bar_counts = counts(bars);
    diag.delta = bar_counts->delta;
    diag.b_even = bar_counts->b_even;
    diag.b_odd = bar_counts->b_odd;
    diag.tau = bars.tau_filtration;
    diag.l_space_pattern = l_space_pattern(*bar_counts);
  }

  if (omega == Laurent::one()) {
    v.status = Status::Unknot;
    v.trace.push_back("Omega = 1, which detects the unknot");
    return v;
  }

  std::vector<SymmetricFactorization> symmetric;
  try {
    auto irreducible = factor_laurent(omega);
    for (const auto& [f, e] : irreducible.factors) {
      diag.irreducible_factors.push_back(render_part(f.poly()) +
                                         (e > 1 ? "^" + std::to_string(e) : ""));
    }
    symmetric = maximal_symmetric_factorizations(omega);
  } catch (const InvalidInput& e) {
    return invalid(std::move(v), e.what());
  }
  for (const auto& f : symmetric) diag.symmetric_factorizations.push_back(render_factorization(f));
  v.trace.push_back("irreducible factors: " + join(diag.irreducible_factors, " "));

  bool proved = false;
  TwoFactorResult t3;
  if (symmetric.empty()) {
    v.methods.insert(Method::T2);
    proved = true;
    v.trace.push_back("T2: Omega is symmetrically irreducible, so the knot is prime");
  } else {
    v.trace.push_back("T2: " + std::to_string(symmetric.size()) +
                      " maximal symmetric factorization(s): " +
                      join(diag.symmetric_factorizations, "; "));
    t3 = two_factor_from(symmetric, input.certificates);
    switch (t3.status) {
      case Status::Prime:
        v.methods.insert(Method::T3);
        proved = true;
        v.trace.push_back(
            "T3: every two-part factorization has a known-knot factor certified absent");
        break;
      case Status::ConditionallyPrime:
        v.trace.push_back("T3: prime once these are excluded as summands: " +
                          join(t3.required_exclusions, ", "));
        break;
      default:
        v.trace.push_back("T3: not applicable");
        break;
    }
  }

  if (bar_counts) {
    std::string counts_text = "delta=" + std::to_string(bar_counts->delta) +
                              " b_e=" + std::to_string(bar_counts->b_even) +
                              " b_o=" + std::to_string(bar_counts->b_odd);
    if (bar_count_test(*bar_counts) == BarTest::Prime) {
      v.methods.insert(Method::Bar);
      proved = true;
      v.trace.push_back("BAR: no factorization of delta satisfies the inequality (" +
                        counts_text + ")");
    } else {
      v.trace.push_back("BAR: inconclusive (" + counts_text + ")");
    }
  }

  if (proved) {
    v.status = Status::Prime;
  } else if (t3.status == Status::ConditionallyPrime) {
    v.status = Status::ConditionallyPrime;
    v.required_exclusions = t3.required_exclusions;
  } else {
    v.status = Status::Inconclusive;
  }
  return v;
}

double BatchSummary::percent_certified() const {
  int eligible = 0;
  int certified = 0;
  for (const auto& e : entries) {
    if (e.verdict.status == Status::Invalid || e.verdict.status == Status::Unknot) continue;
    ++eligible;
    if (e.verdict.status == Status::Prime) ++certified;
  }
  return eligible == 0 ? 0.0 : 100.0 * certified / eligible;
}

namespace {

BatchSummary summarize(std::vector<BatchEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const BatchEntry& a, const BatchEntry& b) {
    return a.verdict.name < b.verdict.name;
  });
  BatchSummary out;
  for (const auto& e : entries) {
    ++out.by_status[e.verdict.status];
    for (auto m : e.verdict.methods) ++out.by_method[m];
    if (e.expected) {
      ++out.labeled;
      if (e.matches_expected()) ++out.label_matches;
    }
  }
  out.entries = std::move(entries);
  return out;
}

template <typename Job>
void parallel_for(std::size_t n, unsigned threads, Job&& job) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) job(k);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

Verdict analyze_guarded(const KnotInput& input) {
  try {
    return analyze(input);
  } catch (const std::exception& e) {
    Verdict v;
    v.name = input.name;
    return invalid(std::move(v), e.what());
  }
}

}  // namespace

BatchSummary batch(const std::vector<KnotInput>& inputs, unsigned threads) {
  std::vector<BatchEntry> entries(inputs.size());
  parallel_for(inputs.size(), threads, [&](std::size_t k) {
    entries[k] = {analyze_guarded(inputs[k]), inputs[k].expected_verdict};
  });
  return summarize(std::move(entries));
}

BatchSummary batch_directory(const std::filesystem::path& dir, unsigned threads) {
  if (!std::filesystem::is_directory(dir)) {
    throw InvalidInput("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<BatchEntry> entries(files.size());
  parallel_for(files.size(), threads, [&](std::size_t k) {
    try {
      KnotInput input = load_knot_file(files[k]);
      entries[k] = {analyze_guarded(input), input.expected_verdict};
    } catch (const std::exception& e) {
      Verdict v;
      v.name = files[k].stem().string();
      entries[k] = {invalid(std::move(v), e.what()), std::nullopt};
    }
  });
  return summarize(std::move(entries));
}

std::string to_csv(const BatchSummary& summary) {
  auto quote = [](const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  auto opt = [](const auto& value) { return value ? std::to_string(*value) : std::string(); };
  std::ostringstream os;
  os << "name,status,methods,delta,b_even,b_odd,tau\n";
  for (const auto& e : summary.entries) {
    const auto& v = e.verdict;
    std::vector<std::string> methods;
    for (auto m : v.methods) methods.emplace_back(to_string(m));
    os << quote(v.name) << ',' << to_string(v.status) << ',' << join(methods, "+") << ','
       << opt(v.diagnostics.delta) << ',' << opt(v.diagnostics.b_even) << ','
       << opt(v.diagnostics.b_odd) << ',' << opt(v.diagnostics.tau) << '\n';
  }
  return os.str();
}

}  // namespace knotprime
