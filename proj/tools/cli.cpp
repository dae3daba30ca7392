#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotprime/barred.hpp"
#include "knotprime/corpus.hpp"
#include "knotprime/engine.hpp"
#include "knotprime/factor.hpp"
#include "knotprime/knot_file.hpp"

namespace knotprime::cli {

namespace {

std::string counts_line(const Diagnostics& d) {
  std::ostringstream os;
  if (d.delta) os << "δ=" << *d.delta;
  if (d.b_even) os << " b_e=" << *d.b_even;
  if (d.b_odd) os << " b_o=" << *d.b_odd;
  if (d.tau) os << " τ=" << *d.tau;
  return os.str();
}

std::string headline(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.status);
  if (v.status == Status::Invalid) {
    os << ": " << v.message;
    return os.str();
  }
  if (!v.methods.empty()) {
    os << " via ";
    bool first = true;
    for (auto m : v.methods) {
      os << (first ? "" : ", ") << to_string(m);
      first = false;
    }
  }
  if (!v.required_exclusions.empty()) {
    os << " pending exclusion of ";
    for (std::size_t k = 0; k < v.required_exclusions.size(); ++k) {
      os << (k ? ", " : "") << v.required_exclusions[k];
    }
  }
  std::string counts = counts_line(v.diagnostics);
  if (!counts.empty()) os << "; " << counts;
  return os.str();
}

int analyze_command(const std::string& path, bool explain, bool as_json, std::ostream& out) {
  Verdict v;
  try {
    v = analyze(load_knot_file(path));
  } catch (const InvalidInput& e) {
    v.name = path;
    v.status = Status::Invalid;
    v.message = e.what();
  }
  if (as_json) {
    out << verdict_to_json(v);
  } else {
    out << headline(v) << '\n';
    if (explain) {
      for (const auto& line : v.trace) out << "  " << line << '\n';
      for (const auto& w : v.diagnostics.warnings) out << "  warning: " << w << '\n';
      if (!v.diagnostics.certificates.empty()) {
        out << "  certificates:";
        for (const auto& c : v.diagnostics.certificates) out << ' ' << c;
        out << '\n';
      }
      if (v.diagnostics.l_space_pattern.value_or(false)) {
        out << "  all bars even (L-space pattern)\n";
      }
    }
  }
  return v.status == Status::Invalid ? kInvalidInput : kSuccess;
}

int batch_command(const std::string& dir, const std::string& csv_path, std::ostream& out) {
  BatchSummary summary = batch_directory(dir);
  std::string csv = to_csv(summary);
  if (csv_path.empty()) {
    out << csv;
    return kSuccess;
  }
  std::ofstream file(csv_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + csv_path);
  file << csv;
  for (const auto& e : summary.entries) {
    out << e.verdict.name << ": " << headline(e.verdict);
    if (!e.matches_expected()) out << " (expected " << to_string(*e.expected) << ")";
    out << '\n';
  }
  out << "knots: " << summary.entries.size() << '\n';
  for (const auto& [status, n] : summary.by_status) out << to_string(status) << ": " << n << '\n';
  for (const auto& [method, n] : summary.by_method) {
    out << "via " << to_string(method) << ": " << n << '\n';
  }
  out << "certified: " << summary.percent_certified() << "%\n";
  if (summary.labeled > 0) {
    out << "labels matched: " << summary.label_matches << '/' << summary.labeled << '\n';
  }
  return kSuccess;
}

int tensor_command(const std::string& a, const std::string& b, const std::string& target,
                   std::ostream& out) {
  KnotInput sum = connected_sum(load_knot_file(a), load_knot_file(b));
  save_knot_file(sum, target);
  out << "wrote " << target << " (" << sum.name;
  if (sum.complex) out << ", " << sum.complex->size() << " generators";
  out << ")\n";
  return kSuccess;
}

int reduce_command(const std::string& path, std::ostream& out) {
  KnotInput input = load_knot_file(path);
  if (!input.complex) throw InvalidInput(path + ": no complex to reduce");
  BarComplex bars = reduce(*input.complex);
  BarCounts c = counts(bars);
  out << "τ=" << bars.tau_filtration << '\n';
  for (const auto& bar : bars.bars) {
    out << "bar top=" << bar.top_filtration << " bottom=" << bar.bottom_filtration
        << " grading=" << bar.bottom_grading << (bar.even() ? " even" : " odd") << '\n';
  }
  out << "δ=" << c.delta << " b_e=" << c.b_even << " b_o=" << c.b_odd << '\n';
  out << "inequality test: " << (bar_count_test(c) == BarTest::Prime ? "PRIME" : "INCONCLUSIVE")
      << '\n';
  return kSuccess;
}

int factor_command(const std::string& path, std::ostream& out) {
  KnotInput input = load_knot_file(path);
  Laurent omega = build_omega(input.ranks);
  out << "Omega = " << to_string(omega) << '\n';
  auto irreducible = factor_laurent(omega);
  out << "irreducible:";
  for (const auto& [f, e] : irreducible.factors) {
    out << " (" << to_string(f.poly()) << ")";
    if (e > 1) out << '^' << e;
  }
  out << '\n';
  if (!is_symmetric(omega)) throw InvalidInput("Omega violates the symmetry condition");
  auto symmetric = maximal_symmetric_factorizations(omega);
  out << "symmetric factorizations: " << symmetric.size() << '\n';
  for (const auto& f : symmetric) {
    out << " ";
    for (std::size_t k = 0; k < f.parts.size(); ++k) {
      out << (k ? " * " : " ") << '(' << to_string(f.part_polynomial(k)) << ')';
    }
    out << '\n';
    for (const auto& m : known_knot_matches(f)) {
      out << "    part " << m.part << " matches";
      for (const auto& k : m.knots) out << ' ' << k;
      out << '\n';
    }
  }
  return kSuccess;
}

int selftest_command(std::ostream& out) {
  std::vector<KnotInput> inputs;
  for (const auto& f : corpus::builtin()) inputs.push_back(f.input);
  BatchSummary summary = batch(inputs);
  for (const auto& e : summary.entries) {
    if (!e.matches_expected()) {
      out << "MISMATCH " << e.verdict.name << ": " << to_string(e.verdict.status) << ", expected "
          << to_string(*e.expected) << '\n';
    }
  }
  out << "corpus: " << summary.label_matches << '/' << summary.labeled << " labels matched\n";
  BarTensorReport products = check_bar_tensor_products(-3, 3);
  out << "bar tensor products: " << products.cases << " cases, " << products.failures << " failures\n";
  bool ok = summary.label_matches == summary.labeled && products.failures == 0;
  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? kSuccess : kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify knots as prime from knot Floer data", "knotprime"};
  app.require_subcommand(1);

  std::string file, file2, dir, target;
  bool explain = false, as_json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Primality verdict for one knot file");
  analyze_cmd->add_option("FILE", file, "knot file")->required();
  analyze_cmd->add_flag("--explain", explain, "print the proof trace");
  analyze_cmd->add_flag("--json", as_json, "machine-readable verdict");

  auto* batch_cmd = app.add_subcommand("batch", "Analyze every knot file in a directory");
  batch_cmd->add_option("DIR", dir, "directory of knot files")->required();
  batch_cmd->add_option("--out", target, "write the CSV summary here");

  auto* tensor_cmd = app.add_subcommand("tensor", "Write the connected sum of two knot files");
  tensor_cmd->add_option("F1", file, "first knot file")->required();
  tensor_cmd->add_option("F2", file2, "second knot file")->required();
  tensor_cmd->add_option("--out", target, "output knot file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Bar-complex of a knot file's complex");
  reduce_cmd->add_option("FILE", file, "knot file")->required();

  auto* factor_cmd = app.add_subcommand("factor", "Factorizations of a knot file's Omega");
  factor_cmd->add_option("FILE", file, "knot file")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in corpus and checks");

  std::vector<std::string> storage = {"knotprime"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInvalidInput;
  }

  try {
    if (*analyze_cmd) return analyze_command(file, explain, as_json, out);
    if (*batch_cmd) return batch_command(dir, target, out);
    if (*tensor_cmd) return tensor_command(file, file2, target, out);
    if (*reduce_cmd) return reduce_command(file, out);
    if (*factor_cmd) return factor_command(file, out);
    if (*selftest_cmd) return selftest_command(out);
  } catch (const InvalidInput& e) {
    err << "INVALID: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << app.help();
  return kInvalidInput;
}

}  // namespace knotprime::cli
