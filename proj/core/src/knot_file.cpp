#include "knotprime/knot_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace knotprime {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
T field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InvalidInput(std::string(where) + ": missing field '" + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string(where) + ": field '" + key + "' has the wrong type");
  }
}

const json& array_field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw InvalidInput(std::string(where) + ": field '" + key + "' must be an array");
  }
  return *it;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

KnotInput parse_knot_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("knot file must be a JSON object");

  KnotInput out;
  out.name = field<std::string>(doc, "name", "knot file");
  for (const auto& r : array_field(doc, "ranks", "knot file")) {
    Monomial m{field<int>(r, "alexander", "rank entry"), field<int>(r, "maslov", "rank entry")};
    int dim = field<int>(r, "dim", "rank entry");
    if (dim <= 0) throw InvalidInput("rank entry: dim must be positive");
    if (!out.ranks.emplace(m, dim).second) {
      throw InvalidInput("rank entry: duplicate (alexander " + std::to_string(m.alexander) +
                         ", maslov " + std::to_string(m.maslov) + ")");
    }
  }
  if (auto it = doc.find("complex"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw InvalidInput("complex must be an object");
    std::vector<Generator> gens;
    for (const auto& g : array_field(*it, "generators", "complex")) {
      gens.push_back({field<std::string>(g, "id", "generator"), field<int>(g, "maslov", "generator"),
                      field<int>(g, "alexander", "generator")});
    }
    std::vector<Arrow> arrows;
    if (it->contains("differentials")) {
      for (const auto& d : array_field(*it, "differentials", "complex")) {
        arrows.push_back({field<std::string>(d, "from", "differential"),
                          field<std::string>(d, "to", "differential")});
      }
    }
    out.complex = FilteredComplex(std::move(gens), arrows);
  }
  if (auto it = doc.find("certificates"); it != doc.end() && !it->is_null()) {
    for (const auto& name : array_field(*it, "excluded_factors", "certificates")) {
      if (!name.is_string()) throw InvalidInput("certificates: names must be strings");
      auto n = name.get<std::string>();
      if (!find_known_knot(n)) throw InvalidInput("certificates: unknown knot '" + n + "'");
      out.certificates.insert(n);
    }
  }
  if (auto it = doc.find("expected_verdict"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw InvalidInput("expected_verdict must be a string");
    auto status = parse_status(it->get<std::string>());
    if (!status) throw InvalidInput("unknown expected_verdict '" + it->get<std::string>() + "'");
    out.expected_verdict = status;
  }
  return out;
}

KnotInput load_knot_file(const std::filesystem::path& path) {
  try {
    return parse_knot_json(read_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.filename().string() + ": " + e.what());
  }
}

std::string to_knot_json(const KnotInput& input) {
  ordered_json doc;
  doc["name"] = input.name;
  doc["ranks"] = ordered_json::array();
  for (auto it = input.ranks.rbegin(); it != input.ranks.rend(); ++it) {
    ordered_json r;
    r["alexander"] = it->first.alexander;
    r["maslov"] = it->first.maslov;
    r["dim"] = it->second;
    doc["ranks"].push_back(r);
  }
  if (input.complex) {
    ordered_json c;
    c["generators"] = ordered_json::array();
    for (const auto& g : input.complex->generators()) {
      ordered_json j;
      j["id"] = g.id;
      j["maslov"] = g.maslov;
      j["alexander"] = g.alexander;
      c["generators"].push_back(j);
    }
    c["differentials"] = ordered_json::array();
    for (const auto& a : input.complex->arrows()) {
      ordered_json j;
      j["from"] = a.from;
      j["to"] = a.to;
      c["differentials"].push_back(j);
    }
    doc["complex"] = c;
  }
  if (!input.certificates.empty()) {
    ordered_json names = ordered_json::array();
    for (const auto& k : known_knots()) {
      if (input.certificates.count(k.name)) names.push_back(k.name);
    }
    doc["certificates"]["excluded_factors"] = names;
  }
  if (input.expected_verdict) doc["expected_verdict"] = to_string(*input.expected_verdict);
  return doc.dump(2) + "\n";
}

void save_knot_file(const KnotInput& input, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << to_knot_json(input);
}

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["name"] = v.name;
  doc["status"] = to_string(v.status);
  doc["methods"] = ordered_json::array();
  for (auto m : v.methods) doc["methods"].push_back(to_string(m));
  doc["required_exclusions"] = v.required_exclusions;
  const auto& d = v.diagnostics;
  ordered_json diag;
  diag["omega"] = d.omega;
  diag["delta"] = optional_json(d.delta);
  diag["b_even"] = optional_json(d.b_even);
  diag["b_odd"] = optional_json(d.b_odd);
  diag["tau"] = optional_json(d.tau);
  diag["l_space_pattern"] = optional_json(d.l_space_pattern);
  diag["irreducible_factors"] = d.irreducible_factors;
  diag["symmetric_factorizations"] = d.symmetric_factorizations;
  diag["certificates"] = d.certificates;
  diag["warnings"] = d.warnings;
  doc["diagnostics"] = diag;
  doc["message"] = v.message;
  doc["trace"] = v.trace;
  return doc.dump(2) + "\n";
}

Verdict verdict_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    if (doc.value("schema", 0) != 1) throw InvalidInput("unsupported verdict schema");
    Verdict v;
    v.name = doc.at("name").get<std::string>();
    auto status = parse_status(doc.at("status").get<std::string>());
    if (!status) throw InvalidInput("unknown status");
    v.status = *status;
    for (const auto& m : doc.at("methods")) {
      auto method = parse_method(m.get<std::string>());
      if (!method) throw InvalidInput("unknown method");
      v.methods.insert(*method);
    }
    v.required_exclusions = doc.at("required_exclusions").get<std::vector<std::string>>();
    const auto& diag = doc.at("diagnostics");
    auto& d = v.diagnostics;
    d.omega = diag.at("omega").get<std::string>();
    d.delta = optional_from<long long>(diag, "delta");
    d.b_even = optional_from<long long>(diag, "b_even");
    d.b_odd = optional_from<long long>(diag, "b_odd");
    d.tau = optional_from<int>(diag, "tau");
    d.l_space_pattern = optional_from<bool>(diag, "l_space_pattern");
    d.irreducible_factors = diag.at("irreducible_factors").get<std::vector<std::string>>();
    d.symmetric_factorizations =
        diag.at("symmetric_factorizations").get<std::vector<std::string>>();
    d.certificates = diag.at("certificates").get<std::vector<std::string>>();
    d.warnings = diag.at("warnings").get<std::vector<std::string>>();
    v.message = doc.at("message").get<std::string>();
    v.trace = doc.at("trace").get<std::vector<std::string>>();
    return v;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed verdict JSON: ") + e.what());
  }
}

KnotInput connected_sum(const KnotInput& a, const KnotInput& b) {
  KnotInput out;
  out.name = a.name + "#" + b.name;
  out.ranks = ranks_from_omega(build_omega(a.ranks) * build_omega(b.ranks));
  if (a.complex && b.complex) out.complex = tensor(*a.complex, *b.complex);
  return out;
}

}  // namespace knotprime
