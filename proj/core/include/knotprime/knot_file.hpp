#pragma once

// JSON knot files and machine-readable verdicts.

#include <filesystem>
#include <string>
#include <string_view>

#include "knotprime/engine.hpp"

namespace knotprime {

/// Throws InvalidInput on malformed documents.
KnotInput parse_knot_json(std::string_view text);
KnotInput load_knot_file(const std::filesystem::path& path);

std::string to_knot_json(const KnotInput& input);
void save_knot_file(const KnotInput& input, const std::filesystem::path& path);

/// Versioned with "schema": 1.
std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(std::string_view text);

/// The connected-sum knot file: ranks via the polynomial product, complex via
/// the tensor product when both inputs carry one.
KnotInput connected_sum(const KnotInput& a, const KnotInput& b);

}  // namespace knotprime
