#pragma once

// JSON forms of the library's result types. Big integers are decimal strings;
// the empty path is "". Key order is whatever nlohmann::json's sorted object
// produces, so dump() output is canonical.

#include <string>

#include <nlohmann/json.hpp>

#include "kreweras/bijection.hpp"
#include "kreweras/combinatorics.hpp"
#include "kreweras/dyck_path.hpp"

namespace kreweras::cli {

// Text-mode token for the empty path.
inline constexpr const char* kEmptyPathToken = "ε";

std::string path_text(const DyckPath& path);

// Accepts the grammar ("U"|"D")* and additionally the empty-path token.
DyckPath parse_path_token(std::string_view text);

nlohmann::json to_json(const PathStats& stats, const DyckPath& path);
nlohmann::json to_json(const InsertionPlan& plan);
nlohmann::json to_json(const ReduceResult& result, const DyckPath& input);
nlohmann::json to_json(const IdentityReport& report);

std::string join_apexes(const PathStats& stats, char sep);
std::string join_plateaus(const PathStats& stats, char sep);
std::string join_multiplicities(const InsertionPlan& plan);

}  // namespace kreweras::cli
