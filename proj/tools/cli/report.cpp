#include "cli/report.hpp"

namespace kreweras::cli {

std::string path_text(const DyckPath& path) {
  return path.empty() ? kEmptyPathToken : render_path(path);
}

DyckPath parse_path_token(std::string_view text) {
  if (text == kEmptyPathToken) {
    return DyckPath{};
  }
  return parse_path(text);
}

nlohmann::json to_json(const PathStats& stats, const DyckPath& path) {
  nlohmann::json plateaus = nlohmann::json::array();
  for (const PlateauSpan& span : stats.plateaus) {
    plateaus.push_back({{"first_step_index", span.first_step_index},
                        {"run_length", span.run_length}});
  }
  return {{"path", render_path(path)},
          {"semilength", path.semilength()},
          {"peak_count", stats.peak_count},
          {"plateau_count", stats.plateau_count},
          {"peak_apexes", stats.peak_apexes},
          {"plateaus", std::move(plateaus)}};
}

nlohmann::json to_json(const InsertionPlan& plan) {
  return {{"base", render_path(plan.base)},
          {"base_semilength", plan.base.semilength()},
          {"multiplicities", plan.multiplicities},
          {"inserted", plan.inserted()}};
}

nlohmann::json to_json(const ReduceResult& result, const DyckPath& input) {
  return {{"input", render_path(input)},
          {"base", render_path(result.base)},
          {"base_semilength", result.base.semilength()},
          {"original_stats", to_json(result.original_stats, input)},
          {"plan", to_json(result.plan)}};
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, term] : report.per_s_terms) {
    terms.push_back({{"s", s}, {"term", term.str()}});
  }
  return {{"n", report.n},
          {"r", report.r},
          {"lhs", report.lhs.str()},
          {"rhs", report.rhs.str()},
          {"per_s_terms", std::move(terms)},
          {"equal", report.equal}};
}

std::string join_apexes(const PathStats& stats, char sep) {
  std::string out;
  for (std::size_t v : stats.peak_apexes) {
    if (!out.empty()) out.push_back(sep);
    out += std::to_string(v);
  }
  return out;
}

std::string join_plateaus(const PathStats& stats, char sep) {
  std::string out;
  for (const PlateauSpan& span : stats.plateaus) {
    if (!out.empty()) out.push_back(sep);
    out += std::to_string(span.first_step_index) + ":" +
           std::to_string(span.run_length);
  }
  return out;
}

std::string join_multiplicities(const InsertionPlan& plan) {
  std::string out = "[";
  for (std::size_t i = 0; i < plan.multiplicities.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(plan.multiplicities[i]);
  }
  return out + "]";
}

}  // namespace kreweras::cli
