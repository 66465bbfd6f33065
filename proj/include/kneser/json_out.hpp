#pragma once
// JSON shapes for the report structs; field names are part of the CLI
// contract, keep them stable.

#include "json.hpp"

#include "kneser/designs.hpp"
#include "kneser/g42.hpp"
#include "kneser/kneser_graph.hpp"

namespace kneser {

inline nlohmann::json to_json(const graph::VerificationReport& r) {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& [a, b] : r.violations) viol.push_back({a, b});
  return nlohmann::json{{"proper", r.proper},
                        {"num_colors", r.num_colors},
                        {"num_vertices", r.num_vertices},
                        {"violations", std::move(viol)},
                        {"max_class_size", r.max_class_size}};
}

inline nlohmann::json to_json(const design::DesignReport& r) {
  return nlohmann::json{{"exact_pass", r.exact_pass},
                        {"approx_pass", r.approx_pass},
                        {"uncovered_count", r.uncovered_count},
                        {"uncovered_fraction", r.uncovered_fraction},
                        {"multi_covered_count", r.multi_covered_count}};
}

inline nlohmann::json to_json(const g42::PipelineReport& r) {
  return nlohmann::json{
      {"p", r.p},
      {"n", r.n},
      {"params",
       {{"t", r.t}, {"lambda", r.lam}, {"q", r.q}, {"seed", r.seed}}},
      {"family_size", r.family_size},
      {"short_count", r.short_count},
      {"orbit_count", r.orbit_count},
      {"wall_total", r.wall_total},
      {"cayley_conflicts", r.cayley_conflicts},
      {"evicted", r.evicted},
      {"colors_good", r.colors_good},
      {"colors_residual", r.colors_residual},
      {"colors_total", r.colors_total},
      {"ratio_to_n2_over_6", r.ratio_to_n2_over_6},
      {"proper", r.proper}};
}

}  // namespace kneser
