#include <cmath>

#include "json.hpp"
#include "mexlet/verify.hpp"

namespace mexlet {

namespace {
using nlohmann::json;

json base_report(const char* claim) {
  json j;
  j["schema"] = 1;
  j["claim"] = claim;
  return j;
}
}  // namespace

std::string to_json(const TailReport& r) {
  json j = base_report("tail_envelope_uniform_in_j");
  j["params"] = {{"B", r.B},
                 {"s", r.s},
                 {"max_scaled_angle", r.max_scaled_angle},
                 {"grid_points", r.grid_points}};
  json m = json::array();
  for (const auto& lvl : r.levels)
    m.push_back({{"j", lvl.j},
                 {"theta_max", lvl.theta_max},
                 {"sup_envelope", lvl.sup_envelope},
                 {"sup_half_arg", lvl.sup_half_arg},
                 {"argmax_scaled_angle", lvl.argmax_scaled_angle}});
  j["measurements"] = m;
  j["uniformity"] = r.uniformity;
  j["uniformity_half_arg"] = r.uniformity_half_arg;
  j["c_measured"] = r.c_measured;
  j["threshold"] = {{"uniformity", kThresholds.tail_uniformity}};
  j["pass"] = r.pass;
  return j.dump(2);
}

std::string to_json(const FrameReport& r) {
  json j = base_report("frame_energy_bracket");
  json mix = json::array();
  for (const auto& t : r.mixture) mix.push_back({{"degree", t.degree}, {"coeff", t.coeff}});
  j["params"] = {{"B", r.B},
                 {"s", r.s},
                 {"j_min", r.j_min},
                 {"j_max", r.j_max},
                 {"finesse", r.options.finesse},
                 {"max_cells_per_level", r.options.max_cells_per_level},
                 {"mixture", mix}};
  json m = json::array();
  for (const auto& lvl : r.levels)
    m.push_back({{"j", lvl.j},
                 {"energy", lvl.energy},
                 {"pixelized", lvl.pixelized},
                 {"cells", lvl.cells}});
  j["measurements"] = m;
  j["total"] = r.total;
  j["norm_squared"] = r.norm_squared;
  j["ratio"] = r.ratio;
  j["exact_total"] = r.exact_total;
  j["exact_rhs"] = r.exact_rhs;
  j["exact_rel_dev"] = r.exact_rel_dev;
  j["leakage"] = r.leakage;
  j["threshold"] = {{"bracket_lo", r.bracket_lo},
                    {"bracket_hi", r.bracket_hi},
                    {"slack", kThresholds.frame_slack},
                    {"exact_rel", kThresholds.frame_exact_rel}};
  j["pass"] = r.pass;
  return j.dump(2);
}

std::string to_json(const LpReport& r) {
  json j = base_report("lp_norm_scaling");
  j["params"] = {{"B", r.B}, {"s", r.s}, {"j_min", r.j_min}, {"j_max", r.j_max}};
  json m = json::array();
  for (const auto& e : r.entries) {
    json row = {{"j", e.j}, {"norm", e.norm}};
    if (std::isinf(e.p))
      row["p"] = "inf";
    else
      row["p"] = e.p;
    m.push_back(row);
  }
  j["measurements"] = m;
  json slopes = json::array();
  for (const auto& s : r.slopes) {
    json row = {{"fitted", s.fitted}, {"target", s.target}};
    if (std::isinf(s.p))
      row["p"] = "inf";
    else
      row["p"] = s.p;
    slopes.push_back(row);
  }
  j["slopes"] = slopes;
  j["l2_closed_rel"] = r.l2_closed_rel;
  j["threshold"] = {{"slope_tol", kThresholds.slope_tol},
                    {"l2_closed_rel", kThresholds.l2_closed_rel}};
  j["pass"] = r.pass;
  return j.dump(2);
}

}  // namespace mexlet
