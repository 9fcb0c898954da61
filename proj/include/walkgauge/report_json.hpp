#ifndef WALKGAUGE_REPORT_JSON_HPP
#define WALKGAUGE_REPORT_JSON_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "walkgauge/report.hpp"
#include "walkgauge/simulate.hpp"
#include "walkgauge/theorems.hpp"
#include "walkgauge/version.hpp"

namespace walkgauge {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string approx_string(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

// 15-significant-digit approximation, emitted as a JSON number.
inline double approx_value(const Rational& q) {
  return std::stod(approx_string(q.approx()));
}

}  // namespace detail

inline json invariant_report_json(const InvariantReport& rep, bool approx = false) {
  json j;
  j["tool"] = "walkgauge";
  j["version"] = kVersionString;
  j["n"] = rep.n;
  j["m"] = rep.m;
  json edges = json::array();
  for (const Edge& e : rep.edges) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["structure"] = rep.structure;
  if (rep.cycle_length > 0) j["cycle_length"] = rep.cycle_length;
  if (!rep.certificate.empty()) j["certificate"] = rep.certificate;
  j["computation_path"] = rep.computation_path;
  j["verified"] = rep.verified;

  json scalars;
  scalars["wiener_index"] = to_string(rep.wiener);
  scalars["spanning_tree_count"] = to_string(rep.spanning_trees);
  scalars["kirchhoff_index"] = rep.kirchhoff.str();
  scalars["additive_degree_kirchhoff_index"] = rep.additive_degree_kirchhoff.str();
  scalars["multiplicative_degree_kirchhoff_index"] = rep.multiplicative_degree_kirchhoff.str();
  if (approx) {
    scalars["kirchhoff_index_approx"] = detail::approx_value(rep.kirchhoff);
    scalars["additive_degree_kirchhoff_index_approx"] =
        detail::approx_value(rep.additive_degree_kirchhoff);
    scalars["multiplicative_degree_kirchhoff_index_approx"] =
        detail::approx_value(rep.multiplicative_degree_kirchhoff);
  }
  j["scalars"] = std::move(scalars);

  json rows = json::array();
  for (const VertexInvariants& v : rep.vertices) {
    json row;
    row["vertex"] = v.vertex;
    row["degree"] = v.degree;
    row["transmission"] = to_string(v.transmission);
    row["weighted_transmission"] = to_string(v.weighted_transmission);
    row["eccentricity"] = v.eccentricity;
    row["resistance_centrality"] = v.resistance_centrality.str();
    row["weighted_resistance_centrality"] = v.weighted_resistance_centrality.str();
    row["cover_cost"] = v.cover_cost.str();
    row["reverse_cover_cost"] = v.reverse_cover_cost.str();
    if (approx) {
      row["resistance_centrality_approx"] = detail::approx_value(v.resistance_centrality);
      row["weighted_resistance_centrality_approx"] =
          detail::approx_value(v.weighted_resistance_centrality);
      row["cover_cost_approx"] = detail::approx_value(v.cover_cost);
      row["reverse_cover_cost_approx"] = detail::approx_value(v.reverse_cover_cost);
    }
    rows.push_back(std::move(row));
  }
  j["vertices"] = std::move(rows);
  return j;
}

inline std::string invariant_report_csv(const InvariantReport& rep, bool approx = false) {
  std::ostringstream os;
  os << "# walkgauge " << kVersionString << "\n";
  os << "# n=" << rep.n << " m=" << rep.m << " structure=" << rep.structure;
  if (rep.cycle_length > 0) os << " cycle_length=" << rep.cycle_length;
  os << " computation_path=" << rep.computation_path << "\n";
  if (!rep.certificate.empty()) os << "# certificate=" << rep.certificate << "\n";
  os << "# wiener_index=" << to_string(rep.wiener)
     << " spanning_tree_count=" << to_string(rep.spanning_trees)
     << " kirchhoff_index=" << rep.kirchhoff.str()
     << " additive_degree_kirchhoff_index=" << rep.additive_degree_kirchhoff.str()
     << " multiplicative_degree_kirchhoff_index=" << rep.multiplicative_degree_kirchhoff.str()
     << "\n";
  os << "vertex,degree,transmission,weighted_transmission,eccentricity,"
        "resistance_centrality,weighted_resistance_centrality,cover_cost,reverse_cover_cost";
  if (approx)
    os << ",resistance_centrality_approx,weighted_resistance_centrality_approx,"
          "cover_cost_approx,reverse_cover_cost_approx";
  os << "\n";
  for (const VertexInvariants& v : rep.vertices) {
    os << v.vertex << ',' << v.degree << ',' << to_string(v.transmission) << ','
       << to_string(v.weighted_transmission) << ',' << v.eccentricity << ','
       << v.resistance_centrality.str() << ',' << v.weighted_resistance_centrality.str() << ','
       << v.cover_cost.str() << ',' << v.reverse_cover_cost.str();
    if (approx)
      os << ',' << detail::approx_string(v.resistance_centrality.approx()) << ','
         << detail::approx_string(v.weighted_resistance_centrality.approx()) << ','
         << detail::approx_string(v.cover_cost.approx()) << ','
         << detail::approx_string(v.reverse_cover_cost.approx());
    os << "\n";
  }
  return os.str();
}

inline json verification_report_json(const VerificationReport& rep) {
  json j;
  j["check_name"] = rep.check_name;
  if (rep.n > 0) j["n"] = rep.n;
  if (rep.l > 0) j["l"] = rep.l;
  j["status"] = to_string(rep.status);
  if (rep.counterexample) {
    json ce;
    ce["edge_list"] = rep.counterexample->edge_list;
    if (rep.counterexample->vertex >= 0) ce["vertex"] = rep.counterexample->vertex;
    if (rep.counterexample->vertex2 >= 0) ce["vertex2"] = rep.counterexample->vertex2;
    ce["quantity"] = rep.counterexample->quantity;
    ce["expected"] = rep.counterexample->expected;
    ce["actual"] = rep.counterexample->actual;
    j["counterexample"] = std::move(ce);
  }
  if (!rep.extremal_records.empty()) {
    json recs = json::array();
    for (const ExtremalRecord& r : rep.extremal_records) {
      json rec;
      rec["value"] = r.value.str();
      rec["certificate"] = r.certificate;
      if (r.vertex >= 0) rec["vertex"] = r.vertex;
      recs.push_back(std::move(rec));
    }
    j["extremal_records"] = std::move(recs);
  }
  if (!rep.details.empty()) j["details"] = rep.details;
  return j;
}

inline json walk_stats_json(const WalkStats& stats) {
  json j;
  j["trials"] = stats.trials;
  j["seed"] = stats.seed;
  j["sample_mean"] = stats.sample_mean;
  j["standard_error"] = stats.standard_error;
  j["step_cap"] = stats.step_cap;
  j["capped_trials"] = stats.capped_trials;
  return j;
}

}  // namespace walkgauge

#endif
