#pragma once

// JSON views of the library's results. Top-level reports carry a "schema" field.

#include <string>
#include <vector>

#include <json.hpp>

#include "rdrlab/census.hpp"
#include "rdrlab/constructions.hpp"
#include "rdrlab/graph.hpp"
#include "rdrlab/graph6.hpp"
#include "rdrlab/rainbow.hpp"
#include "rdrlab/symmetry.hpp"
#include "rdrlab/verify.hpp"

namespace rdrlab {

using Json = nlohmann::ordered_json;

inline std::string schema_name(const std::string& kind) { return "rdrlab." + kind + "/1"; }

inline Json graph_json(const Graph& g) {
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["graph6"] = encode_graph6(g);
  return j;
}

/// Colors as a map from vertex to sorted color list; empty vertices are left out.
inline Json assignment_json(const RainbowAssignment& f) {
  Json colors = Json::object();
  for (int v = 0; v < static_cast<int>(f.colors.size()); ++v)
    if (f.colors[v]) colors[std::to_string(v)] = f.color_list(v);
  return {{"k", f.k}, {"weight", f.weight()}, {"colors", colors}};
}

inline Json witness_json(const RdrWitness& w) {
  Json j = assignment_json(w.coloring);
  j["colored_side"] = w.colored_side;
  j["color_classes"] = w.color_classes;
  return j;
}

inline Json permutation_json(const Permutation& p) { return std::vector<int>(p.images().begin(), p.images().end()); }

inline Json girth_json(const GirthReport& r) {
  Json j;
  j["girth"] = r.girth == kInfiniteGirth ? Json("infinity") : Json(r.girth);
  j["girth_cycles"] = r.cycle_count;
  Json edges = Json::array();
  for (const auto& [e, c] : r.edge_counts) edges.push_back({e.first, e.second, c});
  j["edge_counts"] = edges;
  j["vertex_signatures"] = r.vertex_signatures;
  j["girth_regular"] = r.girth_regular;
  j["signature"] = r.graph_signature ? Json(*r.graph_signature) : Json(nullptr);
  return j;
}

inline const char* status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Witness: return "witness";
    case CriterionStatus::NoWitness: return "no-witness";
    case CriterionStatus::PreconditionFailed: return "precondition-failed";
  }
  return "";
}

inline const char* status_name(RdrStatus s) {
  switch (s) {
    case RdrStatus::Rdr: return "rdr";
    case RdrStatus::NotRdr: return "not-rdr";
    case RdrStatus::Undecided: return "undecided";
  }
  return "";
}

inline Json krit1_json(const Krit1Result& r) {
  Json j{{"status", status_name(r.status)}, {"reason", r.reason}, {"subgroups_tried", r.subgroups_tried}};
  if (r.witness) {
    Json gens = Json::array();
    for (const auto& p : r.witness->subgroup.generators) gens.push_back(permutation_json(p));
    j["witness"] = {{"subgroup_order", r.witness->subgroup.elements.size()},
                    {"generators", gens},
                    {"orbits", r.witness->orbits},
                    {"coloring", witness_json(r.witness->coloring)}};
  }
  return j;
}

inline Json krit2_json(const Krit2Result& r) {
  Json j{{"status", status_name(r.status)}, {"reason", r.reason}, {"groups_tried", r.groups_tried}};
  if (r.witness) {
    Json gens = Json::array();
    for (const auto& p : r.witness->group_generators) gens.push_back(permutation_json(p));
    j["witness"] = {{"group", r.witness->group},
                    {"group_generators", gens},
                    {"blocks", r.witness->system.blocks},
                    {"block", r.witness->block},
                    {"vertex", r.witness->vertex},
                    {"coloring", witness_json(r.witness->coloring)}};
  }
  return j;
}

inline Json census_row_json(const CensusRow& r) {
  return {{"schema", schema_name("census-row")}, {"order", r.order},         {"bc", r.bc},
          {"rdr3", r.rdr3},                       {"vt", r.vt},                 {"vt_rdr3", r.vt_rdr3},
          {"undecided", r.undecided},             {"seconds", r.seconds}};
}

inline Json theorem_json(const TheoremReport& r) {
  Json dis = Json::array();
  for (const auto& d : r.disagreements)
    dis.push_back({{"instance", d.instance}, {"computed", d.computed}, {"predicted", d.predicted}});
  Json obs = Json::array();
  for (const auto& o : r.observations)
    obs.push_back({{"instance", o.instance},
                   {"quantity", o.quantity},
                   {"computed", o.computed},
                   {"stated", o.stated},
                   {"consistent", o.consistent ? Json(*o.consistent) : Json(nullptr)}});
  return {{"schema", schema_name("theorem-report")},
          {"theorem", r.theorem},
          {"range", r.range},
          {"scanned", r.scanned},
          {"agree", r.agree},
          {"undecided", r.undecided},
          {"disagreements", dis},
          {"observations", obs},
          {"seconds", r.seconds}};
}

inline Json reachability_json(const ReachabilityReport& r) {
  return {{"schema", schema_name("switch-meta-graph")},
          {"nodes", r.nodes},
          {"edges", r.edges},
          {"connected", r.connected},
          {"component_sizes", r.component_sizes},
          {"symmetric", r.symmetric},
          {"colorings", r.colorings},
          {"moves", r.moves},
          {"outside", r.outside}};
}

inline Json table2_json(const Table2Report& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    std::vector<std::string> names, specs;
    for (const auto& m : e.matches) {
      names.push_back(m.display());
      specs.push_back(m.to_string());
    }
    entries.push_back({{"graph6", e.fingerprint}, {"girth", e.girth}, {"families", names}, {"specs", specs}});
  }
  return {{"schema", schema_name("table2")},
          {"order", r.order},
          {"source", r.from_census ? "census" : "families"},
          {"entries", entries},
          {"gaps", r.gaps}};
}

}  // namespace rdrlab
