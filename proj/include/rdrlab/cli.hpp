#pragma once

// Command-line front end. run_command takes the arguments after the program
// name and returns the process exit code:
//   0 success, 1 verification disagreement, 2 usage error, 3 node budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdrlab/census.hpp"
#include "rdrlab/constructions.hpp"
#include "rdrlab/families.hpp"
#include "rdrlab/graph6.hpp"
#include "rdrlab/json_io.hpp"
#include "rdrlab/rainbow.hpp"
#include "rdrlab/symmetry.hpp"
#include "rdrlab/verify.hpp"

namespace rdrlab {

enum ExitCode { kExitOk = 0, kExitDisagreement = 1, kExitUsage = 2, kExitBudget = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A family descriptor such as gp:12,5, or a graph6 string.
inline Graph parse_graph_argument(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string name = text.substr(0, colon);
    for (const auto& row : FamilySpec::kTable)
      if (name == row.name) {
        try {
          return FamilySpec::parse(text).build();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
  }
  try {
    return decode_graph6(text);
  } catch (const Graph6Error& e) {
    throw UsageError("not a family descriptor or graph6 string: " + text + " (" + e.what() + ")");
  }
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("RDRLAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("RDRLAB_BUDGET is not a number");
    }
  }
  return 0;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string witness_text(const RdrWitness& w) {
  std::string s = "colored side " + std::to_string(w.colored_side) + ";";
  for (std::size_t c = 0; c < w.color_classes.size(); ++c)
    s += " color " + std::to_string(c + 1) + ": {" + join_ints(w.color_classes[c]) + "}";
  return s;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rdrlab: rainbow domination regular graphs"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint64_t budget = 0;
  bool budget_given = false;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option_function<std::uint64_t>(
      "--budget",
      [&](const std::uint64_t& b) {
        budget = b;
        budget_given = true;
      },
      "node budget for the solvers (default RDRLAB_BUDGET, 0 = unlimited)");

  std::string graph_a, graph_b;
  int k = 0, d = 0, n = 0, max = 0, workers = 1, krit = 0;
  bool enumerate = false, row = false, emit = false;
  std::string modulo = "color", file, which;

  auto* gamma = app.add_subcommand("gamma", "k-rainbow domination number");
  gamma->add_option("graph", graph_a, "family descriptor or graph6")->required();
  gamma->add_option("--k", k, "palette size")->required();

  auto* rdr = app.add_subcommand("rdr", "decide d-rainbow domination regularity");
  rdr->add_option("graph", graph_a)->required();
  rdr->add_option("--d", d, "degree to test (default: the regular degree)");
  rdr->add_flag("--enumerate", enumerate, "list all RDR colorings");
  rdr->add_option("--modulo", modulo, "none, color or aut")->check(CLI::IsMember({"none", "color", "aut"}));

  auto* signature = app.add_subcommand("signature", "girth and girth-cycle signature");
  signature->add_option("graph", graph_a)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("a", graph_a)->required();
  iso->add_option("b", graph_b)->required();

  auto* criteria = app.add_subcommand("criteria", "group-theoretic RDR criteria");
  criteria->add_option("graph", graph_a)->required();
  criteria->add_option("--krit", krit, "1 or 2 (default both)")->check(CLI::IsMember({1, 2}));

  auto* census = app.add_subcommand("census", "bicubic census of one order");
  census->add_option("n", n)->required();
  census->add_flag("--row", row, "print the census row (default)");
  census->add_flag("--emit-g6", emit, "print every graph as graph6");
  census->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* explore = app.add_subcommand("switch-explore", "edge-switching meta-graph over a graph6 file");
  explore->add_option("file", file)->required();
  explore->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a family theorem over a parameter range");
  verify->add_option("which", which)->required()->check(CLI::IsMember({"basic", "gp", "htg", "xn", "table2"}));
  verify->add_option("--max", max, "range bound");
  verify->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const bool text = format == "text";
  auto emit_json = [&](Json j) { out << j.dump(2) << "\n"; };

  try {
    SolveOptions solve;
    solve.node_budget = budget_given ? budget : default_budget();

    if (gamma->parsed()) {
      if (k < 0) throw UsageError("--k must be non-negative");
      Graph g = parse_graph_argument(graph_a);
      auto r = gamma_rk(g, k, solve);
      const bool solved = r.status == SolveStatus::Solved;
      if (text) {
        out << "gamma_r" << k << " = " << r.value << (solved ? "" : " (upper bound, budget exhausted)") << "\n";
      } else {
        emit_json({{"schema", schema_name("gamma")},
                   {"graph", graph_json(g)},
                   {"k", k},
                   {"status", solved ? "solved" : "undecided"},
                   {"value", r.value},
                   {"nodes", r.nodes},
                   {"witness", assignment_json(r.witness)}});
      }
      return solved ? kExitOk : kExitBudget;
    }

    if (rdr->parsed()) {
      Graph g = parse_graph_argument(graph_a);
      auto reg = g.regular_degree();
      RdrDecision dec;
      if (d > 0 && (!reg || *reg != d)) {
        dec.status = RdrStatus::NotRdr;
        dec.reason = "not " + std::to_string(d) + "-regular";
      } else {
        dec = decide_d_rdr(g, solve);
      }
      Json j{{"schema", schema_name("rdr")},
             {"graph", graph_json(g)},
             {"d", reg ? *reg : 0},
             {"rdr", dec.status == RdrStatus::Rdr},
             {"status", status_name(dec.status)},
             {"reason", dec.reason},
             {"nodes", dec.nodes}};
      if (dec.witness) j["witness"] = witness_json(*dec.witness);
      std::vector<RdrWitness> all;
      if (enumerate && dec.status == RdrStatus::Rdr) {
        if (modulo == "aut") {
          auto aut = automorphism_group(g);
          all = enumerate_rdr_colorings(g, ColoringQuotient::ColorPermAut, &aut);
        } else {
          all = enumerate_rdr_colorings(g, modulo == "none" ? ColoringQuotient::None : ColoringQuotient::ColorPerm);
        }
        Json list = Json::array();
        for (const auto& w : all) list.push_back(witness_json(w));
        j["modulo"] = modulo;
        j["coloring_count"] = all.size();
        j["colorings"] = list;
      }
      if (text) {
        out << status_name(dec.status);
        if (!dec.reason.empty()) out << " (" << dec.reason << ")";
        out << "\n";
        if (dec.witness) out << detail::witness_text(*dec.witness) << "\n";
        if (enumerate && dec.status == RdrStatus::Rdr) out << all.size() << " colorings modulo " << modulo << "\n";
      } else {
        emit_json(j);
      }
      return dec.status == RdrStatus::Undecided ? kExitBudget : kExitOk;
    }

    if (signature->parsed()) {
      Graph g = parse_graph_argument(graph_a);
      if (girth(g) == kInfiniteGirth) throw UsageError("graph is acyclic");
      auto rep = girth_signature(g);
      if (text) {
        out << "girth " << rep.girth << ", " << rep.cycle_count << " girth cycles, signature "
            << (rep.graph_signature ? "(" + detail::join_ints(*rep.graph_signature) + ")" : "none (not girth-regular)")
            << "\n";
      } else {
        Json j = girth_json(rep);
        j["schema"] = schema_name("signature");
        j["graph"] = graph_json(g);
        emit_json(j);
      }
      return kExitOk;
    }

    if (iso->parsed()) {
      Graph a = parse_graph_argument(graph_a), b = parse_graph_argument(graph_b);
      auto phi = is_isomorphic(a, b);
      if (text) {
        out << (phi ? "isomorphic" : "not isomorphic") << "\n";
      } else {
        Json j{{"schema", schema_name("iso")}, {"a", graph_json(a)}, {"b", graph_json(b)}, {"isomorphic", phi.has_value()}};
        if (phi) j["witness"] = permutation_json(*phi);
        emit_json(j);
      }
      return kExitOk;
    }

    if (criteria->parsed()) {
      Graph g = parse_graph_argument(graph_a);
      Json j{{"schema", schema_name("criteria")}, {"graph", graph_json(g)}};
      std::ostringstream t;
      if (krit != 2) {
        auto r = check_krit1(g);
        j["krit1"] = krit1_json(r);
        t << "krit1: " << status_name(r.status) << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
      }
      if (krit != 1) {
        auto r = check_krit2(g);
        j["krit2"] = krit2_json(r);
        t << "krit2: " << status_name(r.status) << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
      }
      if (text) out << t.str();
      else emit_json(j);
      return kExitOk;
    }

    if (census->parsed()) {
      if (n % 2 != 0 || n < 6 || n > 24) throw UsageError("census order must be even, 6..24");
      CensusOptions opt;
      opt.workers = workers;
      if (emit) {
        for (const auto& g : generate_bicubic(n, opt)) out << encode_graph6(g) << "\n";
        return kExitOk;
      }
      auto r = census_row(n, opt, solve);
      if (text) {
        out << "order " << r.order << ": BC " << r.bc << ", 3-RDR " << r.rdr3 << ", VT " << r.vt << ", VT 3-RDR "
            << r.vt_rdr3 << (r.undecided ? ", undecided " + std::to_string(r.undecided) : "") << "\n";
      } else {
        emit_json(census_row_json(r));
      }
      return r.undecided ? kExitBudget : kExitOk;
    }

    if (explore->parsed()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open " + file);
      std::vector<Graph> graphs;
      for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
          graphs.push_back(decode_graph6(line));
        } catch (const Graph6Error& e) {
          throw UsageError(file + ": " + e.what());
        }
      }
      for (const auto& g : graphs)
        if (!is_d_rdr(g)) throw UsageError("input contains a graph that is not d-RDR: " + encode_graph6(g));
      ReachabilityOptions opt;
      opt.workers = workers;
      auto r = switching_reachability(graphs, opt);
      if (text) {
        out << r.nodes.size() << " classes, " << r.edges.size() << " switch edges, "
            << (r.connected ? "connected" : "not connected") << "\n";
      } else {
        emit_json(reachability_json(r));
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      VerifyOptions opt;
      opt.workers = workers;
      opt.solve = solve;
      if (which == "table2") {
        const int top = max > 0 ? max : 30;
        Json reports = Json::array();
        for (int order = 6; order <= std::min(top, 36); order += 6) {
          auto r = classify_table2(order);
          if (text) {
            out << "order " << order << " (" << (r.from_census ? "census" : "families") << ")\n";
            for (const auto& e : r.entries) {
              out << "  girth " << e.girth << ":";
              for (const auto& m : e.matches) out << " " << m.display();
              out << "\n";
            }
            for (const auto& gap : r.gaps) out << "  note: " << gap << "\n";
          }
          reports.push_back(table2_json(r));
        }
        if (!text) emit_json({{"schema", schema_name("table2-scan")}, {"orders", reports}});
        return kExitOk;
      }
      TheoremReport r;
      if (which == "basic") r = verify_basic_families(max > 0 ? max : 40, 12, opt);
      if (which == "gp") r = verify_gp(max > 0 ? max : 36, opt);
      if (which == "htg") r = verify_htg(max > 0 ? max : 48, opt);
      if (which == "xn") r = verify_xn(max > 0 ? max : 6, opt);
      if (text) {
        out << r.theorem << " [" << r.range << "]: " << r.agree << "/" << r.scanned << " agree\n";
        for (const auto& dd : r.disagreements)
          out << "  disagreement " << dd.instance << ": computed " << dd.computed << ", predicted " << dd.predicted << "\n";
        for (const auto& o : r.observations) {
          out << "  " << o.instance << " " << o.quantity << ": " << o.computed;
          for (const auto& s : o.stated) out << " | stated " << s;
          if (o.consistent) out << (*o.consistent ? " | consistent" : " | INCONSISTENT");
          out << "\n";
        }
      } else {
        emit_json(theorem_json(r));
      }
      if (r.undecided) return kExitBudget;
      return r.disagreements.empty() ? kExitOk : kExitDisagreement;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rdrlab
