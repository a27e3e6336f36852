#pragma once

// Closed-form RDR predicates for the named families checked against the
// decision procedure, plus girth/signature classification reports.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rdrlab/canon.hpp"
#include "rdrlab/census.hpp"
#include "rdrlab/families.hpp"
#include "rdrlab/graph.hpp"
#include "rdrlab/rainbow.hpp"
#include "rdrlab/symmetry.hpp"

namespace rdrlab {

struct Disagreement {
  std::string instance;
  std::string computed;
  std::string predicted;
};

/// A computed quantity reported next to the value(s) stated for it.
struct Observation {
  std::string instance;
  std::string quantity;
  std::string computed;
  std::vector<std::string> stated;
  std::optional<bool> consistent;  // empty when there is nothing definite to compare with
};

struct TheoremReport {
  std::string theorem;
  std::string range;
  int scanned = 0;
  int agree = 0;
  int undecided = 0;
  std::vector<Disagreement> disagreements;
  std::vector<Observation> observations;
  double seconds = 0;

  bool ok() const { return disagreements.empty() && agree == scanned; }
  bool observations_consistent() const {
    return std::none_of(observations.begin(), observations.end(),
                        [](const Observation& o) { return o.consistent == false; });
  }
};

struct VerifyOptions {
  int workers = 1;
  SolveOptions solve;
};

namespace detail {

inline std::string signature_text(const std::optional<std::vector<int>>& sig) {
  if (!sig) return "none";
  std::string s = "(";
  for (std::size_t i = 0; i < sig->size(); ++i) s += (i ? "," : "") + std::to_string((*sig)[i]);
  return s + ")";
}

/// Runs fn(i) for i in [0, count) over a pool of workers.
inline void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  std::atomic<int> next{0};
  auto run = [&] {
    for (int i; (i = next++) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

struct PredicateCase {
  FamilySpec spec;
  bool predicted = false;
};

struct PredicateOutcome {
  RdrStatus status = RdrStatus::NotRdr;
  std::optional<RdrWitness> witness;
};

/// Decides every case and tallies against the predicate; extra(i, outcome) may append observations.
inline TheoremReport scan_predicate(
    std::string theorem, std::string range, const std::vector<PredicateCase>& cases, const VerifyOptions& opt,
    const std::function<void(const PredicateCase&, const Graph&, const PredicateOutcome&, std::vector<Observation>&)>&
        extra = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.range = std::move(range);
  std::vector<PredicateOutcome> out(cases.size());
  std::vector<std::vector<Observation>> obs(cases.size());
  parallel_for(static_cast<int>(cases.size()), opt.workers, [&](int i) {
    Graph g = cases[i].spec.build();
    auto dec = decide_d_rdr(g, opt.solve);
    out[i] = {dec.status, dec.witness};
    if (extra) extra(cases[i], g, out[i], obs[i]);
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    ++r.scanned;
    const auto& o = out[i];
    if (o.status == RdrStatus::Undecided) {
      ++r.undecided;
      r.disagreements.push_back({cases[i].spec.display(), "undecided", cases[i].predicted ? "RDR" : "not RDR"});
      continue;
    }
    const bool rdr = o.status == RdrStatus::Rdr;
    if (rdr == cases[i].predicted) ++r.agree;
    else r.disagreements.push_back({cases[i].spec.display(), rdr ? "RDR" : "not RDR", cases[i].predicted ? "RDR" : "not RDR"});
    for (auto& x : obs[i]) r.observations.push_back(std::move(x));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Observation iso_observation(const std::string& a_name, const Graph& a, const FamilySpec& b) {
  const bool iso = is_isomorphic(a, b.build()).has_value();
  return {a_name, "isomorphic to " + b.display(), iso ? "true" : "false", {"true"}, iso};
}

}  // namespace detail

/// Cycles (d=2), prisms and Mobius ladders (d=3), wreaths (d=4) and K_{d,d}.
inline TheoremReport verify_basic_families(int max_n = 40, int wreath_max = 12, const VerifyOptions& opt = {}) {
  using K = FamilySpec::Kind;
  std::vector<detail::PredicateCase> cases;
  for (int d = 1; d <= 6; ++d) cases.push_back({{K::CompleteBipartite, {d}}, true});
  for (int n = 3; n <= max_n; ++n) cases.push_back({{K::Cycle, {n}}, n % 4 == 0});
  for (int n = 3; n <= max_n; ++n) cases.push_back({{K::Prism, {n}}, n % 6 == 0});
  for (int n = 3; n <= max_n; ++n) cases.push_back({{K::Mobius, {n}}, n % 6 == 3});
  for (int n = 3; n <= std::min(max_n, wreath_max); ++n) cases.push_back({{K::Wreath, {n}}, n >= 4 && n % 4 == 0});
  return detail::scan_predicate("basic families", "K(d,d) d<=6; C, Prism, ML n<=" + std::to_string(max_n) +
                                                      "; W n<=" + std::to_string(std::min(max_n, wreath_max)),
                                cases, opt);
}

/// The girth/signature case a VT 3-RDR GP(n,k) falls into, as (girth, signature), if any.
inline std::optional<std::pair<int, std::vector<int>>> gp_signature_case(int n, int k) {
  const bool square_one = (static_cast<long long>(k) * k) % n == 1;
  if (k == 1 && n % 6 == 0) return std::pair{4, std::vector<int>{1, 1, 2}};
  if (2 * k + 2 == n && n % 12 == 0) return std::pair{6, std::vector<int>{2, 2, 2}};
  if (n == 24 && k == 5) return std::pair{8, std::vector<int>{8, 8, 8}};
  if (n == 24 && k == 7) return std::pair{8, std::vector<int>{10, 11, 11}};
  if (n % 18 == 0 && n >= 72 && k >= 17 && k <= n / 2 - 2 && (k % 18 == 1 || k % 18 == 17) && square_one)
    return std::pair{8, std::vector<int>{2, 2, 4}};
  if ((n % 18 == 6 || n % 18 == 12) && n >= 30 && k >= 5 && k <= n / 2 - 2 && (k % 6 == 1 || k % 6 == 5) && square_one)
    return std::pair{8, std::vector<int>{5, 5, 6}};
  return std::nullopt;
}

/// GP(n,k) is 3-RDR iff n = 0 (mod 6) and k = +-1 (mod 6); VT members are classified by girth and signature.
inline TheoremReport verify_gp(int max_n = 36, const VerifyOptions& opt = {}) {
  std::vector<detail::PredicateCase> cases;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k)
      cases.push_back({{FamilySpec::Kind::GP, {n, k}}, n % 6 == 0 && (k % 6 == 1 || k % 6 == 5)});
  return detail::scan_predicate(
      "GP criterion", "3<=n<=" + std::to_string(max_n) + ", 1<=k<n/2", cases, opt,
      [](const detail::PredicateCase& c, const Graph& g, const detail::PredicateOutcome& o, std::vector<Observation>& obs) {
        if (o.status != RdrStatus::Rdr || !is_vertex_transitive(g)) return;
        const int n = c.spec.params[0], k = c.spec.params[1];
        auto rep = girth_signature(g);
        const std::string computed = std::to_string(rep.girth) + " " + detail::signature_text(rep.graph_signature);
        auto expected = gp_signature_case(n, k);
        if (!expected) {
          obs.push_back({c.spec.display(), "girth signature", computed, {"no listed case"}, false});
          return;
        }
        const std::string stated = std::to_string(expected->first) + " " + detail::signature_text(expected->second);
        obs.push_back({c.spec.display(), "girth signature", computed, {stated}, computed == stated});
      });
}

inline bool htg_predicate(int m, int n, int l) {
  if (n % 6 != 0) return false;
  return m % 2 == 0 ? l % 6 == 0 : l % 6 == 3;
}

/// HTG(m,n,l) is 3-RDR iff m even and n = l = 0 (mod 6), or m odd, n = 0 and l = 3 (mod 6).
/// RDR members get their girth/signature checked against the listed cases and the named isomorphisms tested.
inline TheoremReport verify_htg(int max_order = 48, const VerifyOptions& opt = {}) {
  using K = FamilySpec::Kind;
  std::vector<detail::PredicateCase> cases;
  for (int m = 1; 4 * m <= max_order; ++m)
    for (int n = 4; m * n <= max_order; n += 2)
      for (int l = 0; 2 * l <= n; ++l)
        if (htg_parameters_valid(m, n, l)) cases.push_back({{K::HTG, {m, n, l}}, htg_predicate(m, n, l)});
  return detail::scan_predicate(
      "HTG criterion", "m*n<=" + std::to_string(max_order), cases, opt,
      [](const detail::PredicateCase& c, const Graph& g, const detail::PredicateOutcome& o, std::vector<Observation>& obs) {
        if (o.status != RdrStatus::Rdr) return;
        const int m = c.spec.params[0], n = c.spec.params[1], l = c.spec.params[2];
        const std::string name = c.spec.display();
        auto rep = girth_signature(g);
        const std::string sig = detail::signature_text(rep.graph_signature);
        const std::string computed = std::to_string(rep.girth) + " " + sig;
        const int half = m * n / 2;
        if (rep.girth == 4) {
          obs.push_back({name, "girth signature", computed, {"4 (1,1,2)"}, computed == "4 (1,1,2)"});
          if (half % 6 == 0) obs.push_back(detail::iso_observation(name, g, {K::Prism, {half}}));
          else if (half % 6 == 3) obs.push_back(detail::iso_observation(name, g, {K::Mobius, {half}}));
        } else if (m == 3 && n == 6 && l == 3) {
          obs.push_back({name, "girth signature", computed, {"6 (4,4,4)"}, computed == "6 (4,4,4)"});
        } else if (m == 3 && l == 3) {
          obs.push_back({name, "girth signature", computed, {"6 (3,3,3)"}, computed == "6 (3,3,3)"});
          obs.push_back(detail::iso_observation(name, g, {K::HTG, {n / 2, 6, n % 12 == 0 ? 0 : 3}}));
        } else if (n == 6) {
          // The case statement and its proof give different values; both are shown, neither asserted.
          obs.push_back({name, "girth signature", computed, {"6 (2,3,3)", "6 (2,2,3)"}, std::nullopt});
          std::optional<int> jump;
          if (m % 6 == 2 || m % 6 == 5) jump = 2 * m - 1;
          if (m % 6 == 4 || m % 6 == 1) jump = 2 * m + 1;
          if (jump && htg_parameters_valid(1, 6 * m, *jump) && 2 * *jump <= 6 * m)
            obs.push_back(detail::iso_observation(name, g, {K::HTG, {1, 6 * m, *jump}}));
        } else if (m == 2 && 2 * l == n && n % 4 == 0) {
          obs.push_back({name, "girth signature", computed, {"6 (2,2,2)"}, computed == "6 (2,2,2)"});
          obs.push_back(detail::iso_observation(name, g, {K::GP, {n, n / 2 - 1}}));
        } else {
          const bool listed = rep.girth == 6 && (sig == "(2,2,2)" || sig == "(3,3,3)" || sig == "(2,2,3)" ||
                                                 sig == "(2,3,3)" || sig == "(4,4,4)");
          obs.push_back({name, "girth signature", computed, {"one of the listed girth-6 cases"}, listed});
        }
      });
}

/// X_n for 3 <= n <= max_n: connected, VT, 3-RDR; girth and signature; the GP isomorphisms for
/// n != 0 (mod 3) and non-isomorphism to every GP and HTG of the same order for n = 0 (mod 3).
/// Signatures are reported next to every stated value, including GP(24,7) for n = 4.
inline TheoremReport verify_xn(int max_n = 6, const VerifyOptions& opt = {}) {
  using K = FamilySpec::Kind;
  const auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.theorem = "X_n family";
  r.range = "3<=n<=" + std::to_string(max_n);
  const int count = std::max(0, max_n - 2);
  std::vector<std::vector<Observation>> obs(count);
  std::vector<std::optional<Disagreement>> bad(count);
  std::vector<char> undecided(count, 0);
  detail::parallel_for(count, opt.workers, [&](int i) {
    const int n = i + 3;
    const FamilySpec spec{K::Xn, {n}};
    const std::string name = spec.display();
    Graph g = spec.build();
    auto dec = decide_d_rdr(g, opt.solve);
    const bool conn = is_connected(g), vt = is_vertex_transitive(g), rdr = dec.status == RdrStatus::Rdr;
    if (dec.status == RdrStatus::Undecided) undecided[i] = 1;
    if (!(conn && vt && rdr))
      bad[i] = Disagreement{name,
                            std::string(conn ? "" : "disconnected ") + (vt ? "" : "not-VT ") +
                                (dec.status == RdrStatus::Undecided ? "undecided" : rdr ? "RDR" : "not-RDR"),
                            "connected VT RDR"};
    auto rep = girth_signature(g);
    const std::string computed = std::to_string(rep.girth) + " " + detail::signature_text(rep.graph_signature);
    auto& o = obs[i];
    if (n == 3) {
      o.push_back({name, "girth signature", computed, {"6 (0,1,1)"}, computed == "6 (0,1,1)"});
    } else {
      o.push_back({name, "girth signature", computed, {"8 (5,5,6) [statement]", "8 (5,6,6) [proof]"}, std::nullopt});
    }
    if (n % 3 != 0) {
      const int k = n % 3 == 1 ? 2 * n - 1 : 2 * n + 1;
      const FamilySpec gp_spec{K::GP, {6 * n, k}};
      Graph h = gp_spec.build();
      const bool iso = is_isomorphic(g, h).has_value();
      o.push_back({name, "isomorphic to " + gp_spec.display(), iso ? "true" : "false", {"true"}, iso});
      auto hrep = girth_signature(h);
      const std::string hsig = std::to_string(hrep.girth) + " " + detail::signature_text(hrep.graph_signature);
      std::vector<std::string> stated;
      if (auto c = gp_signature_case(6 * n, k)) stated.push_back(std::to_string(c->first) + " " + detail::signature_text(c->second));
      o.push_back({gp_spec.display(), "girth signature", hsig, stated, std::nullopt});
      // Isomorphic graphs share signatures; equal signatures without isomorphism are fine, the reverse is not.
      const bool same = hsig == computed;
      o.push_back({name + " vs " + gp_spec.display(), "signatures equal", same ? "true" : "false",
                   {iso ? "true (isomorphic)" : "either (not isomorphic)"}, iso ? same : std::optional<bool>{}});
    } else {
      std::string hit;
      const std::string fp = canonical_form(g).fingerprint();
      for (const auto& other : family_members(12 * n)) {
        if (other.kind != K::GP && other.kind != K::HTG) continue;
        if (canonical_form(other.build()).fingerprint() == fp) hit += (hit.empty() ? "" : " ") + other.display();
      }
      o.push_back({name, "isomorphic GP/HTG of order " + std::to_string(12 * n), hit.empty() ? "none" : hit, {"none"},
                   hit.empty()});
    }
  });
  for (int i = 0; i < count; ++i) {
    ++r.scanned;
    r.undecided += undecided[i];
    if (bad[i]) r.disagreements.push_back(*bad[i]);
    else ++r.agree;
    for (auto& x : obs[i]) r.observations.push_back(std::move(x));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Criterion soundness: a witness from either group criterion must be a valid RDR coloring
/// and agree with the decision procedure. krit1 without krit2 is counted separately.
struct CriteriaScan {
  int graphs = 0;
  int krit1_witness = 0, krit2_witness = 0;
  int precondition_failed = 0;  // includes group too large
  int violations = 0;
  int krit1_without_krit2 = 0;
  std::vector<std::string> violation_details;
  std::vector<std::string> krit1_only;  // graph6 of graphs where krit1 holds but krit2 found nothing
};

inline CriteriaScan scan_criteria(const std::vector<Graph>& graphs, const VerifyOptions& opt = {},
                                  std::uint64_t cap = kDefaultElementCap) {
  struct One {
    Krit1Result k1;
    Krit2Result k2;
    std::optional<bool> rdr;
  };
  std::vector<One> res(graphs.size());
  detail::parallel_for(static_cast<int>(graphs.size()), opt.workers, [&](int i) {
    const Graph& g = graphs[i];
    res[i].k1 = check_krit1(g, cap);
    res[i].k2 = check_krit2(g, cap);
    if (res[i].k1.status == CriterionStatus::Witness || res[i].k2.status == CriterionStatus::Witness) {
      auto dec = decide_d_rdr(g, opt.solve);
      if (dec.status != RdrStatus::Undecided) res[i].rdr = dec.status == RdrStatus::Rdr;
    }
  });
  CriteriaScan s;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const auto& x = res[i];
    ++s.graphs;
    if (x.k1.status == CriterionStatus::PreconditionFailed) ++s.precondition_failed;
    auto check = [&](const RdrWitness& w, const char* which) {
      if (!validate_rdf(g, w.coloring) || !check_rdr_witness(g, w) || x.rdr != true) {
        ++s.violations;
        s.violation_details.push_back(std::string(which) + " " + encode_graph6(g));
      }
    };
    if (x.k1.status == CriterionStatus::Witness) {
      ++s.krit1_witness;
      check(x.k1.witness->coloring, "krit1");
    }
    if (x.k2.status == CriterionStatus::Witness) {
      ++s.krit2_witness;
      check(x.k2.witness->coloring, "krit2");
    }
    if (x.k1.status == CriterionStatus::Witness && x.k2.status != CriterionStatus::Witness) {
      ++s.krit1_without_krit2;
      s.krit1_only.push_back(encode_graph6(g));
    }
  }
  return s;
}

}  // namespace rdrlab
