#pragma once

// Edge switching and stitching on d-RDR graphs, and a reachability explorer
// over switching moves.

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rdrlab/canon.hpp"
#include "rdrlab/graph.hpp"
#include "rdrlab/rainbow.hpp"
#include "rdrlab/symmetry.hpp"

namespace rdrlab {

/// Edges {u1,v1} and {u2,v2} with f(u1) = f(u2) = {color}; they become {u1,v2}, {u2,v1}.
struct SwitchMove {
  int u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  int color = 0;  // 1-based

  bool operator==(const SwitchMove&) const = default;
};

namespace detail {

inline std::vector<int> color_index(const RdrWitness& w) {
  std::vector<int> col(w.coloring.colors.size(), -1);
  for (std::size_t v = 0; v < col.size(); ++v)
    if (w.coloring.colors[v]) col[v] = std::countr_zero(w.coloring.colors[v]);
  return col;
}

inline Edge normalized(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

inline std::vector<Edge> edges_without(const Graph& g, const std::set<Edge>& drop) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (!drop.count(e)) out.push_back(e);
  return out;
}

inline RdrWitness revalidated(const Graph& g, int d, const std::vector<int>& col) {
  auto w = make_rdr_witness(g, d, col);
  if (!check_rdr_witness(g, w)) throw std::logic_error("rewired coloring is not a d-RDR witness");
  return w;
}

}  // namespace detail

/// Orients two edges so that u1, u2 are the colored endpoints.
inline SwitchMove make_switch_move(const RdrWitness& w, Edge e1, Edge e2) {
  const auto& f = w.coloring.colors;
  auto orient = [&](Edge e) { return f[e.first] ? e : Edge{e.second, e.first}; };
  e1 = orient(e1);
  e2 = orient(e2);
  if (!f[e1.first] || !f[e2.first] || f[e1.first] != f[e2.first])
    throw std::invalid_argument("switch edges need colored endpoints of the same color");
  return {e1.first, e1.second, e2.first, e2.second, std::countr_zero(f[e1.first]) + 1};
}

inline std::pair<Graph, RdrWitness> edge_switch(const Graph& g, const RdrWitness& w, const SwitchMove& m) {
  const auto& f = w.coloring.colors;
  const int n = g.order();
  for (int x : {m.u1, m.v1, m.u2, m.v2})
    if (x < 0 || x >= n) throw std::invalid_argument("switch endpoint out of range");
  if (std::set<int>{m.u1, m.v1, m.u2, m.v2}.size() != 4) throw std::invalid_argument("switch endpoints not distinct");
  if (!g.adjacent(m.u1, m.v1) || !g.adjacent(m.u2, m.v2)) throw std::invalid_argument("switch edge not in graph");
  const ColorSet c = m.color >= 1 && m.color <= w.coloring.k ? ColorSet{1} << (m.color - 1) : 0;
  if (!c || f[m.u1] != c || f[m.u2] != c || f[m.v1] || f[m.v2])
    throw std::invalid_argument("switch colors do not match the witness");
  if (g.adjacent(m.u1, m.v2) || g.adjacent(m.u2, m.v1)) throw std::invalid_argument("replacement edge already present");
  auto edges = detail::edges_without(g, {detail::normalized(m.u1, m.v1), detail::normalized(m.u2, m.v2)});
  edges.push_back(detail::normalized(m.u1, m.v2));
  edges.push_back(detail::normalized(m.u2, m.v1));
  Graph out = build_graph(n, edges);
  return {out, detail::revalidated(out, w.coloring.k, detail::color_index(w))};
}

/// Edge of the first graph and edge of the second graph, rewired across.
struct StitchPair {
  Edge first, second;
};

/// Disjoint union (second graph shifted by the order of the first) with each
/// pair rewired: {u1,v1}, {u2,v2} become {u1,v2}, {u2,v1}, u the colored endpoints.
inline std::pair<Graph, RdrWitness> stitch(const Graph& g1, const RdrWitness& w1, const Graph& g2, const RdrWitness& w2,
                                           const std::vector<StitchPair>& pairs) {
  const int d = w1.coloring.k;
  if (w2.coloring.k != d) throw std::invalid_argument("stitched witnesses use different palettes");
  const int n1 = g1.order();
  const auto& f1 = w1.coloring.colors;
  const auto& f2 = w2.coloring.colors;
  std::set<Edge> drop;
  std::vector<Edge> added;
  std::set<int> touched1, touched2;
  for (const auto& p : pairs) {
    auto [a1, b1] = p.first;
    auto [a2, b2] = p.second;
    if (!g1.adjacent(a1, b1) || !g2.adjacent(a2, b2)) throw std::invalid_argument("stitch edge not in graph");
    const int u1 = f1[a1] ? a1 : b1, v1 = f1[a1] ? b1 : a1;
    const int u2 = f2[a2] ? a2 : b2, v2 = f2[a2] ? b2 : a2;
    if (!f1[u1] || f1[u1] != f2[u2]) throw std::invalid_argument("stitch pair colors do not match");
    if (!touched1.insert(u1).second || !touched1.insert(v1).second || !touched2.insert(u2).second ||
        !touched2.insert(v2).second)
      throw std::invalid_argument("stitch pairs are not disjoint");
    drop.insert(detail::normalized(u1, v1));
    drop.insert(detail::normalized(n1 + u2, n1 + v2));
    added.push_back(detail::normalized(u1, n1 + v2));
    added.push_back(detail::normalized(n1 + u2, v1));
  }
  Graph joined = disjoint_union(g1, g2);
  auto edges = detail::edges_without(joined, drop);
  edges.insert(edges.end(), added.begin(), added.end());
  Graph out = build_graph(joined.order(), edges);
  auto col = detail::color_index(w1);
  auto col2 = detail::color_index(w2);
  col.insert(col.end(), col2.begin(), col2.end());
  return {out, detail::revalidated(out, d, col)};
}

/// Every valid switch move for one witness, in index order; moves that would
/// create a multi-edge are left out.
inline std::vector<SwitchMove> switch_moves(const Graph& g, const RdrWitness& w) {
  std::vector<SwitchMove> out;
  for (int c = 0; c < w.coloring.k; ++c) {
    const auto& cls = w.color_classes[c];
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const int u1 = cls[i], u2 = cls[j];
        for (int v1 : g.neighbors(u1))
          for (int v2 : g.neighbors(u2)) {
            if (v1 == v2 || g.adjacent(u1, v2) || g.adjacent(u2, v1)) continue;
            out.push_back({u1, v1, u2, v2, c + 1});
          }
      }
  }
  return out;
}

struct ReachabilityReport {
  std::vector<std::string> nodes;               // canonical fingerprints, in input order of first appearance
  std::vector<std::pair<int, int>> arcs;        // directed: some switch of nodes[a] yields nodes[b], a != b
  std::vector<std::pair<int, int>> edges;       // undirected, a < b
  std::vector<std::size_t> component_sizes;     // descending
  bool connected = true;
  bool symmetric = true;                        // every arc has its reverse
  std::uint64_t colorings = 0, moves = 0;
  std::vector<std::string> outside;             // reached classes not among the inputs
};

struct ReachabilityOptions {
  int workers = 1;
  std::uint64_t symmetry_cap = kDefaultElementCap;  // colorings reduced modulo Aut when |Aut| is at most this
};

/// Meta-graph on the isomorphism classes of the inputs, joined by single switch
/// moves taken over every RDR coloring of each input.
inline ReachabilityReport switching_reachability(const std::vector<Graph>& graphs, ReachabilityOptions opt = {}) {
  ReachabilityReport r;
  std::vector<Graph> reps;
  std::map<std::string, int> index;
  for (const auto& g : graphs) {
    auto fp = canonical_form(g).fingerprint();
    if (index.emplace(fp, static_cast<int>(r.nodes.size())).second) {
      r.nodes.push_back(fp);
      reps.push_back(g);
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::set<std::string>> reached(m);
  std::vector<std::uint64_t> colorings(m), moves(m);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next++) < m;) {
      const Graph& g = reps[i];
      std::vector<RdrWitness> ws;
      const auto aut = automorphism_group(g);
      if (aut.order() <= opt.symmetry_cap)
        ws = enumerate_rdr_colorings(g, ColoringQuotient::ColorPermAut, &aut);
      else
        ws = enumerate_rdr_colorings(g, ColoringQuotient::ColorPerm);
      colorings[i] = ws.size();
      for (const auto& w : ws)
        for (const auto& mv : switch_moves(g, w)) {
          ++moves[i];
          reached[i].insert(canonical_form(edge_switch(g, w, mv).first).fingerprint());
        }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, opt.workers); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::set<std::pair<int, int>> arcs;
  std::set<std::string> outside;
  for (int i = 0; i < m; ++i) {
    r.colorings += colorings[i];
    r.moves += moves[i];
    for (const auto& fp : reached[i]) {
      auto it = index.find(fp);
      if (it == index.end()) outside.insert(fp);
      else if (it->second != i) arcs.insert({i, it->second});
    }
  }
  r.arcs.assign(arcs.begin(), arcs.end());
  std::set<std::pair<int, int>> und;
  for (auto [a, b] : arcs) {
    und.insert({std::min(a, b), std::max(a, b)});
    if (!arcs.count({b, a})) r.symmetric = false;
  }
  r.edges.assign(und.begin(), und.end());
  r.outside.assign(outside.begin(), outside.end());
  if (m > 0) {
    Graph meta = build_graph(m, r.edges);
    auto comp = connected_components(meta);
    std::vector<std::size_t> sizes(*std::max_element(comp.begin(), comp.end()) + 1, 0);
    for (int c : comp) ++sizes[c];
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    r.component_sizes = sizes;
    r.connected = sizes.size() == 1;
  }
  return r;
}

}  // namespace rdrlab
