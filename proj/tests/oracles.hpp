#pragma once

// Slow, obviously-correct reference routines used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rdrlab/graph.hpp"

namespace oracle {

using rdrlab::Edge;
using rdrlab::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Every vertex permutation that maps edges to edges. Only for tiny graphs.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  const auto m = matrix(g);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (m[u][v] != m[p[u]][p[v]]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  const auto ma = matrix(a), mb = matrix(b);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (ma[u][v] != mb[p[u]][p[v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return rdrlab::build_graph(n, edges);
}

/// Random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return rdrlab::build_graph(n, edges);
}

inline Graph relabeled_randomly(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> p(g.order());
  for (int i = 0; i < g.order(); ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return rdrlab::relabel(g, p);
}

/// graph6 written directly from the format description, short header only.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string s(1, static_cast<char>(n + 63));
  const auto m = matrix(g);
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(m[u][v] ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int j = 0; j < 6; ++j) x = x * 2 + bits[i + j];
    s += static_cast<char>(x + 63);
  }
  return s;
}

/// Smallest cycle length by trying every subset-free BFS from every edge.
inline int girth(const Graph& g) {
  int best = rdrlab::kInfiniteGirth;
  for (auto [a, b] : g.edges()) {
    // shortest a-b path avoiding edge ab, plus the edge
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue{a};
    dist[a] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int y : g.neighbors(x)) {
        if ((x == a && y == b) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[b] > 0) best = std::min(best, dist[b] + 1);
  }
  return best;
}

}  // namespace oracle
