#pragma once

// Simple undirected graphs with stable vertex indices, plus the structural
// queries the rest of the library leans on: components, bipartition, girth
// and the girth-cycle signature.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdrlab {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
  }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int u = 0; u < order(); ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Common degree if every vertex has the same degree.
  std::optional<int> regular_degree() const {
    if (adj_.empty()) return 0;
    const int d = degree(0);
    for (int v = 1; v < order(); ++v)
      if (degree(v) != d) return std::nullopt;
    return d;
  }

  bool operator==(const Graph& other) const = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  std::vector<std::vector<int>> adj_;
};

/// Builds a normalized simple graph. Rejects out-of-range endpoints, loops
/// and duplicate edges with std::invalid_argument.
inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("duplicate edge");
  }
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// The graph whose vertex perm[v] corresponds to vertex v of g.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> e;
  e.reserve(g.size());
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return build_graph(g.order(), e);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return build_graph(a.order() + b.order(), e);
}

/// Component index per vertex, numbered in order of smallest member.
inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto comp = connected_components(g);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

struct Bipartition {
  std::vector<int> side0;
  std::vector<int> side1;
  std::vector<int> side_of;  // 0 or 1 per vertex
};

/// Proper 2-coloring with the smallest vertex of every component on side 0,
/// or nullopt when some component has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : g.neighbors(u)) {
        auto& sw = side[w];
        if (sw < 0) {
          sw = 1 - side[u];
          queue.push_back(w);
        } else if (sw == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  b.side_of = side;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

/// Closed walk of odd length, or empty when g is bipartite.
inline std::vector<int> odd_closed_walk(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(n, -1), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (dist[s] >= 0) continue;
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          // root -> u, edge u-w, w -> root
          std::vector<int> up, down;
          for (int x = u; x >= 0; x = parent[x]) up.push_back(x);
          for (int x = w; x >= 0; x = parent[x]) down.push_back(x);
          std::vector<int> walk(up.rbegin(), up.rend());
          walk.insert(walk.end(), down.begin(), down.end() - 1);
          return walk;
        }
      }
    }
  }
  return {};
}

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Exact girth by breadth-first search from every vertex; kInfiniteGirth for forests.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

/// Calls visit once per cycle of the given length. Each cycle is reported as
/// its canonical vertex sequence: it starts at its smallest vertex and
/// proceeds towards the smaller of that vertex's two cycle neighbours.
inline void for_each_cycle(const Graph& g, int length, const std::function<void(std::span<const int>)>& visit) {
  if (length < 3) return;
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  path.reserve(length);
  std::function<void(int)> extend = [&](int start) {
    const int last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.adjacent(last, start) && path[1] < last) visit(path);
      return;
    }
    for (int w : g.neighbors(last)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
}

struct GirthReport {
  int girth = kInfiniteGirth;
  std::uint64_t cycle_count = 0;
  /// (edge, number of girth cycles through it), ordered like Graph::edges().
  std::vector<std::pair<Edge, int>> edge_counts;
  std::vector<std::vector<int>> vertex_signatures;
  bool girth_regular = false;
  std::optional<std::vector<int>> graph_signature;
};

/// Enumerates all girth cycles once each and tallies them per edge and vertex.
inline GirthReport girth_signature(const Graph& g) {
  GirthReport r;
  r.girth = girth(g);
  if (r.girth == kInfiniteGirth) throw std::invalid_argument("girth signature of an acyclic graph");
  const int n = g.order();
  // edge id through (vertex, neighbour slot)
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto slot = [&](int u, int v) {
    auto nb = g.neighbors(u);
    return offset[u] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  std::vector<int> count(offset.back(), 0);
  for_each_cycle(g, r.girth, [&](std::span<const int> c) {
    ++r.cycle_count;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      ++count[slot(a, b)];
      ++count[slot(b, a)];
    }
  });
  for (const auto& e : g.edges()) r.edge_counts.emplace_back(e, count[slot(e.first, e.second)]);
  r.vertex_signatures.resize(n);
  for (int v = 0; v < n; ++v) {
    auto& sig = r.vertex_signatures[v];
    for (int i = offset[v]; i < offset[v + 1]; ++i) sig.push_back(count[i]);
    std::sort(sig.begin(), sig.end());
  }
  r.girth_regular = g.regular_degree().has_value() &&
                    std::all_of(r.vertex_signatures.begin(), r.vertex_signatures.end(),
                                [&](const auto& s) { return s == r.vertex_signatures.front(); });
  if (r.girth_regular && n > 0) r.graph_signature = r.vertex_signatures.front();
  return r;
}

}  // namespace rdrlab
