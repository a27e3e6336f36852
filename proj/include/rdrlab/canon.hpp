#pragma once

// Canonical labeling and automorphism generators by individualization and
// equitable refinement. The leaf certificate is the sorted relabeled edge list;
// the canonical labeling is the leaf with the least certificate.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdrlab/graph.hpp"
#include "rdrlab/graph6.hpp"
#include "rdrlab/permutation.hpp"

namespace rdrlab {

struct CanonicalForm {
  int order = 0;
  std::vector<Edge> edges;  // canonical graph, sorted, u < v
  Permutation labeling;     // labeling(v) = canonical index of v

  Graph graph() const { return build_graph(order, edges); }
  /// graph6 text of the canonical graph; equal iff isomorphic.
  std::string fingerprint() const { return encode_graph6(graph()); }

  bool operator==(const CanonicalForm& o) const { return order == o.order && edges == o.edges; }
};

struct AutomorphismSearch {
  CanonicalForm form;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

namespace detail {

struct Partition {
  std::vector<int> lab;   // vertices in cell order
  std::vector<int> pos;   // inverse of lab
  std::vector<int> cell;  // start index of the cell holding v
  std::vector<int> len;   // cell length, valid at start indices
  int cells = 0;
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), n_(g.order()), count_(n_, 0), queued_(n_, 0), marked_(n_, 0) {}

  Partition initial(std::span<const int> colors) {
    Partition p;
    p.lab.resize(n_);
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.len.assign(n_, 0);
    for (int v = 0; v < n_; ++v) p.lab[v] = v;
    auto color = [&](int v) { return colors.empty() ? 0 : colors[v]; };
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return color(a) < color(b); });
    std::vector<int> splitters;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && color(p.lab[j]) == color(p.lab[i])) ++j;
      p.len[i] = j - i;
      for (int t = i; t < j; ++t) {
        p.cell[p.lab[t]] = i;
        p.pos[p.lab[t]] = t;
      }
      ++p.cells;
      splitters.push_back(i);
      i = j;
    }
    refine(p, splitters);
    return p;
  }

  void individualize(Partition& p, int v) {
    const int c = p.cell[v];
    const int l = p.len[c];
    const int u = p.lab[c];
    std::swap(p.lab[c], p.lab[p.pos[v]]);
    p.pos[u] = p.pos[v];
    p.pos[v] = c;
    p.len[c] = 1;
    p.len[c + 1] = l - 1;
    for (int i = c + 1; i < c + l; ++i) p.cell[p.lab[i]] = c + 1;
    ++p.cells;
    refine(p, std::vector<int>{c});
  }

 private:
  void refine(Partition& p, const std::vector<int>& splitters) {
    std::deque<int> queue;
    for (int s : splitters) {
      queued_[s] = 1;
      queue.push_back(s);
    }
    std::vector<int> touched, touched_cells;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      queued_[s] = 0;
      if (p.cells == n_) continue;
      touched.clear();
      for (int i = s; i < s + p.len[s]; ++i)
        for (int w : g_.neighbors(p.lab[i]))
          if (count_[w]++ == 0) touched.push_back(w);
      touched_cells.clear();
      for (int w : touched) {
        const int c = p.cell[w];
        if (!marked_[c]) {
          marked_[c] = 1;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (int c : touched_cells) {
        marked_[c] = 0;
        const int l = p.len[c];
        if (l == 1) continue;
        auto first = p.lab.begin() + c, last = first + l;
        if (std::all_of(first, last, [&](int v) { return count_[v] == count_[*first]; })) continue;
        std::sort(first, last, [&](int a, int b) { return count_[a] < count_[b]; });
        std::vector<int> starts;
        for (int i = c; i < c + l; ++i) {
          if (i == c || count_[p.lab[i]] != count_[p.lab[i - 1]]) starts.push_back(i);
          p.pos[p.lab[i]] = i;
        }
        starts.push_back(c + l);
        int largest = 0;
        for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
          const int t = starts[k], lt = starts[k + 1] - starts[k];
          p.len[t] = lt;
          for (int i = t; i < t + lt; ++i) p.cell[p.lab[i]] = t;
          if (lt > starts[largest + 1] - starts[largest]) largest = static_cast<int>(k);
        }
        p.cells += static_cast<int>(starts.size()) - 2;
        const bool was_queued = queued_[c];
        for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
          const int t = starts[k];
          if (queued_[t]) continue;
          if (!was_queued && static_cast<int>(k) == largest) continue;
          queued_[t] = 1;
          queue.push_back(t);
        }
      }
      for (int w : touched) count_[w] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> count_;
  std::vector<char> queued_, marked_;
};

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()), refiner_(g) {
    edges_ = g.edges();
    Partition root = refiner_.initial(colors);
    dfs(root, 0, 0, true);
  }

  AutomorphismSearch result() && {
    AutomorphismSearch r;
    r.form.order = n_;
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[best_lab_[i]] = i;
    r.form.labeling = Permutation(std::move(pos));
    for (auto code : best_cert_) r.form.edges.emplace_back(static_cast<int>(code / n_), static_cast<int>(code % n_));
    r.generators = std::move(gens_);
    r.order = order_;
    return r;
  }

 private:
  std::vector<std::uint32_t> certificate(const Partition& p) const {
    std::vector<std::uint32_t> c;
    c.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
      std::uint32_t a = p.pos[u], b = p.pos[v];
      if (a > b) std::swap(a, b);
      c.push_back(a * static_cast<std::uint32_t>(n_) + b);
    }
    std::sort(c.begin(), c.end());
    return c;
  }

  void add_generator(const Partition& p, const std::vector<int>& target_lab) {
    std::vector<int> img(n_);
    for (int v = 0; v < n_; ++v) img[v] = target_lab[p.pos[v]];
    Permutation gamma(std::move(img));
    if (!gamma.is_identity()) gens_.push_back(std::move(gamma));
  }

  // Orbit representatives of the generators fixing the current prefix.
  std::vector<int> prefix_orbits() const {
    std::vector<Permutation> fixing;
    for (const auto& g : gens_)
      if (std::all_of(prefix_.begin(), prefix_.end(), [&](int x) { return g.fixes(x); })) fixing.push_back(g);
    return orbit_representatives(n_, fixing);
  }

  // Returns -1 to continue normally, or the first-path level to unwind to.
  int dfs(const Partition& p, int level, int divergence, bool on_first) {
    if (p.cells == n_) return leaf(p, divergence);
    int target = -1;
    for (int i = 0; i < n_; i += p.len[i])
      if (p.len[i] > 1 && (target < 0 || p.len[i] < p.len[target])) target = i;
    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + target + p.len[target]);
    std::sort(members.begin(), members.end());

    std::vector<int> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::vector<int> rep;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const int w = members[idx];
      if (gens_seen != gens_.size()) {
        rep = prefix_orbits();
        gens_seen = gens_.size();
      }
      if (std::any_of(explored.begin(), explored.end(), [&](int u) { return rep[u] == rep[w]; })) continue;
      explored.push_back(w);
      Partition child = p;
      refiner_.individualize(child, w);
      prefix_.push_back(w);
      const bool child_first = on_first && idx == 0;
      const int r = dfs(child, level + 1, child_first ? level + 1 : divergence, child_first);
      prefix_.pop_back();
      if (r >= 0 && r < level) return r;
    }
    if (on_first) {
      rep = prefix_orbits();
      std::uint64_t size = 0;
      for (int x = 0; x < n_; ++x) size += rep[x] == rep[members.front()];
      order_ *= size;
    }
    return -1;
  }

  int leaf(const Partition& p, int divergence) {
    auto cert = certificate(p);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = std::move(cert);
      return -1;
    }
    if (cert == first_cert_) {
      add_generator(p, first_lab_);
      return divergence;
    }
    if (cert == best_cert_) {
      add_generator(p, best_lab_);
      return -1;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  std::vector<Edge> edges_;
  std::vector<int> prefix_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<Permutation> gens_;
  std::uint64_t order_ = 1;
};

}  // namespace detail

/// Full search: canonical form, automorphism generators and group order.
/// `colors` optionally fixes an initial vertex coloring that automorphisms must preserve.
inline AutomorphismSearch canonical_search(const Graph& g, std::span<const int> colors = {}) {
  if (g.order() == 0) return {};
  return detail::CanonSearch(g, colors).result();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_search(g).form; }

/// Vertex bijection phi with {phi(u), phi(v)} an edge of b for every edge {u, v} of a.
inline std::optional<Permutation> is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  auto ca = canonical_form(a), cb = canonical_form(b);
  if (!(ca == cb)) return std::nullopt;
  if (a.order() == 0) return Permutation{};
  Permutation phi = ca.labeling.then(cb.labeling.inverse());
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(phi(u), phi(v))) throw std::logic_error("isomorphism witness failed edge check");
  return phi;
}

}  // namespace rdrlab
