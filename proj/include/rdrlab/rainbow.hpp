#pragma once

// Rainbow domination: validation, an exhaustive reference solver, the main
// branch-and-bound solver, and the d-RDR decision procedure.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdrlab/graph.hpp"
#include "rdrlab/permutation.hpp"

namespace rdrlab {

using ColorSet = std::uint32_t;  // bit c-1 stands for color c

struct RainbowAssignment {
  int k = 0;
  std::vector<ColorSet> colors;

  RainbowAssignment() = default;
  RainbowAssignment(int palette, std::vector<ColorSet> sets) : k(palette), colors(std::move(sets)) {
    if (k < 0 || k > 31) throw std::invalid_argument("palette size out of range");
    const ColorSet full = k == 0 ? 0 : ((ColorSet{1} << k) - 1);
    for (ColorSet s : colors)
      if (s & ~full) throw std::invalid_argument("color outside palette");
  }

  int weight() const {
    int w = 0;
    for (ColorSet s : colors) w += std::popcount(s);
    return w;
  }
  ColorSet full() const { return k == 0 ? 0 : ((ColorSet{1} << k) - 1); }

  /// Colors of v as an ascending list of 1-based color numbers.
  std::vector<int> color_list(int v) const {
    std::vector<int> out;
    for (int c = 0; c < k; ++c)
      if (colors[v] >> c & 1) out.push_back(c + 1);
    return out;
  }

  bool operator==(const RainbowAssignment&) const = default;
};

/// True iff every vertex with an empty set sees all k colors on its neighbours.
inline bool validate_rdf(const Graph& g, const RainbowAssignment& f) {
  if (static_cast<int>(f.colors.size()) != g.order()) throw std::invalid_argument("assignment size differs from order");
  const ColorSet full = f.full();
  for (ColorSet s : f.colors)
    if (s & ~full) throw std::invalid_argument("color outside palette");
  for (int v = 0; v < g.order(); ++v) {
    if (f.colors[v]) continue;
    ColorSet seen = 0;
    for (int w : g.neighbors(v)) seen |= f.colors[w];
    if (seen != full) return false;
  }
  return true;
}

enum class SolveStatus { Solved, Undecided };

struct RainbowResult {
  SolveStatus status = SolveStatus::Solved;
  int value = 0;  // optimum when solved, best known upper bound otherwise
  RainbowAssignment witness;
  std::uint64_t nodes = 0;
};

class OutsideEnvelope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive reference: tries weight bounds W = 0, 1, ... and enumerates
/// every assignment of weight <= W in index order. Refuses instances beyond
/// n <= 12 for k <= 2 and n <= 10 for k = 3.
inline RainbowResult gamma_rk_oracle(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0) throw std::invalid_argument("negative palette");
  if (k > 3 || (k <= 2 && n > 12) || (k == 3 && n > 10))
    throw OutsideEnvelope("instance outside the exhaustive envelope (n<=12 for k<=2, n<=10 for k=3)");
  const int subsets = 1 << k;
  std::vector<ColorSet> f(n, 0);
  RainbowResult r;
  auto valid = [&] {
    const ColorSet full = static_cast<ColorSet>(subsets - 1);
    for (int v = 0; v < n; ++v) {
      if (f[v]) continue;
      ColorSet seen = 0;
      for (int w : g.neighbors(v)) seen |= f[w];
      if (seen != full) return false;
    }
    return true;
  };
  std::function<bool(int, int)> search = [&](int v, int budget) -> bool {
    ++r.nodes;
    if (v == n) return valid();
    for (int s = 0; s < subsets; ++s) {
      const int cost = std::popcount(static_cast<unsigned>(s));
      if (cost > budget) continue;
      f[v] = static_cast<ColorSet>(s);
      if (search(v + 1, budget - cost)) return true;
    }
    f[v] = 0;
    return false;
  };
  for (int w = 0;; ++w) {
    std::fill(f.begin(), f.end(), 0);
    if (search(0, w)) {
      r.value = w;
      r.witness = RainbowAssignment(k, f);
      return r;
    }
  }
}

struct SolveOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
};

namespace detail {

inline std::vector<int> bfs_degree_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
    seen[start] = 1;
    const std::size_t head0 = order.size();
    order.push_back(start);
    for (std::size_t h = head0; h < order.size(); ++h) {
      std::vector<int> nb(g.neighbors(order[h]).begin(), g.neighbors(order[h]).end());
      std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
      for (int w : nb)
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

/// Greedy k-RDF: repeatedly add the (vertex, color) that serves most unsatisfied vertices.
inline std::vector<ColorSet> greedy_rdf(const Graph& g, int k) {
  const int n = g.order();
  const ColorSet full = (ColorSet{1} << k) - 1;
  std::vector<ColorSet> f(n, 0), seen(n, 0);
  auto needy = [&](int x) { return f[x] == 0 && seen[x] != full; };
  while (true) {
    int best_u = -1, best_c = -1, best_score = 0;
    for (int u = 0; u < n; ++u)
      for (int c = 0; c < k; ++c) {
        if (f[u] >> c & 1) continue;
        int score = needy(u) ? 1 : 0;
        for (int x : g.neighbors(u))
          if (f[x] == 0 && !(seen[x] >> c & 1)) ++score;
        if (score > best_score) {
          best_score = score;
          best_u = u;
          best_c = c;
        }
      }
    if (best_u < 0) break;
    f[best_u] |= ColorSet{1} << best_c;
    for (int x : g.neighbors(best_u)) seen[x] |= ColorSet{1} << best_c;
  }
  return f;
}

class RainbowBnB {
 public:
  RainbowBnB(const Graph& g, int k, SolveOptions opt)
      : g_(g), n_(g.order()), k_(k), full_((ColorSet{1} << k) - 1), opt_(opt) {
    order_ = bfs_degree_order(g);
    assign_.assign(n_, -1);
    cnt_.assign(static_cast<std::size_t>(n_) * k_, 0);
    seen_.assign(n_, 0);
    unassigned_nbrs_.resize(n_);
    for (int v = 0; v < n_; ++v) unassigned_nbrs_[v] = g.degree(v);
    for (ColorSet s = 0; s <= full_; ++s) values_.push_back(s);
    std::stable_sort(values_.begin(), values_.end(),
                     [](ColorSet a, ColorSet b) { return std::popcount(a) < std::popcount(b); });
    auto greedy = greedy_rdf(g, k);
    best_ = n_;
    best_assign_.assign(n_, 1);  // every vertex colored {1}: no empty vertex
    int gw = 0;
    for (ColorSet s : greedy) gw += std::popcount(s);
    if (gw < best_) {
      best_ = gw;
      best_assign_ = greedy;
    }
    root_bound_ = 0;
    if (auto d = g.regular_degree(); d && *d > 0 && k <= 2 * *d) root_bound_ = (k * n_ + 2 * *d - 1) / (2 * *d);
  }

  void offer(const std::vector<ColorSet>& f) {
    int w = 0;
    for (ColorSet c : f) w += std::popcount(c);
    if (w < best_) {
      best_ = w;
      best_assign_ = f;
    }
  }

  RainbowResult solve() {
    if (best_ > root_bound_) dfs(0, 0);
    RainbowResult r;
    r.status = aborted_ ? SolveStatus::Undecided : SolveStatus::Solved;
    r.value = best_;
    r.witness = RainbowAssignment(k_, best_assign_);
    r.nodes = nodes_;
    return r;
  }

 private:
  bool needy(int x) const { return assign_[x] <= 0 && seen_[x] != full_; }

  void apply(int u, ColorSet s, int delta) {
    if (delta > 0) assign_[u] = static_cast<int>(s);
    for (int x : g_.neighbors(u)) {
      unassigned_nbrs_[x] -= delta;
      for (int c = 0; c < k_; ++c)
        if (s >> c & 1) {
          int& ct = cnt_[static_cast<std::size_t>(x) * k_ + c];
          ct += delta;
          if (ct == 0) seen_[x] &= ~(ColorSet{1} << c);
          else seen_[x] |= ColorSet{1} << c;
        }
    }
    if (delta < 0) assign_[u] = -1;
  }

  bool dead_after(int u) const {
    auto stuck = [&](int x) { return assign_[x] == 0 && unassigned_nbrs_[x] == 0 && seen_[x] != full_; };
    if (stuck(u)) return true;
    for (int x : g_.neighbors(u))
      if (stuck(x)) return true;
    return false;
  }

  // Lower bound on the weight still to be placed: every unsatisfied vertex needs
  // one unit of satisfaction, and each color placed on an unassigned vertex
  // supplies a bounded amount of it.
  int remaining_bound() {
    int unsatisfied = 0;
    std::vector<double>& share = share_;
    share.assign(n_, 0.0);
    for (int x = 0; x < n_; ++x)
      if (needy(x)) {
        ++unsatisfied;
        share[x] = 1.0 / std::popcount(full_ & ~seen_[x]);
      }
    if (unsatisfied == 0) return 0;
    units_.clear();
    for (int u = 0; u < n_; ++u) {
      if (assign_[u] >= 0) continue;
      double s = 0;
      for (int x : g_.neighbors(u)) s += share[x];
      const double self = needy(u) ? 1.0 : 0.0;
      if (s + self > 0) units_.push_back(s + self);
      if (s > 0)
        for (int j = 1; j < k_; ++j) units_.push_back(s);
    }
    std::sort(units_.begin(), units_.end(), std::greater<>());
    double acc = 0;
    int used = 0;
    for (double v : units_) {
      if (acc >= unsatisfied - 1e-9) break;
      acc += v;
      ++used;
    }
    if (acc < unsatisfied - 1e-9) return std::numeric_limits<int>::max() / 2;
    return used;
  }

  void dfs(int idx, int weight) {
    if (aborted_ || best_ <= root_bound_) return;
    ++nodes_;
    if (opt_.node_budget && nodes_ > opt_.node_budget) {
      aborted_ = true;
      return;
    }
    if (idx == n_) {
      if (weight < best_) {
        best_ = weight;
        best_assign_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) best_assign_[v] = static_cast<ColorSet>(assign_[v]);
      }
      return;
    }
    if (weight + remaining_bound() >= best_) return;
    const int u = order_[idx];
    const ColorSet used_mask = (ColorSet{1} << used_colors_) - 1;
    for (ColorSet s : values_) {
      const int cost = std::popcount(s);
      if (weight + cost >= best_) break;
      const ColorSet fresh = (s & ~used_mask) >> used_colors_;
      if (fresh & (fresh + 1)) continue;  // new colors must be the lowest unused ones
      apply(u, s, +1);
      if (!dead_after(u)) {
        const int saved = used_colors_;
        used_colors_ += std::popcount(fresh);
        dfs(idx + 1, weight + cost);
        used_colors_ = saved;
      }
      apply(u, s, -1);
      if (aborted_ || best_ <= root_bound_) return;
    }
  }

  const Graph& g_;
  int n_, k_;
  ColorSet full_;
  SolveOptions opt_;
  std::vector<int> order_;
  std::vector<int> assign_;
  std::vector<int> cnt_;
  std::vector<ColorSet> seen_;
  std::vector<int> unassigned_nbrs_;
  std::vector<ColorSet> values_;
  std::vector<ColorSet> best_assign_;
  std::vector<double> share_, units_;
  int best_ = 0, root_bound_ = 0, used_colors_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

struct RdrWitness {
  RainbowAssignment coloring;
  int colored_side = 0;  // side of bipartition(g); -1 when components use different sides
  std::vector<std::vector<int>> color_classes;

  bool operator==(const RdrWitness&) const = default;
};

enum class RdrStatus { Rdr, NotRdr, Undecided };

struct RdrDecision {
  RdrStatus status = RdrStatus::NotRdr;
  std::optional<RdrWitness> witness;
  std::string reason;  // why the answer is negative without search, if so
  std::uint64_t nodes = 0;
};

inline RdrWitness make_rdr_witness(const Graph& g, int d, const std::vector<int>& color_of) {
  RdrWitness w;
  std::vector<ColorSet> sets(g.order(), 0);
  w.color_classes.assign(d, {});
  for (int v = 0; v < g.order(); ++v)
    if (color_of[v] >= 0) {
      sets[v] = ColorSet{1} << color_of[v];
      w.color_classes[color_of[v]].push_back(v);
    }
  w.coloring = RainbowAssignment(d, sets);
  auto bp = bipartition(g);
  int side = -2;
  if (bp)
    for (int v = 0; v < g.order() && side != -1; ++v)
      if (color_of[v] >= 0) {
        const int s = bp->side_of[v];
        side = side == -2 ? s : (side == s ? s : -1);
      }
  w.colored_side = side == -2 ? 0 : side;
  return w;
}

/// Structural checks on a d-RDR witness: valid RDF, singleton colors, color
/// classes of size n/2d partitioning one side of every component.
inline bool check_rdr_witness(const Graph& g, const RdrWitness& w) {
  const int n = g.order();
  const int d = w.coloring.k;
  auto reg = g.regular_degree();
  if (!reg || *reg != d || d == 0 || n % (2 * d) != 0) return false;
  if (static_cast<int>(w.coloring.colors.size()) != n || !validate_rdf(g, w.coloring)) return false;
  if (w.coloring.weight() * 2 != n) return false;
  auto bp = bipartition(g);
  if (!bp) return false;
  for (int v = 0; v < n; ++v)
    if (std::popcount(w.coloring.colors[v]) > 1) return false;
  if (static_cast<int>(w.color_classes.size()) != d) return false;
  std::vector<int> cls(n, -1);
  for (int c = 0; c < d; ++c) {
    if (static_cast<int>(w.color_classes[c].size()) * 2 * d != n) return false;
    for (int v : w.color_classes[c]) {
      if (v < 0 || v >= n || cls[v] >= 0 || w.coloring.colors[v] != (ColorSet{1} << c)) return false;
      cls[v] = c;
    }
  }
  // colored vertices form one side inside every component
  auto comp = connected_components(g);
  std::map<int, std::set<int>> sides;
  for (int v = 0; v < n; ++v) {
    if ((cls[v] >= 0) != (w.coloring.colors[v] != 0)) return false;
    sides[comp[v]].insert(bp->side_of[v] ^ (cls[v] >= 0 ? 0 : 1));
  }
  for (const auto& [c, s] : sides)
    if (s.size() != 1) return false;
  if (w.colored_side >= 0)
    for (int v = 0; v < n; ++v)
      if ((cls[v] >= 0) != (bp->side_of[v] == w.colored_side)) return false;
  return true;
}

namespace detail {

/// Proper d-colorings of the conflict graph on one side: two colored vertices
/// conflict when they share a neighbour. DSATUR order, lowest index on ties,
/// lowest color first, a new color only as the next unused one.
class SideColoring {
 public:
  SideColoring(const Graph& g, const std::vector<int>& side, int d, std::uint64_t budget)
      : d_(d), budget_(budget), verts_(side) {
    const int m = static_cast<int>(side.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < m; ++i) local[side[i]] = i;
    adj_.assign(m, {});
    for (int i = 0; i < m; ++i) {
      std::set<int> nb;
      for (int w : g.neighbors(side[i]))
        for (int x : g.neighbors(w))
          if (local[x] >= 0 && local[x] != i) nb.insert(local[x]);
      adj_[i].assign(nb.begin(), nb.end());
    }
    cap_ = d > 0 ? (m + d - 1) / d : 0;
    color_.assign(m, -1);
    forbid_.assign(static_cast<std::size_t>(m) * d, 0);
    sat_.assign(m, 0);
    class_size_.assign(d, 0);
  }

  /// Calls visit for each coloring found; visit returns false to stop.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    dfs(0, 0);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& vertices() const { return verts_; }

 private:
  void set(int v, int c, int delta) {
    for (int x : adj_[v]) {
      int& f = forbid_[static_cast<std::size_t>(x) * d_ + c];
      if (delta > 0 && f++ == 0) ++sat_[x];
      if (delta < 0 && --f == 0) --sat_[x];
    }
    class_size_[c] += delta;
    color_[v] = delta > 0 ? c : -1;
  }

  void dfs(int colored, int used) {
    if (stop_) return;
    ++nodes_;
    if (budget_ && nodes_ > budget_) {
      aborted_ = stop_ = true;
      return;
    }
    const int m = static_cast<int>(verts_.size());
    if (colored == m) {
      if (!(*visit_)(color_)) stop_ = true;
      return;
    }
    int v = -1;
    for (int i = 0; i < m; ++i)
      if (color_[i] < 0 && (v < 0 || sat_[i] > sat_[v])) v = i;
    if (sat_[v] >= d_) return;
    for (int c = 0; c < d_ && c <= used; ++c) {
      if (forbid_[static_cast<std::size_t>(v) * d_ + c] || class_size_[c] >= cap_) continue;
      set(v, c, +1);
      dfs(colored + 1, std::max(used, c + 1));
      set(v, c, -1);
      if (stop_) return;
    }
  }

  int d_;
  std::uint64_t budget_;
  std::vector<int> verts_;
  std::vector<std::vector<int>> adj_;
  int cap_ = 0;
  std::vector<int> color_, forbid_, sat_, class_size_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false, aborted_ = false;
  std::uint64_t nodes_ = 0;
};

inline std::optional<std::string> rdr_precondition(const Graph& g) {
  auto reg = g.regular_degree();
  if (!reg) return "not regular";
  if (*reg == 0) return "degree 0";
  if (g.order() % (2 * *reg) != 0) return "order not divisible by 2d";
  if (!bipartition(g)) return "not bipartite";
  return std::nullopt;
}

}  // namespace detail

/// d-RDR decision with a node budget over the coloring search.
inline RdrDecision decide_d_rdr(const Graph& g, SolveOptions opt = {}) {
  RdrDecision out;
  if (auto why = detail::rdr_precondition(g)) {
    out.reason = *why;
    return out;
  }
  const int d = *g.regular_degree();
  const int n = g.order();
  auto bp = *bipartition(g);
  auto comp = connected_components(g);
  const int ncomp = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
  std::vector<int> color_of(n, -1);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> sides[2];
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) sides[bp.side_of[v]].push_back(v);
    if ((sides[0].size() + sides[1].size()) % (2 * d) != 0) {
      out.reason = "component order not divisible by 2d";
      return out;
    }
    bool found = false;
    for (int s = 0; s < 2 && !found; ++s) {
      const std::uint64_t left = opt.node_budget ? opt.node_budget - std::min(opt.node_budget - 1, out.nodes) : 0;
      detail::SideColoring sc(g, sides[s], d, left);
      sc.run([&](const std::vector<int>& col) {
        for (std::size_t i = 0; i < col.size(); ++i) color_of[sides[s][i]] = col[i];
        found = true;
        return false;
      });
      out.nodes += sc.nodes();
      if (sc.aborted()) {
        out.status = RdrStatus::Undecided;
        return out;
      }
    }
    if (!found) return out;
  }
  out.status = RdrStatus::Rdr;
  out.witness = make_rdr_witness(g, d, color_of);
  return out;
}

/// Witness for a d-RDR graph (d its degree), or nullopt when g is not d-RDR.
inline std::optional<RdrWitness> is_d_rdr(const Graph& g) { return decide_d_rdr(g).witness; }

/// Exact k-rainbow domination number by branch and bound.
inline RainbowResult gamma_rk(const Graph& g, int k, SolveOptions opt = {}) {
  if (k < 0) throw std::invalid_argument("negative palette");
  if (k > 16) throw std::invalid_argument("palette larger than 16 not supported");
  if (k == 0) return {SolveStatus::Solved, 0, RainbowAssignment(0, std::vector<ColorSet>(g.order(), 0)), 0};
  if (g.order() == 0) return {SolveStatus::Solved, 0, RainbowAssignment(k, {}), 0};
  detail::RainbowBnB solver(g, k, opt);
  // A d-RDR coloring lifted to k = d + j colors: class i also takes color d + i for i <= j.
  if (auto d = g.regular_degree(); d && *d > 0 && *d <= k && k <= 2 * *d) {
    auto dec = decide_d_rdr(g, {10000});
    if (dec.witness) {
      std::vector<ColorSet> f = dec.witness->coloring.colors;
      for (int i = 0; i < k - *d; ++i)
        for (int v : dec.witness->color_classes[i]) f[v] |= ColorSet{1} << (*d + i);
      if (validate_rdf(g, RainbowAssignment(k, f))) solver.offer(f);
    }
  }
  return solver.solve();
}

enum class ColoringQuotient { None, ColorPerm, ColorPermAut };

namespace detail {

inline std::vector<int> normalize_colors(const std::vector<int>& col) {
  std::vector<int> rename(col.size() + 1, -1);
  std::vector<int> out(col.size());
  int next = 0;
  for (std::size_t v = 0; v < col.size(); ++v) {
    if (col[v] < 0) {
      out[v] = -1;
      continue;
    }
    if (rename[col[v]] < 0) rename[col[v]] = next++;
    out[v] = rename[col[v]];
  }
  return out;
}

}  // namespace detail

/// All d-RDR colorings (as color index per vertex, -1 uncolored) of g,
/// one representative per class of the chosen quotient. ColorPermAut needs
/// the automorphism group as a materializable PermutationGroup.
inline std::vector<RdrWitness> enumerate_rdr_colorings(const Graph& g, ColoringQuotient modulo,
                                                       const PermutationGroup* aut = nullptr,
                                                       std::size_t limit = 1000000) {
  if (detail::rdr_precondition(g)) return {};
  const int d = *g.regular_degree();
  const int n = g.order();
  auto bp = *bipartition(g);
  auto comp = connected_components(g);
  const int ncomp = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;

  // Per component: colorings up to renaming, then expanded over color permutations.
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all(1, std::vector<int>(n, -1));
  for (int c = 0; c < ncomp; ++c) {
    std::set<std::vector<int>> local;
    for (int s = 0; s < 2; ++s) {
      std::vector<int> side;
      for (int v = 0; v < n; ++v)
        if (comp[v] == c && bp.side_of[v] == s) side.push_back(v);
      detail::SideColoring sc(g, side, d, 0);
      sc.run([&](const std::vector<int>& col) {
        std::vector<int> p = perm;
        do {
          std::vector<int> full(n, -1);
          for (std::size_t i = 0; i < col.size(); ++i) full[side[i]] = p[col[i]];
          local.insert(std::move(full));
        } while (std::next_permutation(p.begin(), p.end()));
        if (local.size() > limit) throw std::length_error("too many RDR colorings");
        return true;
      });
    }
    if (local.empty()) return {};
    std::vector<std::vector<int>> next;
    for (const auto& base : all)
      for (const auto& part : local) {
        std::vector<int> merged = base;
        for (int v = 0; v < n; ++v)
          if (comp[v] == c) merged[v] = part[v];
        next.push_back(std::move(merged));
        if (next.size() > limit) throw std::length_error("too many RDR colorings");
      }
    all = std::move(next);
  }

  std::set<std::vector<int>> reps;
  std::vector<Permutation> elements;
  if (modulo == ColoringQuotient::ColorPermAut) {
    if (!aut) throw std::invalid_argument("automorphism group required");
    elements = aut->elements();
  }
  for (const auto& col : all) {
    switch (modulo) {
      case ColoringQuotient::None: reps.insert(col); break;
      case ColoringQuotient::ColorPerm: reps.insert(detail::normalize_colors(col)); break;
      case ColoringQuotient::ColorPermAut: {
        std::vector<int> best;
        std::vector<int> moved(n);
        for (const auto& a : elements) {
          for (int v = 0; v < n; ++v) moved[v] = col[a(v)];
          auto cand = detail::normalize_colors(moved);
          if (best.empty() || cand < best) best = std::move(cand);
        }
        reps.insert(best);
        break;
      }
    }
  }
  std::vector<RdrWitness> out;
  for (const auto& col : reps) out.push_back(make_rdr_witness(g, d, col));
  return out;
}

/// Every 6-cycle reads empty, {a}, empty, {b}, empty, {c} with a, b, c distinct,
/// up to rotation and reflection.
inline bool check_six_cycle_pattern(const Graph& g, const RdrWitness& w) {
  if (w.coloring.k != 3) throw std::invalid_argument("six-cycle pattern needs a 3-coloring");
  bool ok = true;
  for_each_cycle(g, 6, [&](std::span<const int> c) {
    if (!ok) return;
    const auto& f = w.coloring.colors;
    for (int shift = 0; shift < 2; ++shift) {
      bool alt = true;
      ColorSet seen = 0;
      for (int i = 0; i < 6 && alt; ++i) {
        const ColorSet s = f[c[(i + shift) % 6]];
        if (i % 2 == 0) {
          alt = s == 0;
        } else {
          alt = std::popcount(s) == 1 && !(seen & s);
          seen |= s;
        }
      }
      if (alt) return;
    }
    ok = false;
  });
  return ok;
}

}  // namespace rdrlab
