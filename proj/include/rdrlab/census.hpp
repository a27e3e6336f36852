#pragma once

// Connected bipartite cubic graphs of small order, one per isomorphism class.
//
// Blacks are 0..h-1 and whites h..2h-1. The edge set is three perfect
// matchings: black j meets whites j, sigma(j) and tau(j). Every bicubic graph
// has a 2-factor, so sigma is taken to be a fixed representative of the cycle
// type of the best 2-factor (most cycles first); a graph is kept only in the
// shard of its own best 2-factor type. Within a shard, tau is enumerated in
// index order and kept only if no conjugation by the centralizer of sigma
// makes it lexicographically smaller; survivors are deduplicated by canonical form.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rdrlab/canon.hpp"
#include "rdrlab/families.hpp"
#include "rdrlab/graph.hpp"
#include "rdrlab/rainbow.hpp"
#include "rdrlab/symmetry.hpp"

namespace rdrlab {

struct CensusOptions {
  int workers = 1;
  std::size_t symmetry_cap = 50000;  // centralizer elements used for tau pruning
};

struct CensusStats {
  std::uint64_t tau_leaves = 0;     // complete tau reaching the leaf filters
  std::uint64_t canonical_calls = 0;
  double seconds = 0;
};

namespace detail {

using CycleType = std::vector<int>;  // cycle lengths, descending

inline CycleType cycle_type(const std::vector<int>& perm) {
  const int h = static_cast<int>(perm.size());
  std::vector<char> seen(h, 0);
  CycleType t;
  for (int i = 0; i < h; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

/// Total order on 2-factor types: more cycles first, then the larger descending sequence.
inline bool type_better(const CycleType& a, const CycleType& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

/// Partitions of h into parts >= 2, each descending.
inline std::vector<CycleType> derangement_types(int h) {
  std::vector<CycleType> out;
  CycleType cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 2; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(h, h);
  return out;
}

/// sigma with consecutive cycles in the given order.
inline std::vector<int> representative(const CycleType& type) {
  std::vector<int> sigma;
  int start = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
    start += len;
  }
  return sigma;
}

/// Centralizer elements of a representative sigma: permute equal-length
/// cycles and rotate each; identity excluded, at most cap elements.
inline std::vector<std::vector<int>> centralizer(const CycleType& type, std::size_t cap) {
  const int h = std::accumulate(type.begin(), type.end(), 0);
  std::vector<int> start(type.size());
  for (std::size_t i = 1; i < type.size(); ++i) start[i] = start[i - 1] + type[i - 1];
  std::vector<std::vector<int>> out;
  std::vector<int> target(type.size()), rot(type.size());
  std::vector<char> taken(type.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= cap) return;
    if (k == type.size()) {
      std::vector<int> c(h);
      bool identity = true;
      for (std::size_t i = 0; i < type.size(); ++i)
        for (int t = 0; t < type[i]; ++t) {
          c[start[i] + t] = start[target[i]] + (t + rot[i]) % type[i];
          identity &= c[start[i] + t] == start[i] + t;
        }
      if (!identity) out.push_back(std::move(c));
      return;
    }
    for (std::size_t j = 0; j < type.size(); ++j) {
      if (taken[j] || type[j] != type[k]) continue;
      taken[j] = 1;
      target[k] = static_cast<int>(j);
      for (int r = 0; r < type[k]; ++r) {
        rot[k] = r;
        rec(k + 1);
      }
      taken[j] = 0;
    }
  };
  rec(0);
  return out;
}

inline Graph bicubic_from_matchings(const std::vector<int>& sigma, const std::vector<int>& tau) {
  const int h = static_cast<int>(sigma.size());
  std::vector<Edge> e;
  for (int j = 0; j < h; ++j) {
    e.emplace_back(j, h + j);
    e.emplace_back(j, h + sigma[j]);
    e.emplace_back(j, h + tau[j]);
  }
  return build_graph(2 * h, e);
}

/// Growing a partial permutation one arc at a time while counting closed cycles.
class CycleTracker {
 public:
  explicit CycleTracker(int h) : head_(h), tail_(h) {
    for (int i = 0; i < h; ++i) head_[i] = tail_[i] = i;
  }
  int closed() const { return closed_; }

  // Arc j -> x, where j ends a path and x starts one.
  void push(int j, int x) {
    const int s = head_[j], e = tail_[x];
    undo_.push_back({s, tail_[s], e, head_[e]});
    if (s == x) {
      ++closed_;
    } else {
      tail_[s] = e;
      head_[e] = s;
    }
  }
  void pop(int x) {
    const auto u = undo_.back();
    undo_.pop_back();
    if (u[0] == x) {
      --closed_;
    } else {
      tail_[u[0]] = u[1];
      head_[u[2]] = u[3];
    }
  }

 private:
  std::vector<int> head_, tail_;
  std::vector<std::array<int, 4>> undo_;
  int closed_ = 0;
};

/// Perfect matchings of a bicubic graph whose complementary 2-factor beats `type`.
inline bool has_better_two_factor(const Graph& g, int h, const CycleType& type) {
  std::vector<int> match(h, -1);
  std::vector<char> used(2 * h, 0);
  bool better = false;
  std::function<void(int)> rec = [&](int j) {
    if (better) return;
    if (j == h) {
      // complement: each vertex keeps two edges; walk the cycles
      std::vector<char> seen(2 * h, 0);
      CycleType t;
      for (int s = 0; s < h; ++s) {
        if (seen[s]) continue;
        int len = 0, prev = -1, cur = s;
        do {
          seen[cur] = 1;
          int next = -1;
          for (int w : g.neighbors(cur)) {
            const bool matched = cur < h ? match[cur] == w : match[w] == cur;
            if (!matched && w != prev) {
              next = w;
              break;
            }
          }
          prev = cur;
          cur = next;
          ++len;
        } while (cur != s);
        t.push_back(len / 2);
      }
      std::sort(t.begin(), t.end(), std::greater<>());
      better = type_better(t, type);
      return;
    }
    for (int w : g.neighbors(j)) {
      if (used[w]) continue;
      used[w] = 1;
      match[j] = w;
      rec(j + 1);
      used[w] = 0;
      if (better) return;
    }
  };
  rec(0);
  return better;
}

class CensusShard {
 public:
  CensusShard(int h, CycleType type, std::size_t cap)
      : h_(h), type_(std::move(type)), sigma_(representative(type_)), sigma_inv_(h), tau_(h, -1), used_(h, 0),
        tau_cycles_(h), rho_cycles_(h) {
    for (int i = 0; i < h; ++i) sigma_inv_[sigma_[i]] = i;
    sym_ = centralizer(type_, cap);
    for (const auto& c : sym_) {
      std::vector<int> inv(h);
      for (int i = 0; i < h; ++i) inv[c[i]] = i;
      sym_inv_.push_back(std::move(inv));
    }
    active_.resize(h + 1);
    for (std::size_t i = 0; i < sym_.size(); ++i) active_[0].push_back({static_cast<int>(i), 0});
  }

  void run() { dfs(0); }

  std::vector<std::pair<std::string, Graph>> results;
  std::uint64_t leaves = 0, canonical_calls = 0;

 private:
  // Refreshes the comparison of tau against its conjugates after tau(j) was set.
  bool lex_ok(int j) {
    auto& next = active_[j + 1];
    next.clear();
    for (auto [ci, pos] : active_[j]) {
      const auto& c = sym_[ci];
      const auto& cinv = sym_inv_[ci];
      int verdict = 0;  // -1 smaller conjugate, +1 larger, 0 undecided
      while (pos < h_ && pos <= j) {
        const int k = cinv[pos];
        if (k > j) break;
        const int a = c[tau_[k]], b = tau_[pos];
        if (a != b) {
          verdict = a < b ? -1 : 1;
          break;
        }
        ++pos;
      }
      if (verdict < 0) return false;
      if (verdict == 0 && pos < h_) next.push_back({ci, pos});
    }
    return true;
  }

  void dfs(int j) {
    const int limit = static_cast<int>(type_.size());
    if (j == h_) {
      leaf();
      return;
    }
    for (int x = 0; x < h_; ++x) {
      if (used_[x] || x == j || x == sigma_[j]) continue;
      tau_[j] = x;
      used_[x] = 1;
      tau_cycles_.push(j, x);
      rho_cycles_.push(j, sigma_inv_[x]);
      if (tau_cycles_.closed() <= limit && rho_cycles_.closed() <= limit && lex_ok(j)) dfs(j + 1);
      rho_cycles_.pop(sigma_inv_[x]);
      tau_cycles_.pop(x);
      used_[x] = 0;
      tau_[j] = -1;
    }
  }

  void leaf() {
    ++leaves;
    if (type_better(cycle_type(tau_), type_)) return;
    std::vector<int> rho(h_);
    for (int j = 0; j < h_; ++j) rho[j] = sigma_inv_[tau_[j]];
    if (type_better(cycle_type(rho), type_)) return;
    Graph g = bicubic_from_matchings(sigma_, tau_);
    if (!is_connected(g)) return;
    if (has_better_two_factor(g, h_, type_)) return;
    ++canonical_calls;
    auto form = canonical_form(g);
    auto fp = form.fingerprint();
    if (seen_.insert(fp).second) results.emplace_back(std::move(fp), form.graph());
  }

  int h_;
  CycleType type_;
  std::vector<int> sigma_, sigma_inv_, tau_;
  std::vector<char> used_;
  CycleTracker tau_cycles_, rho_cycles_;
  std::vector<std::vector<int>> sym_, sym_inv_;
  std::vector<std::vector<std::pair<int, int>>> active_;
  std::set<std::string> seen_;
};

}  // namespace detail

/// Connected bipartite cubic graphs of order n (even, 6..24), in canonical
/// labeling, sorted by graph6 fingerprint.
inline std::vector<Graph> generate_bicubic(int n, const CensusOptions& opt = {}, CensusStats* stats = nullptr) {
  if (n % 2 != 0) throw std::invalid_argument("bicubic graphs have even order");
  if (n < 6 || n > 24) throw std::invalid_argument("bicubic census supports orders 6..24");
  const auto t0 = std::chrono::steady_clock::now();
  const int h = n / 2;
  const auto types = detail::derangement_types(h);
  std::vector<std::vector<std::pair<std::string, Graph>>> shard_out(types.size());
  std::vector<std::uint64_t> leaves(types.size()), calls(types.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < types.size();) {
      detail::CensusShard shard(h, types[i], opt.symmetry_cap);
      shard.run();
      shard_out[i] = std::move(shard.results);
      leaves[i] = shard.leaves;
      calls[i] = shard.canonical_calls;
    }
  };
  const int workers = std::max(1, opt.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::pair<std::string, Graph>> all;
  for (auto& s : shard_out)
    for (auto& e : s) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  all.erase(std::unique(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            all.end());
  std::vector<Graph> out;
  for (auto& e : all) out.push_back(std::move(e.second));
  if (stats) {
    for (std::size_t i = 0; i < types.size(); ++i) {
      stats->tau_leaves += leaves[i];
      stats->canonical_calls += calls[i];
    }
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return out;
}

struct CensusRow {
  int order = 0;
  int bc = 0;
  int rdr3 = 0;
  int vt = 0;
  int vt_rdr3 = 0;
  int undecided = 0;
  double seconds = 0;
};

/// Table row for one order: all bicubic graphs, how many are 3-RDR, vertex-transitive, or both.
inline CensusRow census_row(int n, const CensusOptions& opt = {}, SolveOptions solve = {},
                            std::vector<Graph>* graphs_out = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  auto graphs = generate_bicubic(n, opt);
  CensusRow row;
  row.order = n;
  row.bc = static_cast<int>(graphs.size());
  for (const auto& g : graphs) {
    auto dec = decide_d_rdr(g, solve);
    const bool vt = is_vertex_transitive(g);
    if (dec.status == RdrStatus::Undecided) ++row.undecided;
    const bool rdr = dec.status == RdrStatus::Rdr;
    row.rdr3 += rdr;
    row.vt += vt;
    row.vt_rdr3 += rdr && vt;
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (graphs_out) *graphs_out = std::move(graphs);
  return row;
}

/// Every family member of the given order, parameters in ascending order.
inline std::vector<FamilySpec> family_members(int order) {
  using K = FamilySpec::Kind;
  std::vector<FamilySpec> out;
  if (order % 2 == 0 && order / 2 >= 1) out.push_back({K::CompleteBipartite, {order / 2}});
  if (order % 2 == 0 && order / 2 >= 3) {
    const int h = order / 2;
    out.push_back({K::Prism, {h}});
    out.push_back({K::Mobius, {h}});
    for (int k = 1; 2 * k < h; ++k) out.push_back({K::GP, {h, k}});
  }
  for (int m = 1; m <= order / 4; ++m) {
    if (order % m) continue;
    const int n = order / m;
    for (int l = 0; 2 * l <= n; ++l)
      if (htg_parameters_valid(m, n, l)) out.push_back({K::HTG, {m, n, l}});
  }
  if (order % 12 == 0 && order / 12 >= 3) out.push_back({K::Xn, {order / 12}});
  return out;
}

struct Table2Entry {
  Graph graph;  // canonical labeling
  std::string fingerprint;
  int girth = 0;
  std::vector<FamilySpec> matches;  // cubic family members isomorphic to it
};

struct Table2Report {
  int order = 0;
  bool from_census = false;  // otherwise candidates come from the families only
  std::vector<Table2Entry> entries;
  std::vector<std::string> gaps;
};

struct Table2Options {
  bool census_at_24 = false;  // extended tier: take order 24 candidates from the full census
  CensusOptions census;
};

/// Vertex-transitive 3-RDR graphs of order n in {6,...,36}, each with girth and matching family members.
inline Table2Report classify_table2(int n, const Table2Options& opt = {}) {
  if (n < 6 || n > 36 || n % 6 != 0) throw std::invalid_argument("table orders are 6, 12, ..., 36");
  Table2Report rep;
  rep.order = n;
  rep.from_census = n <= 18 || (n == 24 && opt.census_at_24);
  std::vector<std::pair<std::string, Graph>> family;
  std::vector<FamilySpec> cubic;
  for (const auto& spec : family_members(n)) {
    Graph g = spec.build();
    if (g.regular_degree() != 3) continue;
    family.emplace_back(canonical_form(g).fingerprint(), std::move(g));
    cubic.push_back(spec);
  }

  std::vector<Graph> candidates;
  if (rep.from_census) {
    candidates = generate_bicubic(n, opt.census);
  } else {
    for (const auto& [fp, g] : family) candidates.push_back(g);
    rep.gaps.push_back("order " + std::to_string(n) + ": candidates are family members only, not a full census");
  }
  if (n == 36)
    rep.gaps.push_back("[36,12] (a generalized truncation of a quartic arc-transitive graph) has no construction here");
  std::set<std::string> seen;
  for (const auto& g : candidates) {
    if (!is_connected(g) || !is_d_rdr(g) || !is_vertex_transitive(g)) continue;
    auto form = canonical_form(g);
    auto fp = form.fingerprint();
    if (!seen.insert(fp).second) continue;
    Table2Entry e;
    e.graph = form.graph();
    e.fingerprint = fp;
    e.girth = girth(g);
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i].first == fp) e.matches.push_back(cubic[i]);
    rep.entries.push_back(std::move(e));
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const Table2Entry& a, const Table2Entry& b) { return a.fingerprint < b.fingerprint; });
  return rep;
}

}  // namespace rdrlab
