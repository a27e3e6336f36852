#pragma once

// Automorphism groups and the two group-theoretic RDR criteria: a semiregular
// subgroup whose quotient is K_{d,d}, and a block system with blocks of size n/2d.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdrlab/canon.hpp"
#include "rdrlab/families.hpp"
#include "rdrlab/graph.hpp"
#include "rdrlab/permutation.hpp"
#include "rdrlab/rainbow.hpp"

namespace rdrlab {

inline PermutationGroup automorphism_group(const Graph& g) {
  auto search = canonical_search(g);
  PermutationGroup group(g.order(), search.generators);
  if (group.order() != search.order) throw std::logic_error("automorphism group order mismatch");
  return group;
}

inline bool is_vertex_transitive(const Graph& g) { return automorphism_group(g).is_transitive(); }

inline std::vector<std::vector<int>> orbits(const PermutationGroup& group) { return group.orbits(); }

inline PermutationGroup stabilizer(const PermutationGroup& group, int v) { return group.stabilizer(v); }

struct QuotientGraph {
  Graph graph;
  bool simple = true;  // false when some cell contains an edge
};

/// One vertex per cell; cells adjacent when an edge joins them.
inline QuotientGraph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& cells) {
  std::vector<int> cell_of(g.order(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) {
      if (v < 0 || v >= g.order() || cell_of[v] >= 0) throw std::invalid_argument("cells do not partition the vertices");
      cell_of[v] = static_cast<int>(c);
    }
  if (std::count(cell_of.begin(), cell_of.end(), -1)) throw std::invalid_argument("cells do not cover the vertices");
  QuotientGraph q;
  std::set<Edge> e;
  for (const auto& [u, v] : g.edges()) {
    const int a = cell_of[u], b = cell_of[v];
    if (a == b) q.simple = false;
    else e.insert({std::min(a, b), std::max(a, b)});
  }
  q.graph = build_graph(static_cast<int>(cells.size()), std::vector<Edge>(e.begin(), e.end()));
  return q;
}

/// A subgroup given by its elements, sorted.
struct Subgroup {
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;

  std::vector<std::vector<int>> orbits(int degree) const {
    return PermutationGroup(degree, generators).orbits();
  }
};

/// Calls visit on every semiregular subgroup of order m generated by at most
/// three elements, each once; visit returns false to stop. Subgroups are grown
/// one generator at a time, deduplicating each layer by element set.
inline void for_each_semiregular_subgroup(const PermutationGroup& group, std::uint64_t m,
                                          const std::function<bool(const Subgroup&)>& visit,
                                          std::uint64_t cap = kDefaultElementCap) {
  const int n = group.degree();
  if (m == 0 || group.order() % m != 0) return;
  if (m == 1) {
    visit(Subgroup{{Permutation::identity(n)}, {}});
    return;
  }
  const auto elements = group.elements(cap);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  const int id = index.at(Permutation::identity(n));

  std::vector<char> fpf(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) fpf[i] = elements[i].fixed_point_free();
  // one generator per cyclic subgroup is enough
  std::vector<int> candidates;
  std::vector<char> covered(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!fpf[i] || covered[i] || m % elements[i].element_order() != 0) continue;
    bool ok = true;
    std::vector<int> powers;
    Permutation p = elements[i];
    for (std::uint64_t e = 1; e < elements[i].element_order() && ok; ++e, p = p.then(elements[i])) {
      const int x = index.at(p);
      ok = fpf[x];
      powers.push_back(x);
    }
    if (!ok) continue;
    for (std::uint64_t e = 1; e < elements[i].element_order(); ++e)
      if (std::gcd(e, elements[i].element_order()) == 1) covered[powers[e - 1]] = 1;
    candidates.push_back(static_cast<int>(i));
  }

  struct Layer {
    std::vector<int> members;  // sorted element indices
    std::vector<int> gens;
  };
  // right multiplication by a candidate, tabulated on first use when small enough
  const bool tabulate = elements.size() * candidates.size() <= 20000000;
  std::unordered_map<int, std::vector<int>> right;
  auto mul = [&](int a, int b) {
    if (!tabulate) return index.at(elements[a].then(elements[b]));
    auto it = right.find(b);
    if (it == right.end()) {
      std::vector<int> col(elements.size());
      for (std::size_t x = 0; x < elements.size(); ++x) col[x] = index.at(elements[x].then(elements[b]));
      it = right.emplace(b, std::move(col)).first;
    }
    return it->second[a];
  };
  std::vector<char> mark(elements.size(), 0);
  // <members, c>, or empty when it is not semiregular or too large
  auto extend = [&](const Layer& base, int c) {
    Layer out{{}, base.gens};
    out.gens.push_back(c);
    std::vector<int> queue = base.members;
    for (int x : queue) mark[x] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (int s : out.gens) {
        const int x = mul(queue[i], s);
        if (mark[x]) continue;
        mark[x] = 1;
        queue.push_back(x);
        if (!fpf[x] || queue.size() > m) {
          ok = false;
          break;
        }
      }
    for (int x : queue) mark[x] = 0;
    if (!ok) return Layer{};
    std::sort(queue.begin(), queue.end());
    out.members = std::move(queue);
    return out;
  };
  std::set<std::vector<int>> seen;
  std::vector<Layer> layer{Layer{{id}, {}}};
  for (int depth = 0; depth < 3 && !layer.empty(); ++depth) {
    std::vector<Layer> next;
    for (const auto& base : layer)
      for (int c : candidates) {
        if (std::binary_search(base.members.begin(), base.members.end(), c)) continue;
        Layer grown = extend(base, c);
        if (grown.members.empty() || m % grown.members.size() != 0) continue;
        if (!seen.insert(grown.members).second) continue;
        if (grown.members.size() == m) {
          Subgroup h;
          for (int x : grown.members) h.elements.push_back(elements[x]);
          for (int x : grown.gens) h.generators.push_back(elements[x]);
          if (!visit(h)) return;
        } else {
          next.push_back(std::move(grown));
        }
      }
    layer = std::move(next);
  }
}

/// All semiregular subgroups of order m (at most three generators), deduplicated as element sets.
inline std::vector<Subgroup> semiregular_subgroups(const PermutationGroup& group, std::uint64_t m,
                                                   std::uint64_t cap = kDefaultElementCap) {
  std::vector<Subgroup> out;
  for_each_semiregular_subgroup(
      group, m, [&](const Subgroup& h) {
        out.push_back(h);
        return true;
      },
      cap);
  return out;
}

struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // each sorted, ordered by smallest member
  int block_size = 0;
  int index() const { return static_cast<int>(blocks.size()); }
};

namespace detail {

inline std::vector<std::vector<int>> images_of_block(const PermutationGroup& group, const std::vector<int>& block) {
  std::set<std::vector<int>> found{block};
  std::vector<std::vector<int>> queue{block};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : group.generators()) {
      std::vector<int> img;
      for (int x : queue[i]) img.push_back(s(x));
      std::sort(img.begin(), img.end());
      if (found.insert(img).second) queue.push_back(img);
    }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

inline bool is_invariant_partition(const PermutationGroup& group, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> cell(group.degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (cell[x] >= 0) return false;
      cell[x] = static_cast<int>(b);
    }
  if (std::count(cell.begin(), cell.end(), -1)) return false;
  for (const auto& s : group.generators())
    for (const auto& b : blocks)
      for (int x : b)
        if (cell[s(x)] != cell[s(b.front())]) return false;
  return true;
}

}  // namespace detail

/// Every block system of a transitive group with blocks of the given size.
/// Blocks through 0 are orbits of subgroups between the stabilizer of 0 and the group.
inline std::vector<BlockSystem> block_systems(const PermutationGroup& group, int size) {
  const int n = group.degree();
  if (!group.is_transitive()) throw std::invalid_argument("block systems need a transitive group");
  if (size < 1 || size > n || n % size != 0) return {};
  const auto stab = group.stabilizer(0).generators();
  const auto trans = group.transversal(0);
  auto orbit_of_0 = [&](const std::vector<Permutation>& gens) {
    return PermutationGroup(n, gens).orbit(0);
  };
  std::set<std::vector<int>> visited, blocks_found;
  std::function<void(std::vector<Permutation>&)> search = [&](std::vector<Permutation>& gens) {
    auto b = orbit_of_0(gens);
    if (!visited.insert(b).second) return;
    const int bs = static_cast<int>(b.size());
    if (bs == size) {
      blocks_found.insert(b);
      return;
    }
    if (size % bs != 0) return;
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(b.begin(), b.end(), x)) continue;
      gens.push_back(*trans[x]);
      search(gens);
      gens.pop_back();
    }
  };
  std::vector<Permutation> gens(stab.begin(), stab.end());
  search(gens);
  std::vector<BlockSystem> out;
  for (const auto& b : blocks_found) {
    BlockSystem sys;
    sys.block_size = size;
    sys.blocks = detail::images_of_block(group, b);
    std::sort(sys.blocks.begin(), sys.blocks.end());
    if (!detail::is_invariant_partition(group, sys.blocks)) throw std::logic_error("block system not invariant");
    out.push_back(std::move(sys));
  }
  return out;
}

enum class CriterionStatus { Witness, NoWitness, PreconditionFailed };

struct Krit1Witness {
  Subgroup subgroup;
  std::vector<std::vector<int>> orbits;
  RdrWitness coloring;
};

struct Krit1Result {
  CriterionStatus status = CriterionStatus::NoWitness;
  std::string reason;
  std::optional<Krit1Witness> witness;
  int subgroups_tried = 0;
};

struct Krit2Witness {
  BlockSystem system;
  std::vector<int> block;
  int vertex = 0;
  RdrWitness coloring;
  std::vector<Permutation> group_generators;  // the vertex-transitive group G
  std::string group;                          // which group was used
};

struct Krit2Result {
  CriterionStatus status = CriterionStatus::NoWitness;
  std::string reason;
  std::optional<Krit2Witness> witness;
  int groups_tried = 0;
};

namespace detail {

/// Shared preconditions of both criteria; returns the failure reason.
inline std::optional<std::string> criteria_precondition(const Graph& g, const PermutationGroup& aut) {
  if (g.order() == 0) return "empty graph";
  if (!is_connected(g)) return "not connected";
  if (!bipartition(g)) return "not bipartite";
  auto d = g.regular_degree();
  if (!d || *d == 0) return "not regular of positive degree";
  if (g.order() % (2 * *d) != 0) return "order not divisible by 2d";
  if (!aut.is_transitive()) return "not vertex-transitive";
  return std::nullopt;
}

inline std::vector<int> color_from_cells(int n, const std::vector<std::vector<int>>& colored) {
  std::vector<int> color(n, -1);
  for (std::size_t c = 0; c < colored.size(); ++c)
    for (int v : colored[c]) color[v] = static_cast<int>(c);
  return color;
}

}  // namespace detail

inline Krit1Result check_krit1(const Graph& g, std::uint64_t cap = kDefaultElementCap) {
  Krit1Result r;
  auto aut = automorphism_group(g);
  if (auto why = detail::criteria_precondition(g, aut)) {
    r.status = CriterionStatus::PreconditionFailed;
    r.reason = *why;
    return r;
  }
  const int n = g.order(), d = *g.regular_degree();
  const Graph kdd = complete_bipartite(d);
  try {
    for_each_semiregular_subgroup(
        aut, n / (2 * d),
        [&](const Subgroup& h) {
          ++r.subgroups_tried;
          auto orb = h.orbits(n);
          auto q = quotient_graph(g, orb);
          if (!q.simple || !is_isomorphic(q.graph, kdd)) return true;
          // color classes: orbits adjacent to the orbit of vertex 0, by smallest member
          std::vector<std::vector<int>> colored;
          for (int c : q.graph.neighbors(0)) colored.push_back(orb[c]);
          r.witness = Krit1Witness{h, orb, make_rdr_witness(g, d, detail::color_from_cells(n, colored))};
          r.status = CriterionStatus::Witness;
          return false;
        },
        cap);
  } catch (const GroupTooLarge& e) {
    r.status = CriterionStatus::PreconditionFailed;
    r.reason = e.what();
  }
  return r;
}

namespace detail {

inline std::optional<Krit2Witness> krit2_in_group(const Graph& g, const PermutationGroup& group, int d) {
  const int n = g.order();
  const auto side = bipartition(g)->side_of;
  for (auto& sys : block_systems(group, n / (2 * d))) {
    std::vector<int> block_of(n);
    for (std::size_t b = 0; b < sys.blocks.size(); ++b)
      for (int x : sys.blocks[b]) block_of[x] = static_cast<int>(b);
    const auto& b0 = sys.blocks[block_of[0]];
    if (!std::all_of(b0.begin(), b0.end(), [&](int x) { return side[x] == side[0]; })) continue;
    for (int v : b0) {
      std::set<int> met;
      for (int w : g.neighbors(v)) met.insert(block_of[w]);
      if (static_cast<int>(met.size()) != d) continue;
      std::vector<std::vector<int>> colored;
      for (int b : met) colored.push_back(sys.blocks[b]);
      auto coloring = make_rdr_witness(g, d, color_from_cells(n, colored));
      return Krit2Witness{sys, b0, v, std::move(coloring), group.generators(), ""};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches G = Aut(g) first, then every regular subgroup of Aut(g) (at most
/// three generators) when the group can be materialized.
inline Krit2Result check_krit2(const Graph& g, std::uint64_t cap = kDefaultElementCap) {
  Krit2Result r;
  auto aut = automorphism_group(g);
  if (auto why = detail::criteria_precondition(g, aut)) {
    r.status = CriterionStatus::PreconditionFailed;
    r.reason = *why;
    return r;
  }
  const int n = g.order(), d = *g.regular_degree();
  ++r.groups_tried;
  if (auto w = detail::krit2_in_group(g, aut, d)) {
    w->group = "automorphism group";
    r.status = CriterionStatus::Witness;
    r.witness = std::move(w);
    return r;
  }
  if (aut.order() > cap) {
    r.reason = "regular subgroups not searched: automorphism group too large";
    return r;
  }
  for_each_semiregular_subgroup(
      aut, static_cast<std::uint64_t>(n),
      [&](const Subgroup& reg) {
        ++r.groups_tried;
        if (auto w = detail::krit2_in_group(g, PermutationGroup(n, reg.generators), d)) {
          w->group = "regular subgroup";
          r.status = CriterionStatus::Witness;
          r.witness = std::move(w);
          return false;
        }
        return true;
      },
      cap);
  return r;
}

}  // namespace rdrlab
