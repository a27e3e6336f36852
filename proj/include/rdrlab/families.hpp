#pragma once

// Named graph families with fixed vertex labelings.
//   prism, mobius, wreath, gp: u_i = i, v_i = n + i
//   htg: v_{i,j} = i*n + j
//   xn: element index of S_3 x D_n (see group.hpp)

#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdrlab/graph.hpp"
#include "rdrlab/group.hpp"

namespace rdrlab {

namespace detail {

inline int mod(int a, int n) { return ((a % n) + n) % n; }

inline Graph from_edge_set(int n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return build_graph(n, edges);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

inline Graph cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return detail::from_edge_set(n, e);
}

/// K_{d,d} with sides 0..d-1 and d..2d-1.
inline Graph complete_bipartite(int d) {
  detail::require(d >= 1, "K_{d,d} needs d >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) e.emplace_back(i, d + j);
  return build_graph(2 * d, e);
}

inline Graph prism(int n) {
  detail::require(n >= 3, "prism needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(n + i, n + (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  return detail::from_edge_set(2 * n, e);
}

/// Prism with {u_{n-1},u_0}, {v_{n-1},v_0} replaced by {u_{n-1},v_0}, {v_{n-1},u_0}.
inline Graph mobius(int n) {
  detail::require(n >= 3, "Mobius ladder needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(n + i, n + i + 1);
  }
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
  e.emplace_back(n - 1, n);
  e.emplace_back(2 * n - 1, 0);
  return detail::from_edge_set(2 * n, e);
}

inline Graph wreath(int n) {
  detail::require(n >= 3, "wreath graph needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    e.emplace_back(i, j);
    e.emplace_back(i, n + j);
    e.emplace_back(n + i, n + j);
    e.emplace_back(n + i, j);
  }
  return detail::from_edge_set(2 * n, e);
}

/// Generalized Petersen graph, 1 <= k < n/2.
inline Graph gp(int n, int k) {
  detail::require(n >= 3, "GP needs n >= 3");
  detail::require(k >= 1 && 2 * k < n, "GP(n,k) needs 1 <= k < n/2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return detail::from_edge_set(2 * n, e);
}

inline bool htg_parameters_valid(int m, int n, int l) {
  return m >= 1 && n >= 4 && n % 2 == 0 && l >= 0 && 2 * l <= n && (l - m) % 2 == 0 && !(m == 1 && l == 1);
}

/// Honeycomb toroidal graph. HTG(1,n,1) is rejected: its jumps coincide with vertical edges.
inline Graph htg(int m, int n, int l) {
  detail::require(m >= 1, "HTG needs m >= 1");
  detail::require(n >= 4 && n % 2 == 0, "HTG needs even n >= 4");
  detail::require(l >= 0 && 2 * l <= n, "HTG needs 0 <= l <= n/2");
  detail::require((l - m) % 2 == 0, "HTG needs l and m of equal parity");
  detail::require(!(m == 1 && l == 1), "HTG(1,n,1) is not a simple graph");
  auto v = [&](int i, int j) { return i * n + detail::mod(j, n); };
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(v(i, j), v(i, j + 1));
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + 1) % 2 == j % 2) e.emplace_back(v(i, j), v(i + 1, j));
  for (int j = 0; j < n; ++j)
    if (j % 2 == m % 2) e.emplace_back(v(m - 1, j), v(0, j + l));
  return detail::from_edge_set(m * n, e);
}

/// Cayley graph of S_3 x D_n on {a, b, c}; order 12n.
inline Graph xn(int n) {
  detail::require(n >= 3, "X_n needs n >= 3");
  return cayley(s3_times_dn(n), xn_connection_set(n));
}

/// Cubic graph from LCF notation [shifts]^repeats on a Hamiltonian cycle.
inline Graph lcf(const std::vector<int>& shifts, int repeats) {
  const int n = static_cast<int>(shifts.size()) * repeats;
  std::set<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.insert({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    const int j = detail::mod(i + shifts[i % shifts.size()], n);
    e.insert({std::min(i, j), std::max(i, j)});
  }
  return build_graph(n, std::vector<Edge>(e.begin(), e.end()));
}

inline Graph tutte_coxeter() { return lcf({-13, -9, 7, -7, 9, 13}, 5); }

/// Text descriptor such as gp:12,5 or htg:3,6,3.
struct FamilySpec {
  enum class Kind { Cycle, CompleteBipartite, Prism, Mobius, Wreath, GP, HTG, Xn };
  Kind kind = Kind::Cycle;
  std::vector<int> params;

  static constexpr struct {
    Kind kind;
    const char* name;
    int arity;
  } kTable[] = {{Kind::Cycle, "cycle", 1}, {Kind::CompleteBipartite, "kdd", 1}, {Kind::Prism, "prism", 1},
                {Kind::Mobius, "mobius", 1}, {Kind::Wreath, "wreath", 1},      {Kind::GP, "gp", 2},
                {Kind::HTG, "htg", 3},       {Kind::Xn, "xn", 1}};

  static FamilySpec parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs name:params");
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    int arity = -1;
    for (const auto& row : kTable)
      if (name == row.name) {
        spec.kind = row.kind;
        arity = row.arity;
      }
    if (arity < 0) throw std::invalid_argument("unknown family: " + std::string(name));
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw std::invalid_argument("bad family parameter: " + std::string(tok));
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (static_cast<int>(spec.params.size()) != arity)
      throw std::invalid_argument(std::string(name) + " takes " + std::to_string(arity) + " parameter(s)");
    return spec;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& row : kTable)
      if (row.kind == kind) s = row.name;
    s += ':';
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
  }

  /// Human-readable name in the usual notation, e.g. GP(12,5).
  std::string display() const {
    static const char* names[] = {"C", "K", "Prism", "ML", "W", "GP", "HTG", "X"};
    std::string s = names[static_cast<int>(kind)];
    if (kind == Kind::CompleteBipartite) return "K" + std::to_string(params[0]) + "," + std::to_string(params[0]);
    if (kind == Kind::Xn) return "X" + std::to_string(params[0]);
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ')';
  }

  Graph build() const {
    const auto& p = params;
    switch (kind) {
      case Kind::Cycle: return cycle(p[0]);
      case Kind::CompleteBipartite: return complete_bipartite(p[0]);
      case Kind::Prism: return prism(p[0]);
      case Kind::Mobius: return mobius(p[0]);
      case Kind::Wreath: return wreath(p[0]);
      case Kind::GP: return gp(p[0], p[1]);
      case Kind::HTG: return htg(p[0], p[1], p[2]);
      case Kind::Xn: return xn(p[0]);
    }
    throw std::logic_error("unhandled family");
  }

  bool operator==(const FamilySpec&) const = default;
};

}  // namespace rdrlab
