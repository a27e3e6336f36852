#pragma once

// Abstract finite groups on element indices 0..size-1, used as the backend
// for Cayley graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rdrlab/graph.hpp"

namespace rdrlab {

class FiniteGroup {
 public:
  using Multiply = std::function<int(int, int)>;
  static constexpr int kTableLimit = 4096;

  FiniteGroup(int size, Multiply mul, std::vector<std::string> names = {})
      : size_(size), mul_(std::move(mul)), names_(std::move(names)) {
    if (size < 1) throw std::invalid_argument("group must be nonempty");
    if (size <= kTableLimit) {
      table_ = std::make_shared<std::vector<int>>(static_cast<std::size_t>(size) * size);
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
          const int c = mul_(a, b);
          if (c < 0 || c >= size) throw std::invalid_argument("product out of range");
          (*table_)[static_cast<std::size_t>(a) * size + b] = c;
        }
    }
    identity_ = -1;
    for (int e = 0; e < size && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < size && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("no identity element");
    inverse_.assign(size, -1);
    for (int a = 0; a < size; ++a) {
      if (inverse_[a] >= 0) continue;
      for (int b = 0; b < size; ++b)
        if (multiply(a, b) == identity_) {
          inverse_[a] = b;
          inverse_[b] = a;
          break;
        }
      if (inverse_[a] < 0) throw std::invalid_argument("element without inverse");
    }
  }

  int size() const { return size_; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int multiply(int a, int b) const {
    return table_ ? (*table_)[static_cast<std::size_t>(a) * size_ + b] : mul_(a, b);
  }
  bool has_table() const { return static_cast<bool>(table_); }

  std::string name(int a) const { return names_.empty() ? std::to_string(a) : names_[a]; }
  int find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("no element named " + name);
    return static_cast<int>(it - names_.begin());
  }

  /// Associativity plus identity and inverse laws: exhaustive up to 200
  /// elements, otherwise `samples` random triples from a fixed seed.
  bool check_axioms(int samples = 20000) const {
    for (int a = 0; a < size_; ++a)
      if (multiply(identity_, a) != a || multiply(a, identity_) != a || multiply(a, inverse_[a]) != identity_)
        return false;
    auto assoc = [&](int a, int b, int c) { return multiply(multiply(a, b), c) == multiply(a, multiply(b, c)); };
    if (size_ <= 200) {
      for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
          for (int c = 0; c < size_; ++c)
            if (!assoc(a, b, c)) return false;
      return true;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, size_ - 1);
    for (int i = 0; i < samples; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
    return true;
  }

  static FiniteGroup cyclic(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return FiniteGroup(n, [n](int a, int b) { return (a + b) % n; }, std::move(names));
  }

  /// D_n of order 2n; r^e z^f has index f*n + e and z r = r^-1 z.
  static FiniteGroup dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
    std::vector<std::string> names;
    for (int f = 0; f < 2; ++f)
      for (int e = 0; e < n; ++e) {
        std::string s = e == 0 ? "" : (e == 1 ? "r" : "r^" + std::to_string(e));
        if (f) s += "z";
        names.push_back(s.empty() ? "1" : s);
      }
    auto mul = [n](int x, int y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int e = ((a + (b ? -c : c)) % n + n) % n;
      return ((b + d) % 2) * n + e;
    };
    return FiniteGroup(2 * n, mul, std::move(names));
  }

  /// S_3 on {1,2,3}; index order () (23) (12) (123) (132) (13), products apply the left factor first.
  static FiniteGroup symmetric3() {
    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::string> names = {"()", "(23)", "(12)", "(123)", "(132)", "(13)"};
    auto mul = [](int x, int y) {
      int img[3];
      for (int i = 0; i < 3; ++i) img[i] = perm[y][perm[x][i]];
      for (int k = 0; k < 6; ++k)
        if (perm[k][0] == img[0] && perm[k][1] == img[1]) return k;
      return -1;
    };
    return FiniteGroup(6, mul, std::move(names));
  }

  /// Pairs (g, h) with index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int hs = h.size();
    std::vector<std::string> names;
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < hs; ++b) names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
    auto mul = [g, h, hs](int x, int y) {
      return g.multiply(x / hs, y / hs) * hs + h.multiply(x % hs, y % hs);
    };
    return FiniteGroup(g.size() * hs, mul, std::move(names));
  }

 private:
  int size_;
  Multiply mul_;
  std::vector<std::string> names_;
  std::shared_ptr<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Undirected Cayley graph with edges {g, g*s}.
inline Graph cayley(const FiniteGroup& group, const std::vector<int>& connection) {
  std::set<int> s(connection.begin(), connection.end());
  if (s.count(group.identity())) throw std::invalid_argument("connection set contains the identity");
  for (int x : s)
    if (!s.count(group.inverse(x))) throw std::invalid_argument("connection set not closed under inverses");
  std::set<Edge> edges;
  for (int g = 0; g < group.size(); ++g)
    for (int x : s) {
      const int h = group.multiply(g, x);
      edges.insert({std::min(g, h), std::max(g, h)});
    }
  return build_graph(group.size(), std::vector<Edge>(edges.begin(), edges.end()));
}

/// S_3 x D_n; element (sigma, r^e z^f) has index sigma_index * 2n + f*n + e.
inline FiniteGroup s3_times_dn(int n) {
  if (n < 3) throw std::invalid_argument("S3 x Dn needs n >= 3");
  return FiniteGroup::direct_product(FiniteGroup::symmetric3(), FiniteGroup::dihedral(n));
}

/// The involutions a = ((12),1), b = ((13),z), c = ((23),zr) of S_3 x D_n.
inline std::vector<int> xn_connection_set(int n) {
  const int dn = 2 * n;
  const int one = 0, z = n, zr = n + (n - 1);  // zr = r^-1 z
  const int s12 = 2, s13 = 5, s23 = 1;
  return {s12 * dn + one, s13 * dn + z, s23 * dn + zr};
}

}  // namespace rdrlab
