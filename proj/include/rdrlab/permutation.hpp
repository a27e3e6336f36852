#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rdrlab {

/// A bijection of {0..n-1} stored by its image sequence. Composition reads
/// left to right: p.then(q) applies p first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("not a permutation");
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  std::span<const int> images() const { return img_; }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
    return p;
  }

  Permutation then(const Permutation& q) const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[i] = q.img_[img_[i]];
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool fixes(int x) const { return img_[x] == x; }

  bool fixed_point_free() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] == i) return false;
    return true;
  }

  /// Smallest k >= 1 with p^k = id.
  std::uint64_t element_order() const {
    std::uint64_t ord = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (int x = i; !seen[x]; x = img_[x]) {
        seen[x] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultElementCap = 50000;

/// Union-find orbits of the group generated by gens.
inline std::vector<int> orbit_representatives(int degree, std::span<const Permutation> gens) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& p : gens)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(p(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (int x = 0; x < degree; ++x) parent[x] = find(x);
  return parent;
}

/// Finite permutation group with a stabilizer chain built by deterministic
/// Schreier-Sims. Immutable after construction.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {})
      : degree_(degree) {
    for (auto& p : generators) {
      if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
      if (!p.is_identity()) gens_.push_back(std::move(p));
    }
    build_chain(base_prefix);
  }

  static PermutationGroup trivial(int degree) { return PermutationGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [res, level] = strip(p, 0);
    return level == levels_.size() && res.is_identity();
  }

  std::vector<int> orbit(int v) const {
    auto rep = orbit_representatives(degree_, gens_);
    std::vector<int> out;
    for (int x = 0; x < degree_; ++x)
      if (rep[x] == rep[v]) out.push_back(x);
    return out;
  }

  /// Orbit partition, cells sorted by smallest member.
  std::vector<std::vector<int>> orbits() const {
    auto rep = orbit_representatives(degree_, gens_);
    std::vector<std::vector<int>> out;
    std::vector<int> index(degree_, -1);
    for (int x = 0; x < degree_; ++x) {
      if (index[rep[x]] < 0) {
        index[rep[x]] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[index[rep[x]]].push_back(x);
    }
    return out;
  }

  bool is_transitive() const { return degree_ == 0 || static_cast<int>(orbit(0).size()) == degree_; }

  /// Point stabilizer, read off a chain whose first base point is v.
  PermutationGroup stabilizer(int v) const {
    PermutationGroup rebased(degree_, gens_, {v});
    if (rebased.levels_.empty() || rebased.levels_[0].base != v) return rebased;  // v fixed by all
    if (rebased.levels_.size() < 2) return trivial(degree_);
    return PermutationGroup(degree_, rebased.levels_[1].gens);
  }

  /// For every point x, an element mapping v to x when one exists.
  std::vector<std::optional<Permutation>> transversal(int v) const {
    PermutationGroup rebased(degree_, gens_, {v});
    if (rebased.levels_.empty() || rebased.levels_[0].base != v) {
      std::vector<std::optional<Permutation>> t(degree_);
      t[v] = Permutation::identity(degree_);
      return t;
    }
    return rebased.levels_[0].transversal;
  }

  /// An element mapping `from` to `to`, if any.
  std::optional<Permutation> transporter(int from, int to) const { return transversal(from)[to]; }

  /// All elements in lexicographic order of their image sequences.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const {
    if (order() > cap)
      throw GroupTooLarge("group of order " + std::to_string(order()) + " exceeds element cap " + std::to_string(cap));
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> out{Permutation::identity(degree_)};
    seen.insert(out.front());
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& s : gens_) {
        Permutation p = out[i].then(s);
        if (seen.insert(p).second) out.push_back(std::move(p));
      }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal;
  };

  void compute_orbit(Level& l) const {
    l.transversal.assign(degree_, std::nullopt);
    l.transversal[l.base] = Permutation::identity(degree_);
    l.orbit.assign(1, l.base);
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      const int x = l.orbit[i];
      for (const auto& s : l.gens) {
        const int y = s(x);
        if (!l.transversal[y]) {
          l.transversal[y] = l.transversal[x]->then(s);
          l.orbit.push_back(y);
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const int x = h(levels_[l].base);
      const auto& t = levels_[l].transversal[x];
      if (!t) return {h, l};
      h = h.then(t->inverse());
    }
    return {h, levels_.size()};
  }

  static int first_moved(const Permutation& p) {
    for (int i = 0; i < p.degree(); ++i)
      if (!p.fixes(i)) return i;
    return -1;
  }

  void add_level(int base) {
    Level l;
    l.base = base;
    levels_.push_back(std::move(l));
  }

  void build_chain(std::span<const int> prefix) {
    std::vector<int> base(prefix.begin(), prefix.end());
    for (const auto& g : gens_) {
      bool fixes_all = std::all_of(base.begin(), base.end(), [&](int b) { return g.fixes(b); });
      if (fixes_all) base.push_back(first_moved(g));
    }
    for (int b : base) add_level(b);
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : gens_) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = g.fixes(levels_[j].base);
        if (ok) levels_[i].gens.push_back(g);
      }
      compute_orbit(levels_[i]);
    }
    // Drop trailing prefix levels that carry no group action.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      Level& lv = levels_[i];
      for (std::size_t oi = 0; oi < lv.orbit.size() && !restarted; ++oi) {
        const int x = lv.orbit[oi];
        for (std::size_t si = 0; si < lv.gens.size(); ++si) {
          const Permutation& s = lv.gens[si];
          const int y = s(x);
          Permutation h = lv.transversal[x]->then(s).then(lv.transversal[y]->inverse());
          if (h.is_identity()) continue;
          auto [res, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == levels_.size() && res.is_identity()) continue;
          if (j == levels_.size()) add_level(first_moved(res));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            levels_[l].gens.push_back(res);
            compute_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

}  // namespace rdrlab
