#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rdrlab/permutation.hpp"

using namespace rdrlab;

namespace {

std::vector<int> vec(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

Permutation cyc(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return Permutation(p);
}

Permutation swap01(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::swap(p[0], p[1]);
  return Permutation(p);
}

// Closure by breadth-first multiplication.
std::set<std::vector<int>> closure(const std::vector<Permutation>& gens, int n) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> queue{Permutation::identity(n)};
  seen.insert(vec(queue[0]));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Permutation q = queue[i].then(g);
      if (seen.insert(vec(q)).second) queue.push_back(q);
    }
  return seen;
}

}  // namespace

TEST(Permutation, CompositionOrder) {
  Permutation p({1, 2, 0});
  Permutation q({0, 2, 1});
  // p first: 0 -> 1 -> 2
  EXPECT_EQ(p.then(q)(0), 2);
  EXPECT_EQ(p.then(p.inverse()), Permutation::identity(3));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(PermutationGroup, SymmetricGroupOrders) {
  for (int n = 2; n <= 8; ++n) {
    PermutationGroup s(n, {cyc(n), swap01(n)});
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    EXPECT_EQ(s.order(), f) << n;
    EXPECT_TRUE(s.is_transitive());
  }
}

TEST(PermutationGroup, RandomGroupsMatchClosure) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Permutation> gens;
    for (int j = 0; j < 1 + static_cast<int>(rng() % 2); ++j) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      std::shuffle(p.begin(), p.end(), rng);
      gens.emplace_back(p);
    }
    PermutationGroup g(n, gens);
    auto all = closure(gens, n);
    EXPECT_EQ(g.order(), all.size());
    auto els = g.elements();
    EXPECT_EQ(els.size(), all.size());
    for (const auto& e : els) EXPECT_TRUE(all.count(vec(e)));
    for (const auto& e : all) EXPECT_TRUE(g.contains(Permutation(e)));
  }
}

TEST(PermutationGroup, OrbitsStabilizersTransporters) {
  // <(0 1 2), (3 4)> on 6 points
  PermutationGroup g(6, {Permutation({1, 2, 0, 3, 4, 5}), Permutation({0, 1, 2, 4, 3, 5})});
  EXPECT_EQ(g.order(), 6u);
  auto orbs = g.orbits();
  ASSERT_EQ(orbs.size(), 3u);
  EXPECT_EQ(orbs[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(orbs[1], (std::vector<int>{3, 4}));
  EXPECT_EQ(orbs[2], (std::vector<int>{5}));
  EXPECT_FALSE(g.is_transitive());
  EXPECT_EQ(g.stabilizer(0).order(), 2u);
  auto t = g.transporter(3, 4);
  ASSERT_TRUE(t);
  EXPECT_EQ((*t)(3), 4);
  EXPECT_FALSE(g.transporter(0, 3));
}

TEST(PermutationGroup, ElementCap) {
  PermutationGroup s(10, {cyc(10), swap01(10)});
  EXPECT_THROW(s.elements(1000), GroupTooLarge);
}

TEST(PermutationGroup, OrbitRepresentatives) {
  std::vector<Permutation> gens{Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})};
  EXPECT_EQ(orbit_representatives(4, gens), (std::vector<int>{0, 0, 2, 2}));
}
