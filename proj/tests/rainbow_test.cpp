#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rdrlab/families.hpp"
#include "rdrlab/graph6.hpp"
#include "rdrlab/rainbow.hpp"

using namespace rdrlab;

namespace {

// Counts colorings of the given side with singleton colors and classes of size
// n/2d that rainbow-dominate the other side.
std::uint64_t brute_side_colorings(const Graph& g, const std::vector<int>& side, int d) {
  const int n = g.order();
  std::vector<int> col(side.size(), 0);
  std::uint64_t count = 0;
  for (;;) {
    std::vector<int> sizes(d, 0);
    for (int c : col) ++sizes[c];
    bool ok = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s * 2 * d == n; });
    if (ok) {
      std::vector<ColorSet> f(n, 0);
      for (std::size_t i = 0; i < side.size(); ++i) f[side[i]] = ColorSet{1} << col[i];
      ok = validate_rdf(g, RainbowAssignment(d, f));
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < col.size() && ++col[i] == d) col[i++] = 0;
    if (i == col.size()) break;
  }
  return count;
}

std::uint64_t brute_all_colorings(const Graph& g, int d) {
  auto bp = *bipartition(g);
  return brute_side_colorings(g, bp.side0, d) + brute_side_colorings(g, bp.side1, d);
}

}  // namespace

TEST(Rainbow, ValidateRdf) {
  Graph p = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(validate_rdf(p, RainbowAssignment(2, {0, 3, 0})));
  EXPECT_FALSE(validate_rdf(p, RainbowAssignment(2, {0, 1, 0})));
  EXPECT_TRUE(validate_rdf(p, RainbowAssignment(2, {1, 2, 1})));
  EXPECT_THROW(RainbowAssignment(2, {4, 0, 0}), std::invalid_argument);
  EXPECT_THROW(validate_rdf(p, RainbowAssignment(2, {0, 0})), std::invalid_argument);
}

TEST(Rainbow, OracleSmallKnownValues) {
  // one color: domination number
  EXPECT_EQ(gamma_rk_oracle(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 1).value, 2);
  EXPECT_EQ(gamma_rk_oracle(complete_bipartite(3), 1).value, 2);
  // two colors on C_n: floor(n/2) + ceil(n/4) - floor(n/4)
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(gamma_rk_oracle(cycle(n), 2).value, n / 2 + (n + 3) / 4 - n / 4) << n;
  EXPECT_THROW(gamma_rk_oracle(cycle(11), 3), OutsideEnvelope);
  EXPECT_THROW(gamma_rk_oracle(cycle(5), 4), OutsideEnvelope);
}

TEST(Rainbow, BranchAndBoundMatchesOracle) {
  std::mt19937_64 rng(20261016);
  int compared = 0;
  for (int t = 0; t < 240; ++t) {
    const int k = 1 + t % 3;
    const int n = k == 3 ? 3 + static_cast<int>(rng() % 6) : 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_connected_graph(rng, n, 0.25);
    auto expect = gamma_rk_oracle(g, k);
    auto got = gamma_rk(g, k);
    ASSERT_EQ(got.status, SolveStatus::Solved);
    EXPECT_EQ(got.value, expect.value) << encode_graph6(g) << " k=" << k;
    EXPECT_EQ(got.witness.weight(), got.value);
    EXPECT_TRUE(validate_rdf(g, got.witness));
    ++compared;
  }
  EXPECT_GE(compared, 200);
}

TEST(Rainbow, RdrDecisionAgreesWithOracleDefinition) {
  // d-RDR exactly when the d-rainbow domination number is n/2
  std::vector<Graph> graphs;
  for (int n = 3; n <= 12; ++n) graphs.push_back(cycle(n));
  for (int d = 1; d <= 3; ++d) graphs.push_back(complete_bipartite(d));
  graphs.push_back(prism(4));
  graphs.push_back(mobius(3));
  graphs.push_back(disjoint_union(cycle(4), cycle(8)));
  graphs.push_back(disjoint_union(cycle(4), cycle(6)));
  for (const auto& g : graphs) {
    const int d = *g.regular_degree();
    const bool expect = gamma_rk_oracle(g, d).value * 2 == g.order();
    auto w = is_d_rdr(g);
    EXPECT_EQ(w.has_value(), expect) << encode_graph6(g);
    if (w) {
      EXPECT_TRUE(check_rdr_witness(g, *w));
    }
  }
}

TEST(Rainbow, PreconditionReasons) {
  EXPECT_EQ(decide_d_rdr(gp(5, 2)).reason, "order not divisible by 2d");
  EXPECT_EQ(decide_d_rdr(build_graph(3, {{0, 1}, {1, 2}})).reason, "not regular");
  EXPECT_EQ(decide_d_rdr(prism(3)).reason, "not bipartite");
  EXPECT_EQ(decide_d_rdr(cycle(6)).status, RdrStatus::NotRdr);
}

TEST(Rainbow, WitnessStructure) {
  for (Graph g : {gp(12, 5), htg(3, 6, 3), prism(6), mobius(9), wreath(8), complete_bipartite(5)}) {
    auto w = is_d_rdr(g);
    ASSERT_TRUE(w) << encode_graph6(g);
    const int d = *g.regular_degree();
    EXPECT_EQ(w->coloring.weight() * 2, g.order());
    for (const auto& cls : w->color_classes) EXPECT_EQ(static_cast<int>(cls.size()) * 2 * d, g.order());
    EXPECT_TRUE(check_rdr_witness(g, *w));
    if (d == 3) {
      EXPECT_TRUE(check_six_cycle_pattern(g, *w));
    }
  }
}

TEST(Rainbow, CheckWitnessRejectsTampering) {
  Graph g = gp(12, 5);
  auto w = *is_d_rdr(g);
  auto bad = w;
  std::swap(bad.coloring.colors[bad.color_classes[0][0]], bad.coloring.colors[bad.color_classes[1][0]]);
  EXPECT_FALSE(check_rdr_witness(g, bad));
  bad = w;
  bad.coloring.colors[bad.color_classes[0][0]] = 3;
  EXPECT_FALSE(check_rdr_witness(g, bad));
}

TEST(Rainbow, EnumerationCountsMatchBruteForce) {
  for (Graph g : {complete_bipartite(3), cycle(4), cycle(8), cycle(12), prism(6), gp(12, 5), htg(3, 6, 3)}) {
    const int d = *g.regular_degree();
    auto all = enumerate_rdr_colorings(g, ColoringQuotient::None);
    EXPECT_EQ(all.size(), brute_all_colorings(g, d)) << encode_graph6(g);
    for (const auto& w : all) {
      EXPECT_TRUE(check_rdr_witness(g, w));
      if (d == 3) {
        EXPECT_TRUE(check_six_cycle_pattern(g, w));
      }
    }
    auto mod = enumerate_rdr_colorings(g, ColoringQuotient::ColorPerm);
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    EXPECT_EQ(mod.size() * fact, all.size());
  }
}

TEST(Rainbow, K33ColoringClasses) {
  Graph g = complete_bipartite(3);
  EXPECT_EQ(enumerate_rdr_colorings(g, ColoringQuotient::None).size(), 12u);
  EXPECT_EQ(enumerate_rdr_colorings(g, ColoringQuotient::ColorPerm).size(), 2u);
  PermutationGroup aut(6, {Permutation({1, 2, 0, 3, 4, 5}), Permutation({1, 0, 2, 3, 4, 5}),
                           Permutation({3, 4, 5, 0, 1, 2})});
  ASSERT_EQ(aut.order(), 72u);
  EXPECT_EQ(enumerate_rdr_colorings(g, ColoringQuotient::ColorPermAut, &aut).size(), 1u);
  EXPECT_THROW(enumerate_rdr_colorings(g, ColoringQuotient::ColorPermAut), std::invalid_argument);
}

TEST(Rainbow, SixCyclePatternNeedsThreeColors) {
  Graph g = cycle(8);
  auto w = *is_d_rdr(g);
  EXPECT_THROW(check_six_cycle_pattern(g, w), std::invalid_argument);
}

TEST(Rainbow, LiftedBoundOnRdrGraphs) {
  // for d <= k <= 2d the lifted coloring is optimal on these small cases
  for (Graph g : {complete_bipartite(2), cycle(8), complete_bipartite(3)}) {
    const int d = *g.regular_degree();
    for (int k = d; k <= std::min(2 * d, 3); ++k) {
      const int n = g.order();
      EXPECT_EQ(gamma_rk(g, k).value, gamma_rk_oracle(g, k).value);
      EXPECT_EQ(gamma_rk(g, k).value, (k * n + 2 * d - 1) / (2 * d));
    }
  }
}

TEST(Rainbow, BudgetExhaustionIsReported) {
  auto r = gamma_rk(gp(18, 5), 2, {5});
  EXPECT_EQ(r.status, SolveStatus::Undecided);
  EXPECT_TRUE(validate_rdf(gp(18, 5), r.witness));
  EXPECT_EQ(r.witness.weight(), r.value);
  auto dec = decide_d_rdr(htg(4, 12, 0), {2});
  EXPECT_EQ(dec.status, RdrStatus::Undecided);
  EXPECT_FALSE(dec.witness);
}

TEST(Rainbow, TrivialPalettes) {
  EXPECT_EQ(gamma_rk(cycle(5), 0).value, 0);
  EXPECT_EQ(gamma_rk(build_graph(0, {}), 3).value, 0);
  EXPECT_EQ(gamma_rk(build_graph(3, {}), 2).value, 3);
}
