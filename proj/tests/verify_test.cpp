#include <gtest/gtest.h>

#include "rdrlab/census.hpp"
#include "rdrlab/verify.hpp"

using namespace rdrlab;

namespace {

const Observation* find(const TheoremReport& r, const std::string& instance, const std::string& quantity) {
  for (const auto& o : r.observations)
    if (o.instance == instance && o.quantity == quantity) return &o;
  return nullptr;
}

std::vector<std::string> inconsistent(const TheoremReport& r) {
  std::vector<std::string> out;
  for (const auto& o : r.observations)
    if (o.consistent == false) out.push_back(o.instance + " " + o.quantity);
  return out;
}

}  // namespace

TEST(Verify, BasicFamilies) {
  auto r = verify_basic_families(20, 10);
  EXPECT_TRUE(r.ok()) << (r.disagreements.empty() ? "" : r.disagreements[0].instance);
  EXPECT_GT(r.scanned, 40);
  EXPECT_EQ(r.undecided, 0);
}

TEST(Verify, GeneralizedPetersenPredicate) {
  VerifyOptions opt;
  opt.workers = 2;
  auto r = verify_gp(24, opt);
  EXPECT_TRUE(r.ok());
  // the one stated signature that the girth-cycle count does not reproduce
  EXPECT_EQ(inconsistent(r), (std::vector<std::string>{"GP(24,7) girth signature"}));
  auto gp247 = find(r, "GP(24,7)", "girth signature");
  ASSERT_TRUE(gp247);
  EXPECT_EQ(gp247->computed, "8 (5,5,6)");
  // scanned every GP(n,k) with 3 <= n <= 24 and 1 <= k < n/2
  int expect = 0;
  for (int n = 3; n <= 24; ++n) expect += (n - 1) / 2;
  EXPECT_EQ(r.scanned, expect);
}

TEST(Verify, GpSignatureCases) {
  auto c = gp_signature_case(24, 5);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->first, 8);
  EXPECT_EQ(c->second, (std::vector<int>{8, 8, 8}));
  EXPECT_FALSE(gp_signature_case(20, 3));
}

TEST(Verify, HoneycombToroidalPredicate) {
  auto r = verify_htg(30);
  EXPECT_TRUE(r.ok());
  // HTG(1,6,3) is K_{3,3}, whose 4-cycles give (4,4,4)
  EXPECT_EQ(inconsistent(r), (std::vector<std::string>{"HTG(1,6,3) girth signature"}));
  EXPECT_TRUE(htg_predicate(3, 6, 3));
  EXPECT_FALSE(htg_predicate(1, 8, 3));
}

TEST(Verify, XnReport) {
  auto r = verify_xn(5);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.observations_consistent());
  auto x3 = find(r, "X3", "girth signature");
  ASSERT_TRUE(x3);
  EXPECT_EQ(x3->computed, "6 (0,1,1)");
  auto iso = find(r, "X5", "isomorphic to GP(30,11)");
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->computed, "true");
  auto x4 = find(r, "X4", "girth signature");
  auto gp = find(r, "GP(24,7)", "girth signature");
  ASSERT_TRUE(x4 && gp);
  EXPECT_EQ(x4->computed, gp->computed);
  EXPECT_EQ(x4->stated.size(), 2u);
}

TEST(Verify, CriteriaScanIsSound) {
  std::vector<Graph> graphs = generate_bicubic(12);
  for (const auto& s : family_members(24)) graphs.push_back(s.build());
  auto scan = scan_criteria(graphs);
  EXPECT_EQ(scan.graphs, static_cast<int>(graphs.size()));
  EXPECT_EQ(scan.violations, 0);
  EXPECT_GT(scan.krit2_witness, 0);
}
