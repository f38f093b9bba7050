#include <gtest/gtest.h>

#include <random>

#include "invdiam/graph.hpp"
#include "invdiam/inversion.hpp"
#include "support.hpp"

using namespace invdiam;

namespace {

LabelledGraph k3() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

InversionPlan make_plan(std::vector<InversionSet> steps, std::size_t p) {
  InversionPlan plan;
  plan.steps = std::move(steps);
  plan.p = p;
  return plan;
}

}  // namespace

TEST(BuildGraph, CanonicalEdgeOrder) {
  auto g = k3();
  ASSERT_EQ(g.m(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 2}));
  EXPECT_EQ(*g.edge_index(2, 0), 1u);
}

TEST(BuildGraph, SingleEdge) {
  auto g = build_graph(2, {{1, 0}});
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(BuildGraph, Rejections) {
  EXPECT_THROW(build_graph(3, {{0, 0}}), Error);
  EXPECT_THROW(build_graph(3, {{0, 3}}), Error);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST(InversionMask, Examples) {
  auto g = k3();
  EXPECT_EQ(inversion_mask(g, {0, 1, 2}).to_string(), "111");
  EXPECT_EQ(inversion_mask(g, {0, 1}).to_string(), "100");
  auto path = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(inversion_mask(path, {0, 2}).none());
  EXPECT_THROW(inversion_mask(g, {0, 5}), Error);
}

TEST(ApplyPlan, Examples) {
  auto g = k3();
  auto o = Orientation::from_string("000");
  EXPECT_EQ(apply_plan(g, o, make_plan({}, 3)), o);
  EXPECT_EQ(apply_plan(g, o, make_plan({{0, 1, 2}, {0, 1, 2}}, 3)), o);
  EXPECT_EQ(apply_plan(g, o, make_plan({{0, 1, 2}, {0, 1}}, 3)).to_string(), "011");
  EXPECT_THROW(apply_plan(g, Orientation::from_string("00"), make_plan({}, 3)), Error);
}

TEST(Disagreement, Examples) {
  auto o = Orientation::from_string("0110");
  EXPECT_TRUE(disagreement(o, o).none());
  EXPECT_EQ(disagreement(o, converse(o)).count(), 4u);
  EXPECT_EQ(disagreement(Orientation::from_string("000"), Orientation::from_string("011")).to_string(), "011");
  EXPECT_THROW(disagreement(Orientation::from_string("00"), Orientation::from_string("000")), Error);
}

TEST(VerifyPlan, Examples) {
  auto k2 = build_graph(2, {{0, 1}});
  auto r = verify_plan(k2, Orientation::from_string("0"), Orientation::from_string("1"), make_plan({{0, 1}}, 2), 2);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.length, 1u);

  auto g = k3();
  r = verify_plan(g, Orientation::from_string("000"), Orientation::from_string("111"), make_plan({{0, 1, 2}}, 2), 2);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);

  r = verify_plan(g, Orientation::from_string("000"), Orientation::from_string("011"),
                  make_plan({{0, 1, 2}, {0, 1}}, 3), 3);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.length, 2u);

  r = verify_plan(g, Orientation::from_string("000"), Orientation::from_string("111"), make_plan({{0, 1}}, 3), 3);
  EXPECT_FALSE(r.valid);
}

TEST(Subgraphs, InducedKeepsBitOrder) {
  auto g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  auto sub = induced_subgraph(g, {3, 1, 2});
  EXPECT_EQ(sub.graph.n(), 3u);
  EXPECT_EQ(sub.graph.m(), 3u);
  auto o = Orientation::from_string("101101");
  auto local = restrict_to(sub, o);
  for (std::size_t i = 0; i < sub.graph.m(); ++i) EXPECT_EQ(local.test(i), o.test(sub.to_parent_edge[i]));
}

TEST(GraphProperties, ForestAndConnectivity) {
  EXPECT_TRUE(is_tree(build_graph(4, {{0, 1}, {1, 2}, {1, 3}})));
  EXPECT_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_forest(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_forest(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

class AlgebraProperties : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraProperties, RandomPlans) {
  std::mt19937_64 rng(1000 + GetParam());
  auto g = testsupport::random_graph(9, 0.4, rng);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<Vertex> vert(0, 8);
  auto random_plan = [&] {
    InversionPlan p;
    p.p = 9;
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
      InversionSet x;
      for (int k = 0; k < 4; ++k) x.push_back(vert(rng));
      p.steps.push_back(normalized(x));
    }
    return p;
  };
  auto o = testsupport::random_orientation(g.m(), rng);
  auto a = random_plan();
  auto b = random_plan();
  InversionPlan ab = a;
  ab.append(b);
  EXPECT_EQ(apply_plan(g, o, ab), apply_plan(g, apply_plan(g, o, a), b));

  InversionPlan rev = ab;
  std::reverse(rev.steps.begin(), rev.steps.end());
  EXPECT_EQ(disagreement(o, apply_plan(g, o, ab)), disagreement(o, apply_plan(g, o, rev)));
  EXPECT_EQ(disagreement(o, apply_plan(g, o, ab)), plan_mask(g, ab));

  for (const auto& x : a.steps) {
    EXPECT_EQ(inversion_mask(g, x).count(), testsupport::spanned_edges(g, x));
    auto once = apply_set(g, o, x);
    EXPECT_EQ(apply_set(g, once, x), o);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AlgebraProperties, ::testing::Range(0, 50));
