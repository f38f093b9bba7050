#include <gtest/gtest.h>

#include "invdiam/corpus.hpp"
#include "invdiam/io.hpp"

using namespace invdiam;

namespace {

std::size_t line_of(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(GraphIo, RoundTrip) {
  auto g = io::parse_graph("# triangle\n3 3\n0 1\n\n1 2\n0 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(io::format_graph(g), "3 3\n0 1\n0 2\n1 2\n");
  auto again = io::parse_graph(io::format_graph(g));
  EXPECT_EQ(io::format_graph(again), io::format_graph(g));
  EXPECT_EQ(io::parse_graph("4 0\n").n(), 4u);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of([] { io::parse_graph("3 2\n0 1\n1 1\n"); }), 3u);
  EXPECT_EQ(line_of([] { io::parse_graph("3 2\n0 1\n2 1\n"); }), 3u);
  EXPECT_EQ(line_of([] { io::parse_graph("3 2\n0 1\n0 3\n"); }), 3u);
  EXPECT_EQ(line_of([] { io::parse_graph("3 2\n0 1\n# again\n0 1\n"); }), 4u);
  EXPECT_EQ(line_of([] { io::parse_graph("3 2\n0 x\n"); }), 2u);
  EXPECT_EQ(line_of([] { io::parse_graph("3 1\n0 1\n1 2\n"); }), 3u);
  EXPECT_THROW(io::parse_graph("3 3\n0 1\n"), ParseError);
  EXPECT_THROW(io::parse_graph("# nothing\n"), ParseError);
}

TEST(OrientationIo, RoundTrip) {
  auto o = io::parse_orientation("# o1\n0110\n", 4);
  EXPECT_EQ(io::format_orientation(o), "0110\n");
  EXPECT_TRUE(o.test(1));
  EXPECT_FALSE(o.test(0));
  EXPECT_EQ(line_of([] { io::parse_orientation("010\n", 4); }), 1u);
  EXPECT_EQ(line_of([] { io::parse_orientation("\n01a1\n", 4); }), 2u);
  EXPECT_THROW(io::parse_orientation("01\n10\n", 2), ParseError);
  EXPECT_EQ(io::parse_orientation("\n", 0).size(), 0u);
}

TEST(PlanIo, RoundTripAndLooseLoading) {
  InversionPlan plan;
  plan.steps = {{0, 1, 2}, {1, 2}};
  plan.p = 3;
  plan.provenance = "test";
  auto back = io::parse_plan(io::format_plan(plan));
  EXPECT_EQ(back.steps, plan.steps);
  EXPECT_EQ(back.p, 3u);
  EXPECT_EQ(back.provenance, "test");

  // a step larger than p loads; verification rejects it
  auto big = io::parse_plan(R"({"steps": [[0, 1, 2, 3]], "p": 3})");
  auto g = io::parse_graph("4 3\n0 1\n1 2\n2 3\n");
  auto rep = verify_plan(g, Orientation::zeros(3), Orientation::ones(3), big, 3);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(verify_plan(g, Orientation::zeros(3), Orientation::ones(3), big, 4).valid);

  EXPECT_EQ(line_of([] { io::parse_plan("{\n\"steps\": [[0,1],\n}"); }), 3u);
  EXPECT_THROW(io::parse_plan(R"({"steps": [[0, -1]]})"), ParseError);
  EXPECT_THROW(io::parse_plan(R"({"p": 3})"), ParseError);
}

TEST(Corpus, EmptySpecGivesEmptyReport) {
  corpus::CorpusSpec spec;
  spec.trees = spec.connected = spec.triangulations = 0;
  auto rep = corpus::run_corpus(spec);
  EXPECT_EQ(rep.instances, 0u);
  EXPECT_TRUE(rep.rows.empty());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(corpus::to_csv(rep), std::string(corpus::csv_header()) + "\n");
}

TEST(Corpus, DeterministicAcrossThreadCounts) {
  corpus::CorpusSpec spec;
  spec.trees = spec.connected = spec.triangulations = 6;
  spec.threads = 1;
  auto a = corpus::run_corpus(spec);
  spec.threads = 3;
  auto b = corpus::run_corpus(spec);
  EXPECT_EQ(corpus::to_csv(a), corpus::to_csv(b));
  EXPECT_EQ(corpus::to_json(a, spec).dump(), corpus::to_json(b, spec).dump());
  spec.seed += 1;
  EXPECT_NE(corpus::to_csv(corpus::run_corpus(spec)), corpus::to_csv(a));
}

TEST(Corpus, RowsAreConsistent) {
  corpus::CorpusSpec spec;
  spec.trees = spec.connected = spec.triangulations = 8;
  auto rep = corpus::run_corpus(spec);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.instances, 24u);
  for (const auto& r : rep.rows) {
    EXPECT_TRUE(r.valid) << r.planner;
    ASSERT_TRUE(r.length && r.bound);
    EXPECT_LE(*r.length, *r.bound);
    if (r.oracle) {
      EXPECT_GE(*r.length, *r.oracle);
    }
    EXPECT_EQ(r.lower.has_value(), r.pair == "conv");
    EXPECT_EQ(r.oracle.has_value(), r.oracle_status == "exact");
  }
  const auto csv = corpus::to_csv(rep);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.rows.size() + 1);
  EXPECT_THROW(corpus::make_instances({.p_min = 1}), Error);
}
