#include <gtest/gtest.h>

#include "biplane/error.hpp"
#include "test_support.hpp"

namespace biplane {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

void expect_sound(const ColoredGraph& g, const DecideResult& r) {
  const auto* w = r.witness();
  ASSERT_TRUE(w);
  EXPECT_EQ(w->drawing.graph(), g);
  EXPECT_EQ(w->drawing.num_crossings(), w->crossings());
  EXPECT_TRUE(verify(w->drawing, 4).all_passed());
  EXPECT_TRUE(testing::euler_by_component(w->drawing));
}

TEST(Pairs, FourCycle) {
  auto pairs = disjoint_edge_pairs(even_cycle(4).graph());
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (CrossingPair{0, 2}));
  EXPECT_EQ(pairs[1], (CrossingPair{1, 3}));
}

TEST(Pairs, CountMatchesBruteForce) {
  for (auto g : {complete_bipartite(3, 3), complete_bipartite(4, 4), complete_bipartite(2, 5)}) {
    size_t expected = 0;
    for (EdgeId a = 0; a < g.num_edges(); ++a)
      for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
        const Edge &x = g.edge(a), &y = g.edge(b);
        if (!x.has(y.u) && !x.has(y.v)) ++expected;
      }
    EXPECT_EQ(disjoint_edge_pairs(g.graph()).size(), expected);
  }
}

TEST(StartSize, Values) {
  EXPECT_EQ(search_start_size(even_cycle(4)), 0);
  EXPECT_EQ(search_start_size(complete_bipartite(3, 3)), 1);
  EXPECT_EQ(search_start_size(complete_bipartite(3, 4)), 1);
  EXPECT_EQ(search_start_size(complete_bipartite(4, 4)), 2);
}

TEST(Decide, PlanarInputs) {
  for (auto g : {complete_bipartite(2, 3), complete_bipartite(1, 5), complete_bipartite(2, 6), even_cycle(6)}) {
    auto r = decide_one_planar(g);
    expect_sound(g, r);
    EXPECT_EQ(r.witness()->crossings(), 0);
  }
}

TEST(Decide, K33OneCrossing) {
  auto g = complete_bipartite(3, 3);
  auto r = decide_one_planar(g);
  expect_sound(g, r);
  EXPECT_EQ(r.witness()->crossings(), 1);
  // 9 edges > 2*6-4 already rules out size 0; size 1 succeeds on its first try.
  EXPECT_EQ(r.start_size, 1);
  EXPECT_EQ(r.matchings_exhausted, 0);
}

TEST(Decide, K45RefutedByBound) {
  auto r = decide_one_planar(complete_bipartite(4, 5));
  const auto* f = r.refutation();
  ASSERT_TRUE(f);
  EXPECT_EQ(f->kind, Refutation::Kind::Bound);
  ASSERT_TRUE(f->bound);
  EXPECT_EQ(f->bound->bound_name, BoundName::BipartiteOnePlanarBeta);
  EXPECT_EQ(f->bound->max_edges, 18);
  EXPECT_TRUE(f->complete);
  EXPECT_EQ(r.matchings_exhausted, 0);
}

TEST(Decide, BoundFallsBackToGeneralWithoutBeta) {
  // K_{7,7}: 49 > 4*14-8 = 48.
  SearchOptions o;
  o.use_beta_bound = false;
  o.timeout_seconds = 0.0;
  auto r = decide_one_planar(complete_bipartite(7, 7), o);
  ASSERT_TRUE(r.refutation());
  EXPECT_EQ(r.refutation()->bound->bound_name, BoundName::OnePlanar4v8);
}

TEST(Decide, CapOnCrossings) {
  SearchOptions o;
  o.max_crossings = 0;
  auto r = decide_one_planar(complete_bipartite(3, 3), o);
  const auto* f = r.refutation();
  ASSERT_TRUE(f);
  EXPECT_EQ(f->kind, Refutation::Kind::Exhausted);
  EXPECT_EQ(f->searched_up_to, 0);
  EXPECT_FALSE(f->complete);
}

TEST(Decide, TimeoutCarriesProgress) {
  SearchOptions o;
  o.timeout_seconds = 0.0;
  auto r = decide_one_planar(complete_bipartite(4, 4), o);
  ASSERT_TRUE(r.timeout());
  EXPECT_LT(r.timeout()->largest_exhausted, 2);
}

TEST(Decide, JobsDoNotChangeTheAnswer) {
  auto g = complete_bipartite(3, 4);
  auto one = decide_one_planar(g);
  for (int jobs : {2, 3, 5}) {
    SearchOptions o;
    o.jobs = jobs;
    auto many = decide_one_planar(g, o);
    ASSERT_TRUE(many.witness());
    EXPECT_EQ(many.witness()->matching, one.witness()->matching);
    EXPECT_EQ(many.witness()->drawing, one.witness()->drawing);
    EXPECT_EQ(many.matchings_exhausted, one.matchings_exhausted);
  }
}

TEST(MinCrossings, Values) {
  EXPECT_EQ(min_one_planar_crossings(even_cycle(6)), 0);
  EXPECT_EQ(min_one_planar_crossings(complete_bipartite(3, 3)), 1);
  EXPECT_EQ(min_one_planar_crossings(complete_bipartite(3, 4)), 2);
}

TEST(MinCrossings, K35MatchesCountingBound) {
  // The counting chain gives at least 4; the search finds a drawing with 4.
  const int found = min_one_planar_crossings(complete_bipartite(3, 5));
  EXPECT_EQ(found, 4);
  EXPECT_EQ(found, cr_counting_bound(3, 1, 5).final_lb());
}

TEST(MinCrossings, Errors) {
  EXPECT_EQ(code_of([] { min_one_planar_crossings(complete_bipartite(4, 5)); }), ErrorCode::NotOnePlanar);
  SearchOptions o;
  o.timeout_seconds = 0.0;
  EXPECT_EQ(code_of([&] { min_one_planar_crossings(complete_bipartite(4, 4), o); }), ErrorCode::Timeout);
}

TEST(Realize, K33EverySinglePair) {
  auto g = complete_bipartite(3, 3);
  EXPECT_FALSE(realize_matching(g, {}));
  for (const CrossingPair& p : disjoint_edge_pairs(g.graph())) {
    auto d = realize_matching(g, {p});
    ASSERT_TRUE(d);
    EXPECT_TRUE(verify(*d, 5).all_passed());
  }
}

TEST(Realize, TooFewCrossingsForK44) {
  auto g = complete_bipartite(4, 4);
  auto pairs = disjoint_edge_pairs(g.graph());
  EXPECT_FALSE(realize_matching(g, {pairs[0]}));
}

TEST(BetaSearch, SmallValues) {
  const std::pair<int, ColoredGraph> cases[] = {{4, complete_bipartite(2, 2)},
                                                {5, complete_bipartite(2, 3)},
                                                {6, complete_bipartite(3, 3)},
                                                {7, complete_bipartite(3, 4)}};
  for (const auto& [v, witness] : cases) {
    auto r = beta_exhaustive(v);
    ASSERT_TRUE(r.beta) << v;
    EXPECT_EQ(*r.beta, testing::stated_beta(v));
    ASSERT_TRUE(r.witness_graph);
    EXPECT_TRUE(isomorphic(*r.witness_graph, witness)) << v;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify(r.witness->drawing, 4).all_passed());
    ASSERT_FALSE(r.log.empty());
    EXPECT_EQ(r.log.front().edges, testing::bipartite_max(v));
    EXPECT_TRUE(r.log.back().witness_found);
    EXPECT_FALSE(r.timed_out);
  }
}

TEST(BetaSearch, Range) {
  EXPECT_EQ(code_of([] { beta_exhaustive(3); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { beta_exhaustive(9); }), ErrorCode::DomainError);
}

}  // namespace
}  // namespace biplane
