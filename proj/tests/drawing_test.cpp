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

Drawing plane_c4() {
  NeighborRotation rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  return make_drawing(even_cycle(4), {}, rot);
}

// C8 drawn as a figure eight: 0-1 crosses 4-5.
Drawing c8_figure_eight() {
  ColoredGraph g = even_cycle(8);
  const EdgeId a = *g.find_edge(0, 1), b = *g.find_edge(4, 5);
  NeighborRotation rot(9);
  for (int x = 0; x < 8; ++x) rot[x] = {(x + 1) % 8, (x + 7) % 8};
  rot[0] = {8, 7};
  rot[1] = {2, 8};
  rot[4] = {8, 3};
  rot[5] = {6, 8};
  rot[8] = {0, 4, 1, 5};
  return make_drawing(std::move(g), {{a, b}}, rot);
}

TEST(Darts, Helpers) {
  EXPECT_EQ(make_dart(5, 1), 11);
  EXPECT_EQ(dart_segment(11), 5);
  EXPECT_EQ(dart_dir(11), 1);
  EXPECT_EQ(twin(11), 10);
  EXPECT_EQ(dart_edge(make_dart(2 * 7 + 1, 0)), 7);
}

TEST(BuildDrawing, PlaneFourCycle) {
  Drawing d = plane_c4();
  EXPECT_EQ(d.faces().size(), 2u);
  for (const Face& f : d.faces()) EXPECT_EQ(f.size(), 4);
  EXPECT_TRUE(d.euler().holds());
}

TEST(BuildDrawing, K33OneCrossing) {
  Drawing d = testing::k33_one_crossing();
  EXPECT_EQ(d.num_nodes(), 7);
  Planarization p = planarize(d);
  EXPECT_EQ(p.num_nodes, 7);
  EXPECT_EQ(p.segments.size(), 11u);
  // Independent trace: F = E - V + 2.
  EXPECT_EQ(static_cast<int>(testing::trace_face_lengths(neighbor_rotation(d)).size()), 11 - 7 + 2);
  EXPECT_EQ(d.faces().size(), 6u);
}

TEST(BuildDrawing, SharedEndpointCrossing) {
  ColoredGraph g = complete_bipartite(3, 3);
  const EdgeId a = *g.find_edge(0, 3), b = *g.find_edge(0, 4);
  EXPECT_EQ(code_of([&] { build_drawing(g, {{a, b}}, Rotation(7)); }), ErrorCode::SharedEndpointCrossing);
}

TEST(BuildDrawing, EdgeInTwoCrossings) {
  ColoredGraph g = complete_bipartite(3, 3);
  const EdgeId a = *g.find_edge(0, 3), b = *g.find_edge(1, 4), c = *g.find_edge(2, 5);
  EXPECT_EQ(code_of([&] { build_drawing(g, {{a, b}, {a, c}}, Rotation(8)); }), ErrorCode::EdgeInTwoCrossings);
}

TEST(BuildDrawing, NonAlternatingDummy) {
  Drawing good = testing::k33_one_crossing();
  NeighborRotation rot = neighbor_rotation(good);
  rot[6] = {0, 4, 3, 2};
  EXPECT_EQ(code_of([&] { make_drawing(good.graph(), good.crossings(), rot); }), ErrorCode::NonAlternatingDummy);
}

TEST(BuildDrawing, NotAnEmbedding) {
  Drawing good = testing::k33_one_crossing();
  NeighborRotation rot = neighbor_rotation(good);
  std::swap(rot[1][0], rot[1][1]);
  EXPECT_EQ(code_of([&] { make_drawing(good.graph(), good.crossings(), rot); }), ErrorCode::NotAnEmbedding);
}

TEST(BuildDrawing, MalformedRotation) {
  Drawing good = plane_c4();
  Rotation rot = good.rotation();
  rot[0].push_back(rot[0].front());
  EXPECT_EQ(code_of([&] { build_drawing(good.graph(), {}, rot); }), ErrorCode::MalformedRotation);
  rot = good.rotation();
  rot[0].pop_back();
  EXPECT_EQ(code_of([&] { build_drawing(good.graph(), {}, rot); }), ErrorCode::MalformedRotation);
}

TEST(Planarize, NoCrossingsIsIdentity) {
  Drawing d = plane_c4();
  Planarization p = planarize(d);
  EXPECT_EQ(p.num_nodes, 4);
  ASSERT_EQ(p.segments.size(), 4u);
  for (const Segment& s : p.segments) EXPECT_EQ(d.graph().edge(s.edge), (Edge{s.tail, s.head}));
}

TEST(Planarize, GeneratedK44) {
  Drawing d = gen_complete_bipartite(4, 4);
  EXPECT_EQ(d.num_crossings(), 4);
  Planarization p = planarize(d);
  EXPECT_EQ(p.num_nodes, 12);
  EXPECT_EQ(p.segments.size(), 24u);
}

TEST(TraceFaces, K4Triangles) {
  // K4 with 0 in the middle of triangle 1,2,3; darts 4e from the first end.
  // Edges: 0-1, 0-2, 0-3, 1-2, 2-3, 3-1.
  Rotation rot{{0, 4, 8}, {12, 1, 21}, {16, 5, 13}, {20, 9, 17}};
  auto faces = trace_faces(rot);
  ASSERT_EQ(faces.size(), 4u);
  for (const Face& f : faces) {
    EXPECT_EQ(f.size(), 3);
    EXPECT_EQ(f.id(), *std::min_element(f.darts.begin(), f.darts.end()));
  }
  EXPECT_EQ(4 - 6 + static_cast<int>(faces.size()), 2);
}

TEST(TraceFaces, RepeatedDart) {
  Rotation rot{{0, 0}, {1}};
  EXPECT_EQ(code_of([&] { trace_faces(rot); }), ErrorCode::MalformedRotation);
}

TEST(TraceFaces, PlanarizedTube) {
  Drawing d = gen_tube(1);
  Planarization p = planarize(d);
  const int E = static_cast<int>(p.segments.size()), V = p.num_nodes;
  EXPECT_EQ(static_cast<int>(trace_faces(p.rotation).size()), E - V + 2);
  EXPECT_EQ(static_cast<int>(testing::trace_face_lengths(neighbor_rotation(d)).size()), E - V + 2);
}

TEST(Classify, NoCrossingsAllSimple) {
  auto c = classify_edges(plane_c4());
  EXPECT_EQ(c.simple, 4);
  EXPECT_EQ(c.crossing_pairs, 0);
  EXPECT_EQ(c.count(EdgeClass::Simple), 4);
}

TEST(Classify, K33ByHand) {
  // Clockwise at the crossing: 0, 2, 4, 3. The color-1 end 0 of 0-4 is
  // followed by the color-1 end 2 of 2-3, so 0-4 is Right.
  Drawing d = testing::k33_one_crossing();
  auto c = classify_edges(d);
  EXPECT_EQ(c.edge_class[*d.graph().find_edge(0, 4)], EdgeClass::Right);
  EXPECT_EQ(c.edge_class[*d.graph().find_edge(2, 3)], EdgeClass::Left);
  EXPECT_EQ(c.simple, 7);
  EXPECT_EQ(c.crossing_pairs, 1);
  EXPECT_EQ(crossing_label(d, *d.graph().find_edge(0, 4), *d.graph().find_edge(2, 3)), EdgeClass::Right);
  EXPECT_EQ(crossing_label(d, *d.graph().find_edge(2, 3), *d.graph().find_edge(0, 4)), EdgeClass::Left);
}

TEST(Classify, DoubleCrossingByHand) {
  auto dc = testing::double_crossing();
  auto c = classify_edges(dc.drawing);
  EXPECT_EQ(c.edge_class[dc.ux1], EdgeClass::Left);
  EXPECT_EQ(c.edge_class[dc.uy1], EdgeClass::Left);
  EXPECT_EQ(c.edge_class[dc.x2v], EdgeClass::Right);
  EXPECT_EQ(c.edge_class[dc.y2v], EdgeClass::Right);
}

TEST(Classify, ReflectionSwapsLabels) {
  Drawing d = testing::k33_one_crossing();
  auto a = classify_edges(d);
  auto b = classify_edges(reflect(d));
  EXPECT_EQ(b.edge_class[*d.graph().find_edge(0, 4)], EdgeClass::Left);
  EXPECT_EQ(b.edge_class[*d.graph().find_edge(2, 3)], EdgeClass::Right);
  EXPECT_EQ(reflect(reflect(d)), d);
  EXPECT_EQ(a.simple, b.simple);
}

TEST(Classify, GeneratedK44) {
  auto c = classify_edges(gen_complete_bipartite(4, 4));
  EXPECT_EQ(c.simple, 8);
  EXPECT_EQ(c.crossing_pairs, 4);
  EXPECT_EQ(c.count(EdgeClass::Left), 4);
  EXPECT_EQ(c.count(EdgeClass::Right), 4);
}

TEST(Verify, GeneratedK44PassesAllLevels) {
  auto r = verify(gen_complete_bipartite(4, 4), 5);
  EXPECT_TRUE(r.all_passed());
  for (const auto& c : r.conditions) EXPECT_TRUE(c.evaluated && c.passed) << c.condition;
}

TEST(Verify, K33OneCrossingLevelFive) {
  EXPECT_TRUE(verify(testing::k33_one_crossing(), 5).all_passed());
}

TEST(Verify, FigureEightFailsOnlyLevelFive) {
  Drawing d = c8_figure_eight();
  EXPECT_TRUE(verify(d, 4).all_passed());
  auto r = verify(d, 5);
  EXPECT_FALSE(r.all_passed());
  EXPECT_FALSE(r.conditions[4].passed);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Verify, LevelOutOfRange) {
  EXPECT_EQ(code_of([] { verify(plane_c4(), 0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { verify(plane_c4(), 6); }), ErrorCode::DomainError);
}

TEST(Census, GeneratedK44) {
  auto r = census_check(gen_complete_bipartite(4, 4));
  for (const auto& v : r.vertices) {
    EXPECT_EQ(v.simple, 2);
    EXPECT_EQ(v.left, 1);
    EXPECT_EQ(v.right, 1);
  }
  EXPECT_TRUE(r.gprime_bound_tight);
  EXPECT_TRUE(r.flagged.empty());
}

TEST(Census, PlaneFourCycle) {
  for (const auto& v : census_check(plane_c4()).vertices) {
    EXPECT_EQ(v.simple, 2);
    EXPECT_EQ(v.left + v.right, 0);
  }
}

TEST(Census, TubeTwoIsTight) {
  auto r = census_check(gen_tube(2));
  EXPECT_EQ(r.crossing_pairs, 8);
  EXPECT_EQ(r.simple, 12);
  EXPECT_EQ(r.gprime_edges, 20);
  EXPECT_EQ(r.gprime_bound, 20);
  EXPECT_TRUE(r.gprime_bound_tight);
}

TEST(GPrime, NoCrossingsKeepsGraph) {
  Drawing d = plane_c4();
  GPrime gp = derive_gprime(d);
  EXPECT_EQ(gp.plane.graph(), d.graph());
}

TEST(GPrime, EdgeCounts) {
  EXPECT_EQ(derive_gprime(gen_complete_bipartite(4, 4)).plane.num_edges(), 12);
  GPrime gp = derive_gprime(gen_tube(1));
  EXPECT_EQ(gp.plane.num_edges(), 12);
  EXPECT_EQ(gp.plane.num_crossings(), 0);
  for (EdgeId e = 0; e < gp.plane.num_edges(); ++e)
    EXPECT_EQ(gp.plane.graph().edge(e), gen_tube(1).graph().edge(gp.original_edge[e]));
}

TEST(Transforms, DeleteAndPermute) {
  Drawing d = gen_complete_bipartite(4, 4);
  Drawing k34 = delete_vertices(d, {0});
  EXPECT_EQ(k34.num_vertices(), 7);
  EXPECT_EQ(k34.num_edges(), 12);
  EXPECT_EQ(k34.num_crossings(), 2);
  std::vector<VertexId> perm{7, 6, 5, 4, 3, 2, 1, 0};
  Drawing p = permute_vertices(d, perm);
  EXPECT_EQ(p.num_edges(), d.num_edges());
  EXPECT_TRUE(verify(p, 5).all_passed());
  EXPECT_EQ(classify_edges(p).count(EdgeClass::Right), 4);
}

}  // namespace
}  // namespace biplane
