#include <gtest/gtest.h>

#include <map>
#include <set>

#include "biplane/error.hpp"
#include "test_support.hpp"

namespace biplane {
namespace {

std::vector<Drawing> extremal_samples() {
  std::vector<Drawing> out;
  for (int k = 1; k <= 4; ++k) out.push_back(gen_tube(k));
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n) out.push_back(gen_box(k, n));
  for (int k = 1; k <= 4; ++k) out.push_back(gen_two_strips(k));
  return out;
}

int gprime_degree(const GPrime& gp, VertexId x) { return gp.plane.graph().degree(x); }

TEST(Quadrangulation, K44GPrime) {
  GPrime gp = derive_gprime(gen_complete_bipartite(4, 4));
  auto r = check_quadrangulation(gp.plane);
  EXPECT_TRUE(r.is_quadrangulation);
  EXPECT_TRUE(r.is_biconnected);
  // Euler on the sphere: 12 - 8 + 2.
  EXPECT_EQ(r.faces.size(), 6u);
  EXPECT_EQ(static_cast<int>(testing::trace_face_lengths(neighbor_rotation(gp.plane)).size()), 6);
}

TEST(Quadrangulation, K23IsOne) {
  auto r = check_quadrangulation(*planar_drawing(complete_bipartite(2, 3)));
  EXPECT_TRUE(r.is_quadrangulation);
  EXPECT_EQ(r.faces.size(), 3u);
}

TEST(Quadrangulation, HexagonIsNot) {
  auto r = check_quadrangulation(*planar_drawing(even_cycle(6)));
  EXPECT_FALSE(r.is_quadrangulation);
  EXPECT_TRUE(r.is_biconnected);
  EXPECT_FALSE(r.failures.empty());
}

TEST(Quadrangulation, StarIsNot) {
  auto r = check_quadrangulation(*planar_drawing(complete_bipartite(1, 4)));
  EXPECT_FALSE(r.is_quadrangulation);
  EXPECT_FALSE(r.is_biconnected);
}

TEST(RightEdges, ExtremalHasNoViolations) {
  for (const Drawing& d : extremal_samples()) {
    for (const auto& f : right_edge_positions(derive_gprime(d))) {
      EXPECT_FALSE(f.violation);
      EXPECT_LE(f.right_edges, 2);
      if (f.right_edges == 2) EXPECT_TRUE(f.opposite);
    }
  }
}

TEST(RightEdges, AdjacentPairFlagged) {
  // A square whose two consecutive sides are marked Right.
  GPrime gp;
  gp.plane = *planar_drawing(even_cycle(4));
  gp.original_edge = {0, 1, 2, 3};
  gp.edge_class = {EdgeClass::Right, EdgeClass::Right, EdgeClass::Simple, EdgeClass::Simple};
  auto faces = right_edge_positions(gp);
  ASSERT_EQ(faces.size(), 2u);
  for (const auto& f : faces) {
    EXPECT_EQ(f.right_edges, 2);
    EXPECT_FALSE(f.opposite);
    EXPECT_TRUE(f.violation);
  }
  gp.edge_class = {EdgeClass::Right, EdgeClass::Simple, EdgeClass::Right, EdgeClass::Simple};
  for (const auto& f : right_edge_positions(gp)) {
    EXPECT_TRUE(f.opposite);
    EXPECT_FALSE(f.violation);
  }
}

TEST(RightEdges, NoCrossingsCountZero) {
  for (const auto& f : right_edge_positions(derive_gprime(*planar_drawing(complete_bipartite(2, 4)))))
    EXPECT_EQ(f.right_edges, 0);
}

TEST(Decompose, Cube) {
  GPrime gp = derive_gprime(gen_tube(1));
  auto dec = decompose(gp);
  int strips = 0, rings = 0;
  for (const Part& p : dec.parts) {
    if (p.kind == PartKind::Strip) {
      ++strips;
      EXPECT_EQ(p.faces.size(), 1u);
      ASSERT_EQ(p.boundaries.size(), 1u);
      EXPECT_EQ(p.corners.size(), 4u);
    } else {
      ++rings;
      EXPECT_EQ(p.faces.size(), 4u);
      EXPECT_EQ(p.boundaries.size(), 2u);
    }
    for (const auto& b : p.boundaries) EXPECT_EQ(b.size(), 4u);
  }
  EXPECT_EQ(strips, 2);
  EXPECT_EQ(rings, 1);
  EXPECT_EQ(dec.L.size(), 2u);
  EXPECT_EQ(dec.boundary_length, 4);
  EXPECT_EQ(dec.boundary_length * static_cast<int>(dec.L.size()), 8);
}

TEST(Decompose, TwoStripsOne) {
  auto dec = decompose(derive_gprime(gen_two_strips(1)));
  ASSERT_EQ(dec.parts.size(), 2u);
  for (const Part& p : dec.parts) {
    EXPECT_EQ(p.kind, PartKind::Strip);
    EXPECT_EQ(p.faces.size(), 4u);
    ASSERT_EQ(p.boundaries.size(), 1u);
    EXPECT_EQ(p.boundaries[0].size(), 10u);
  }
  EXPECT_EQ(dec.L.size(), 1u);
  EXPECT_EQ(dec.strip_faces, 4);
}

TEST(Decompose, Invariants) {
  for (const Drawing& d : extremal_samples()) {
    GPrime gp = derive_gprime(d);
    auto dec = decompose(gp);
    const int v = d.num_vertices();
    int strips = 0, half_sum = 0;
    for (const Part& p : dec.parts) {
      const int n = static_cast<int>(p.faces.size());
      if (p.kind == PartKind::Strip) {
        ++strips;
        ASSERT_EQ(p.boundaries.size(), 1u);
        EXPECT_EQ(static_cast<int>(p.boundaries[0].size()), 2 * n + 2);
      } else {
        ASSERT_EQ(p.boundaries.size(), 2u);
        for (const auto& b : p.boundaries) EXPECT_EQ(static_cast<int>(b.size()), n);
      }
      for (const auto& b : p.boundaries) {
        EXPECT_EQ(static_cast<int>(b.size()), dec.boundary_length);
        half_sum += static_cast<int>(b.size());
      }
    }
    EXPECT_EQ(strips, 2);
    EXPECT_EQ(static_cast<int>(dec.F.size()), d.num_crossings());
    EXPECT_EQ(d.num_crossings(), v - 4);
    EXPECT_EQ(half_sum / 2, v);
    EXPECT_EQ(static_cast<int>(dec.L.size()) + 1, static_cast<int>(dec.parts.size()));
    EXPECT_EQ(dec.boundary_length * static_cast<int>(dec.L.size()), v);
    // L is a path with the strips at its ends.
    std::map<int, int> deg;
    for (auto [a, b] : dec.L) ++deg[a], ++deg[b];
    for (size_t i = 0; i < dec.parts.size(); ++i) {
      const int expected = dec.parts[i].kind == PartKind::Strip ? 1 : 2;
      EXPECT_EQ(deg[static_cast<int>(i)], expected);
    }
    // Each simple-edge cycle in P is simple and P covers every simple edge.
    int p_edges = 0;
    for (const auto& cycle : dec.P) p_edges += static_cast<int>(cycle.size());
    EXPECT_EQ(p_edges, v);
    EXPECT_EQ(decompose(gp).parts.size(), dec.parts.size());
  }
}

TEST(Decompose, RejectsPlaneOctagon) {
  GPrime gp = derive_gprime(*planar_drawing(even_cycle(8)));
  try {
    decompose(gp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotExtremalStructure);
  }
}

TEST(Corners, CubeEachVertexOnce) {
  GPrime gp = derive_gprime(gen_tube(1));
  auto census = corner_census(decompose(gp), gp);
  ASSERT_EQ(census.size(), 8u);
  for (const auto& c : census) {
    EXPECT_EQ(gprime_degree(gp, c.vertex), 3);
    EXPECT_EQ(c.corners, 1);
    EXPECT_EQ(c.expected, 1);
  }
}

TEST(Corners, TwoStripsDegreeTwoVertices) {
  Drawing d = gen_two_strips(1);
  GPrime gp = derive_gprime(d);
  int deg2 = 0;
  std::set<Color> deg2_colors;
  for (const auto& c : corner_census(decompose(gp), gp)) {
    const int dg = gprime_degree(gp, c.vertex);
    EXPECT_EQ(c.corners, 4 - dg);
    if (dg == 4) EXPECT_EQ(c.corners, 0);
    if (dg == 2) {
      ++deg2;
      deg2_colors.insert(d.graph().color(c.vertex));
      EXPECT_EQ(c.corners, 2);
    }
  }
  EXPECT_EQ(deg2, 2);
  EXPECT_EQ(deg2_colors.size(), 2u);
}

TEST(Corners, TotalIsEight) {
  for (const Drawing& d : extremal_samples()) {
    GPrime gp = derive_gprime(d);
    int total = 0;
    for (const auto& c : corner_census(decompose(gp), gp)) {
      EXPECT_EQ(c.corners, c.expected);
      total += c.corners;
    }
    EXPECT_EQ(total, 8);
  }
}

TEST(PatternScan, DoubleCrossingHit) {
  auto dc = testing::double_crossing();
  auto hits = lemma2_scan(dc.drawing);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].u, dc.u);
  EXPECT_EQ(hits[0].v, dc.v);
  EXPECT_EQ(std::set<EdgeId>({hits[0].left_x, hits[0].left_y}), std::set<EdgeId>({dc.ux1, dc.uy1}));
  EXPECT_EQ(std::set<EdgeId>({hits[0].right_x, hits[0].right_y}), std::set<EdgeId>({dc.x2v, dc.y2v}));
}

TEST(PatternScan, MirrorSwapsEnds) {
  auto dc = testing::double_crossing();
  auto hits = lemma2_scan(reflect(dc.drawing));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].u, dc.v);
  EXPECT_EQ(hits[0].v, dc.u);
}

TEST(PatternScan, FlippedCrossingNoHit) {
  EXPECT_TRUE(lemma2_scan(testing::double_crossing(true).drawing).empty());
}

TEST(PatternScan, OneCrossingNoHit) { EXPECT_TRUE(lemma2_scan(testing::k33_one_crossing()).empty()); }

TEST(PatternScan, ExtremalNoHit) {
  for (const Drawing& d : extremal_samples()) EXPECT_TRUE(lemma2_scan(d).empty());
}

TEST(Analyze, ExtremalOk) {
  for (const Drawing& d : extremal_samples()) {
    auto r = analyze(d);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_TRUE(r.parity_conclusion);
    EXPECT_EQ(r.t, r.v - 4);
    EXPECT_EQ(r.p, r.v);
    EXPECT_EQ(r.gprime_edges, 2 * r.v - 4);
    EXPECT_LE(r.max_degree_gprime, 4);
    EXPECT_TRUE(r.two_simple_edges_each);
    EXPECT_TRUE(r.corner_census_matches);
  }
}

TEST(Analyze, NonExtremalReported) {
  auto r = analyze(gen_odd(9));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.parity_conclusion);
  auto k33 = analyze(testing::k33_one_crossing());
  EXPECT_FALSE(k33.ok());
  EXPECT_FALSE(k33.decomposition.has_value());
}

}  // namespace
}  // namespace biplane
