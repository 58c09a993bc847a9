#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biplane/drawing.hpp"
#include "biplane/graph.hpp"

namespace biplane {

/// A plane quadrangulation given by its face cycles, plus the edges that must
/// end up Right, grouped by the part (strip or ring) they belong to.
///
/// Faces are vertex cycles listed clockwise as seen from outside the sphere,
/// i.e. with the face on the right of every step.
struct QuadSpec {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> faces;
  std::vector<std::vector<EdgeId>> parts;  // rung edges per part
};

/// Plane drawing of the quadrangulation alone. Throws MalformedRotation when
/// the faces do not close up into a sphere.
Drawing quadrangulation_drawing(const QuadSpec& spec);

/// Adds one left diagonal across every rung. Each part picks one of the two
/// diagonals for all its rungs; choices are tried in a fixed order and the
/// first drawing without duplicate edges that passes verify(5) is returned.
/// Throws NotExtremalStructure when no choice works.
Drawing add_diagonals(const QuadSpec& spec);

QuadSpec box_spec(int k, int n);
QuadSpec two_strips_spec(int k);

/// G_k: the 1 x 1 x k box.
Drawing gen_tube(int k);
/// G_{k,n}: the 1 x k x n box, two strips and n rings.
Drawing gen_box(int k, int n);
/// H_k: two strips of 2k+2 faces sharing one boundary cycle.
Drawing gen_two_strips(int k);
/// Odd v >= 9: an extremal drawing on v-1 vertices plus one vertex of degree 2
/// placed inside the middle region of a face crossed by two diagonals.
Drawing gen_odd(int v);

/// Extremal drawing on v >= 8 vertices: tube or two-strips for even v, gen_odd
/// otherwise. Throws DomainError for v < 8.
Drawing gen_extremal(int v);

struct PairSupport {
  int a = 0;
  int b = 0;
  bool supported = false;
  std::string reason;  // why not, when unsupported
  std::optional<BoundVerdict> bound;
};

/// Whether K_{a,b} has a 1-planar drawing, by bound or by the K_{3,7} argument.
PairSupport complete_bipartite_support(int a, int b);

/// 1-planar drawing of K_{a,b} (smaller part first, as color 1). Throws
/// UnsupportedPair with the reason for non-1-planar pairs.
Drawing gen_complete_bipartite(int a, int b);

/// Crossing pairs of a 6-crossing drawing of K_{3,6}, as edge ids of
/// complete_bipartite(3, 6).
const std::vector<CrossingPair>& k36_crossings();

}  // namespace biplane
