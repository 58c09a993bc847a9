#pragma once

// Reference implementations used as oracles. They share no code with the
// library beyond its data types.

#include <random>
#include <vector>

#include "biplane/io.hpp"

namespace biplane::testing {

/// Faces of a rotation given as neighbour lists, traced node by node:
/// (a, b) is followed by (b, c) with c the successor of a around b.
/// Returns the length of every face.
std::vector<int> trace_face_lengths(const NeighborRotation& rot);

/// For every component of the planarization that has an edge, checks
/// V - E + F == 2 with the tracer above. Returns false on the first miss.
bool euler_by_component(const Drawing& d);

/// Planarity by trying every rotation system; only for tiny graphs. Returns
/// nullopt when the number of rotation systems exceeds `limit`.
std::optional<bool> brute_force_planar(const SimpleGraph& g, long long limit = 200000);

/// beta as written in the statement of the bound, evaluated independently.
int stated_beta(int v);

/// Largest edge count of any bipartite graph on v vertices.
int bipartite_max(int v);

/// Two crossings whose Left edges meet at u and whose Right edges meet at v.
/// Vertices: u=0 (color 1), v=1 (color 2), x1=2, x2=3, y1=4, y2=5, plus four
/// pendant vertices hanging off u and v.
struct DoubleCrossing {
  Drawing drawing;
  VertexId u = 0, v = 1;
  EdgeId ux1 = 0, x2v = 0, uy1 = 0, y2v = 0;
};
DoubleCrossing double_crossing(bool flip_second = false);

/// One crossing in K_{3,3}: parts {0,1,2} and {3,4,5}, edges 0-4 and 2-3
/// crossing, rotations read off a hand drawing.
Drawing k33_one_crossing();

ColoredGraph random_bipartite(std::mt19937& rng, int n, double p);

/// A drawing from a mix of sources: generated families with random vertex
/// deletions, relabelings and reflections, and search witnesses for small
/// random graphs.
Drawing random_drawing(std::mt19937& rng);

}  // namespace biplane::testing
