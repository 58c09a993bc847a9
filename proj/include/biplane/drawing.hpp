#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biplane/graph.hpp"

namespace biplane {

// Planarization nodes are the original vertices 0..n-1 followed by one dummy
// node n+i for the i-th crossing pair.
//
// Every edge e owns two segment ids: 2e (the part leaving its first endpoint)
// and 2e+1 (the part entering its second endpoint, present only when e is
// crossed). An uncrossed edge is the single segment 2e. A dart is a directed
// segment, 2*segment + dir, where dir 0 runs from the first endpoint towards
// the second. Hence twin(d) == d ^ 1 and the edge of a dart is d >> 2.
using Dart = int;
using NodeId = int;

constexpr Dart make_dart(int segment, int dir) { return 2 * segment + dir; }
constexpr int dart_segment(Dart d) { return d >> 1; }
constexpr int dart_dir(Dart d) { return d & 1; }
constexpr Dart twin(Dart d) { return d ^ 1; }
constexpr EdgeId dart_edge(Dart d) { return d >> 2; }

/// Per planarization node, the darts leaving it in counterclockwise order.
using Rotation = std::vector<std::vector<Dart>>;

/// Per planarization node, the neighbouring nodes in counterclockwise order.
using NeighborRotation = std::vector<std::vector<NodeId>>;

struct CrossingPair {
  EdgeId first = 0;
  EdgeId second = 0;
  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

/// A face is a dart cycle; its id is the smallest dart, which is also the
/// first entry.
struct Face {
  std::vector<Dart> darts;
  Dart id() const { return darts.front(); }
  int size() const { return static_cast<int>(darts.size()); }
};

/// Orbits of d -> successor of twin(d) in its rotation. With counterclockwise
/// rotations this walks every face clockwise, keeping the face on the right.
/// Throws MalformedRotation when a dart repeats or its twin is missing.
std::vector<Face> trace_faces(const Rotation& rotation);

struct EulerStats {
  int nodes = 0;
  int segments = 0;
  int traced_faces = 0;
  int components = 0;
  int sphere_faces = 0;  // faces of the whole drawing on one sphere

  bool holds() const { return nodes - segments + sphere_faces == 1 + components; }
};

enum class EdgeClass : std::uint8_t { Simple, Left, Right };
std::string_view to_string(EdgeClass c);

/// A combinatorial drawing: the graph, its crossing pairs and the rotation
/// system of its planarization. Only build_drawing creates one, so every
/// instance satisfies conditions 1 to 4 and embeds in the sphere.
class Drawing {
 public:
  Drawing() = default;

  const ColoredGraph& graph() const { return graph_; }
  const std::vector<CrossingPair>& crossings() const { return crossings_; }
  const Rotation& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  const EulerStats& euler() const { return euler_; }

  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_nodes() const { return num_vertices() + num_crossings(); }

  bool is_dummy(NodeId x) const { return x >= num_vertices(); }
  NodeId dummy_of(int crossing) const { return num_vertices() + crossing; }

  /// Index of the crossing pair containing e, if any.
  std::optional<int> crossing_of(EdgeId e) const {
    int c = crossing_of_edge_[e];
    return c < 0 ? std::nullopt : std::optional<int>(c);
  }
  bool is_crossed(EdgeId e) const { return crossing_of_edge_[e] >= 0; }
  EdgeId partner(EdgeId e) const;

  NodeId tail(Dart d) const;
  NodeId head(Dart d) const { return tail(twin(d)); }

  /// Dart leaving original vertex `node` along its incident edge e.
  Dart dart_from(NodeId node, EdgeId e) const;

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return a.graph_ == b.graph_ && a.crossings_ == b.crossings_ && a.rotation_ == b.rotation_;
  }

 private:
  friend Drawing build_drawing(ColoredGraph, std::vector<CrossingPair>, Rotation);

  ColoredGraph graph_;
  std::vector<CrossingPair> crossings_;
  Rotation rotation_;
  std::vector<int> crossing_of_edge_;
  std::vector<Face> faces_;
  EulerStats euler_;
};

/// Validates and assembles a drawing. Throws EdgeInTwoCrossings,
/// SharedEndpointCrossing, MalformedRotation, NonAlternatingDummy or
/// NotAnEmbedding. Condition 2 (no self-intersection) cannot be expressed in
/// this representation.
Drawing build_drawing(ColoredGraph g, std::vector<CrossingPair> crossings, Rotation rotation);

/// Same as build_drawing, with rotations given as neighbour node lists.
/// Works because the planarization of a valid drawing has no parallel edges.
Drawing make_drawing(ColoredGraph g, std::vector<CrossingPair> crossings,
                     const NeighborRotation& neighbors);

NeighborRotation neighbor_rotation(const Drawing& d);

struct Segment {
  int id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  EdgeId edge = 0;
};

struct Planarization {
  int num_nodes = 0;
  int num_original = 0;
  std::vector<Segment> segments;
  Rotation rotation;
};

Planarization planarize(const Drawing& d);

struct EdgeClassification {
  std::vector<EdgeClass> edge_class;
  int simple = 0;  // p
  int crossing_pairs = 0;  // t

  int count(EdgeClass c) const;
};

/// Simple / Left / Right labels. At each crossing the darts are read
/// clockwise (reverse of the stored order); the edge whose color-1 part is
/// immediately followed by the other edge's color-1 part is Right.
EdgeClassification classify_edges(const Drawing& d);

/// Label of `first` relative to `second` at their crossing; exposed for the
/// antisymmetry property.
EdgeClass crossing_label(const Drawing& d, EdgeId first, EdgeId second);

struct VertexCensus {
  VertexId vertex = 0;
  int degree = 0;
  int simple = 0;
  int left = 0;
  int right = 0;
  int simple_floor = 0;  // ceil(degree / 3)
  bool left_exceeds_simple = false;
  bool right_exceeds_simple = false;
};

struct CensusReport {
  std::vector<VertexCensus> vertices;
  int simple = 0;
  int crossing_pairs = 0;
  int gprime_edges = 0;  // t + p
  int gprime_bound = 0;  // 2v - 4
  bool gprime_bound_holds = true;
  bool gprime_bound_tight = false;
  std::vector<VertexId> flagged;
};

/// Per-vertex simple/left/right counts with the inequality diagnostics
/// left(w) <= simple(w), right(w) <= simple(w) and t + p <= 2v - 4.
CensusReport census_check(const Drawing& d);

struct ConditionCheck {
  int condition = 0;
  bool evaluated = false;
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  int level = 0;
  std::array<ConditionCheck, 5> conditions{};
  std::vector<VertexCensus> census;
  std::vector<std::string> diagnostics;

  bool all_passed() const;
};

/// Checks conditions 1..level. Level 5 additionally requires, for every
/// crossing u1u2 x v1v2, that u1v2 and u2v1 are edges and are simple.
/// Failures are report entries; throws only DomainError for a bad level.
VerificationReport verify(const Drawing& d, int level);

/// The plane graph left after deleting all Left edges, as a crossing-free
/// drawing. Edges keep their relative order; original_edge maps back.
struct GPrime {
  Drawing plane;
  std::vector<EdgeId> original_edge;
  std::vector<EdgeClass> edge_class;  // Simple or Right, per plane edge
};

GPrime derive_gprime(const Drawing& d);
GPrime derive_gprime(const Drawing& d, const EdgeClassification& cls);

/// Mirror image: every rotation reversed.
Drawing reflect(const Drawing& d);

/// Drawing of the subgraph induced by the kept vertices (ascending relabel).
/// Crossings that lose an edge dissolve.
Drawing delete_vertices(const Drawing& d, const std::vector<VertexId>& removed);

/// Renames vertex x to new_id[x]; edges, crossings and rotations follow.
Drawing permute_vertices(const Drawing& d, const std::vector<VertexId>& new_id);

/// True when no two edges share both endpoints (always true for a built
/// drawing; used as an explicit regression check by generators).
bool has_duplicate_edges(const std::vector<Edge>& edges);

}  // namespace biplane
