#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace biplane {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool has(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless graph without multiple edges. Edge ids are positional: edge i is
/// the i-th pair handed to the constructor, endpoints kept in input order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(VertexId x) const { return static_cast<int>(incident_[x].size()); }
  std::span<const EdgeId> incident(VertexId x) const { return incident_[x]; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  int min_degree() const;
  int max_degree() const;

  /// Connected components as a component index per vertex.
  std::vector<int> components(int* count = nullptr) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

using Color = std::uint8_t;  // 1 or 2

/// A simple bipartite graph together with a fixed proper 2-coloring.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(SimpleGraph graph, std::vector<Color> colors);

  const SimpleGraph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  const Edge& edge(EdgeId e) const { return graph_.edge(e); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  int degree(VertexId x) const { return graph_.degree(x); }
  std::span<const EdgeId> incident(VertexId x) const { return graph_.incident(x); }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const { return graph_.find_edge(a, b); }

  Color color(VertexId x) const { return colors_[x]; }
  const std::vector<Color>& colors() const { return colors_; }

  /// Endpoint of `e` carrying color `c`.
  VertexId end_with_color(EdgeId e, Color c) const {
    const Edge& ed = graph_.edge(e);
    return colors_[ed.u] == c ? ed.u : ed.v;
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.colors_ == b.colors_ && a.graph_.num_vertices() == b.graph_.num_vertices() &&
           a.graph_.edges() == b.graph_.edges();
  }

 private:
  SimpleGraph graph_;
  std::vector<Color> colors_;
};

/// Validating constructor used by every input path.
/// Throws LoopEdge, DuplicateEdge, MonochromaticEdge, BadColor or BadVertex.
ColoredGraph build_graph(int n, const std::vector<int>& colors,
                         const std::vector<std::pair<int, int>>& edge_pairs);

/// Proper 2-coloring of a bipartite graph, vertex 0 of every component gets
/// color 1. Returns nullopt when the graph has an odd cycle.
std::optional<std::vector<Color>> two_color(const SimpleGraph& g);

/// Maximum number of edges of a bipartite 1-planar graph on v >= 4 vertices.
int beta(int v);

enum class BoundName {
  Planar3v6,
  BipartitePlanar2v4,
  OnePlanar4v8,
  BipartiteOnePlanarBeta,
};

std::string_view to_string(BoundName name);

struct BoundVerdict {
  BoundName bound_name;
  int max_edges = 0;
  bool violated = false;
};

/// True for the bounds whose violation proves the graph is not 1-planar.
bool certifies_non_one_planar(const BoundVerdict& verdict);

std::vector<BoundVerdict> bound_check(const ColoredGraph& g);

// Named graphs.
ColoredGraph complete_bipartite(int a, int b);
ColoredGraph even_cycle(int n);

}  // namespace biplane
