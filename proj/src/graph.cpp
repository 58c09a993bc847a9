#include "biplane/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "biplane/error.hpp"

namespace biplane {

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), incident_(num_vertices) {
  if (num_vertices < 0) throw Error(ErrorCode::BadVertex, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= num_vertices || ed.v >= num_vertices) {
      throw Error(ErrorCode::BadVertex, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.u == ed.v) throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(e) + " is a loop");
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e) + " repeats (" +
                                                std::to_string(ed.u) + "," + std::to_string(ed.v) + ")");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

std::optional<EdgeId> SimpleGraph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= num_vertices_ || b < 0 || b >= num_vertices_) return std::nullopt;
  const auto& small = incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
  for (EdgeId e : small) {
    if (edges_[e].has(a) && edges_[e].has(b)) return e;
  }
  return std::nullopt;
}

int SimpleGraph::min_degree() const {
  int d = num_vertices_ == 0 ? 0 : degree(0);
  for (VertexId x = 1; x < num_vertices_; ++x) d = std::min(d, degree(x));
  return d;
}

int SimpleGraph::max_degree() const {
  int d = 0;
  for (VertexId x = 0; x < num_vertices_; ++x) d = std::max(d, degree(x));
  return d;
}

std::vector<int> SimpleGraph::components(int* count) const {
  std::vector<int> comp(num_vertices_, -1);
  int c = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < num_vertices_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[x]) {
        VertexId y = edges_[e].other(x);
        if (comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

ColoredGraph::ColoredGraph(SimpleGraph graph, std::vector<Color> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != graph_.num_vertices()) {
    throw Error(ErrorCode::BadColor, "color list length differs from vertex count");
  }
  for (VertexId x = 0; x < graph_.num_vertices(); ++x) {
    if (colors_[x] != 1 && colors_[x] != 2) {
      throw Error(ErrorCode::BadColor, "vertex " + std::to_string(x) + " has color " +
                                           std::to_string(int(colors_[x])));
    }
  }
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
    const Edge& ed = graph_.edge(e);
    if (colors_[ed.u] == colors_[ed.v]) {
      throw Error(ErrorCode::MonochromaticEdge, "edge " + std::to_string(e) + " (" +
                                                    std::to_string(ed.u) + "," + std::to_string(ed.v) +
                                                    ") joins two vertices of color " +
                                                    std::to_string(int(colors_[ed.u])));
    }
  }
}

ColoredGraph build_graph(int n, const std::vector<int>& colors,
                         const std::vector<std::pair<int, int>>& edge_pairs) {
  if (n < 0) throw Error(ErrorCode::BadVertex, "negative vertex count");
  if (static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::BadColor, "expected " + std::to_string(n) + " colors, got " +
                                         std::to_string(colors.size()));
  }
  std::vector<Color> cs(n);
  for (int x = 0; x < n; ++x) {
    if (colors[x] != 1 && colors[x] != 2) {
      throw Error(ErrorCode::BadColor, "vertex " + std::to_string(x) + " has color " +
                                           std::to_string(colors[x]));
    }
    cs[x] = static_cast<Color>(colors[x]);
  }
  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) edges.push_back({a, b});
  return ColoredGraph(SimpleGraph(n, std::move(edges)), std::move(cs));
}

std::optional<std::vector<Color>> two_color(const SimpleGraph& g) {
  std::vector<Color> color(g.num_vertices(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (color[s]) continue;
    color[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.edge(e).other(x);
        if (!color[y]) {
          color[y] = color[x] == 1 ? 2 : 1;
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

int beta(int v) {
  if (v < 4) throw Error(ErrorCode::DomainError, "beta(v) is defined for v >= 4, got " + std::to_string(v));
  if (v % 2 == 0 && v != 6) return 3 * v - 8;
  return 3 * v - 9;
}

std::string_view to_string(BoundName name) {
  switch (name) {
    case BoundName::Planar3v6: return "planar_3v6";
    case BoundName::BipartitePlanar2v4: return "bipartite_planar_2v4";
    case BoundName::OnePlanar4v8: return "oneplanar_4v8";
    case BoundName::BipartiteOnePlanarBeta: return "bipartite_oneplanar_beta";
  }
  return "unknown";
}

bool certifies_non_one_planar(const BoundVerdict& verdict) {
  return verdict.violated && (verdict.bound_name == BoundName::OnePlanar4v8 ||
                              verdict.bound_name == BoundName::BipartiteOnePlanarBeta);
}

std::vector<BoundVerdict> bound_check(const ColoredGraph& g) {
  const int v = g.num_vertices();
  const int e = g.num_edges();
  std::vector<BoundVerdict> out;
  auto add = [&](BoundName name, int max_edges) { out.push_back({name, max_edges, e > max_edges}); };
  if (v >= 3) {
    add(BoundName::Planar3v6, 3 * v - 6);
    add(BoundName::BipartitePlanar2v4, 2 * v - 4);
    add(BoundName::OnePlanar4v8, 4 * v - 8);
  }
  if (v >= 4) add(BoundName::BipartiteOnePlanarBeta, beta(v));
  return out;
}

ColoredGraph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::DomainError, "negative part size");
  std::vector<int> colors(a + b, 2);
  std::fill(colors.begin(), colors.begin() + a, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_graph(a + b, colors, edges);
}

ColoredGraph even_cycle(int n) {
  if (n < 4 || n % 2) throw Error(ErrorCode::DomainError, "bipartite cycles need even length >= 4");
  std::vector<int> colors(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    colors[i] = i % 2 == 0 ? 1 : 2;
    edges.emplace_back(i, (i + 1) % n);
  }
  return build_graph(n, colors, edges);
}

}  // namespace biplane
