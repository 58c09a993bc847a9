#include "biplane/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "biplane/error.hpp"

namespace biplane {
namespace {

std::string str(int x) { return std::to_string(x); }

struct DartPos {
  int node = -1;
  int index = -1;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<Face> trace_faces(const Rotation& rotation) {
  Dart max_dart = -1;
  for (const auto& list : rotation)
    for (Dart d : list) {
      if (d < 0) throw Error(ErrorCode::MalformedRotation, "negative dart " + str(d));
      max_dart = std::max(max_dart, d);
    }
  std::vector<DartPos> pos(max_dart + 2);
  for (int node = 0; node < static_cast<int>(rotation.size()); ++node) {
    for (int i = 0; i < static_cast<int>(rotation[node].size()); ++i) {
      Dart d = rotation[node][i];
      if (pos[d].node != -1) {
        throw Error(ErrorCode::MalformedRotation, "dart " + str(d) + " appears twice");
      }
      pos[d] = {node, i};
    }
  }
  for (Dart d = 0; d <= max_dart; ++d) {
    if (pos[d].node != -1 && pos[twin(d)].node == -1) {
      throw Error(ErrorCode::MalformedRotation, "dart " + str(d) + " has no twin");
    }
  }
  auto next = [&](Dart d) {
    const DartPos& p = pos[twin(d)];
    const auto& list = rotation[p.node];
    return list[(p.index + 1) % list.size()];
  };
  std::vector<char> seen(max_dart + 1, 0);
  std::vector<Face> faces;
  for (Dart start = 0; start <= max_dart; ++start) {
    if (pos[start].node == -1 || seen[start]) continue;
    Face f;
    Dart d = start;
    do {
      seen[d] = 1;
      f.darts.push_back(d);
      d = next(d);
    } while (d != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Simple: return "simple";
    case EdgeClass::Left: return "left";
    case EdgeClass::Right: return "right";
  }
  return "unknown";
}

EdgeId Drawing::partner(EdgeId e) const {
  const CrossingPair& c = crossings_[crossing_of_edge_[e]];
  return c.first == e ? c.second : c.first;
}

NodeId Drawing::tail(Dart d) const {
  const int seg = dart_segment(d);
  const EdgeId e = seg >> 1;
  const Edge& ed = graph_.edge(e);
  NodeId start, end;
  if (crossing_of_edge_[e] < 0) {
    start = ed.u;
    end = ed.v;
  } else if ((seg & 1) == 0) {
    start = ed.u;
    end = dummy_of(crossing_of_edge_[e]);
  } else {
    start = dummy_of(crossing_of_edge_[e]);
    end = ed.v;
  }
  return dart_dir(d) == 0 ? start : end;
}

Dart Drawing::dart_from(NodeId node, EdgeId e) const {
  const Edge& ed = graph_.edge(e);
  const bool crossed = crossing_of_edge_[e] >= 0;
  if (node == ed.u) return 4 * e;
  if (node == ed.v) return crossed ? 4 * e + 3 : 4 * e + 1;
  throw Error(ErrorCode::MalformedRotation, "vertex " + str(node) + " is not an endpoint of edge " + str(e));
}

Drawing build_drawing(ColoredGraph g, std::vector<CrossingPair> crossings, Rotation rotation) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int t = static_cast<int>(crossings.size());

  std::vector<int> crossing_of_edge(m, -1);
  for (int c = 0; c < t; ++c) {
    auto [a, b] = crossings[c];
    if (a < 0 || b < 0 || a >= m || b >= m) {
      throw Error(ErrorCode::MalformedRotation, "crossing " + str(c) + " names a missing edge");
    }
    if (a == b) {
      throw Error(ErrorCode::MalformedRotation, "crossing " + str(c) + " pairs edge " + str(a) + " with itself");
    }
    for (EdgeId e : {a, b}) {
      if (crossing_of_edge[e] != -1) {
        throw Error(ErrorCode::EdgeInTwoCrossings,
                    "edge " + str(e) + " is in crossings " + str(crossing_of_edge[e]) + " and " + str(c));
      }
      crossing_of_edge[e] = c;
    }
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    if (ea.has(eb.u) || ea.has(eb.v)) {
      throw Error(ErrorCode::SharedEndpointCrossing,
                  "crossing edges " + str(a) + " and " + str(b) + " share an endpoint");
    }
  }

  if (static_cast<int>(rotation.size()) != n + t) {
    throw Error(ErrorCode::MalformedRotation, "rotation covers " + str(rotation.size()) +
                                                  " nodes, planarization has " + str(n + t));
  }

  Drawing d;
  d.graph_ = std::move(g);
  d.crossings_ = std::move(crossings);
  d.crossing_of_edge_ = std::move(crossing_of_edge);

  std::vector<char> seen(4 * m, 0);
  int dart_count = 0;
  for (NodeId node = 0; node < n + t; ++node) {
    for (Dart dart : rotation[node]) {
      if (dart < 0 || dart >= 4 * m) {
        throw Error(ErrorCode::MalformedRotation, "node " + str(node) + " lists unknown dart " + str(dart));
      }
      const EdgeId e = dart_edge(dart);
      if ((dart_segment(dart) & 1) && d.crossing_of_edge_[e] < 0) {
        throw Error(ErrorCode::MalformedRotation,
                    "dart " + str(dart) + " uses the second segment of uncrossed edge " + str(e));
      }
      if (seen[dart]) throw Error(ErrorCode::MalformedRotation, "dart " + str(dart) + " listed twice");
      seen[dart] = 1;
      ++dart_count;
      if (d.tail(dart) != node) {
        throw Error(ErrorCode::MalformedRotation,
                    "dart " + str(dart) + " listed at node " + str(node) + " but leaves node " + str(d.tail(dart)));
      }
    }
  }
  if (dart_count != 2 * (m + 2 * t)) {
    throw Error(ErrorCode::MalformedRotation,
                "rotation lists " + str(dart_count) + " darts, planarization has " + str(2 * (m + 2 * t)));
  }

  for (int c = 0; c < t; ++c) {
    const auto& list = rotation[n + c];
    const bool alternates = list.size() == 4 && dart_edge(list[0]) == dart_edge(list[2]) &&
                            dart_edge(list[1]) == dart_edge(list[3]) && dart_edge(list[0]) != dart_edge(list[1]);
    if (!alternates) {
      throw Error(ErrorCode::NonAlternatingDummy,
                  "crossing " + str(c) + " does not alternate between its two edges");
    }
  }

  d.rotation_ = std::move(rotation);
  d.faces_ = trace_faces(d.rotation_);

  UnionFind uf(n + t);
  for (NodeId node = 0; node < n + t; ++node)
    for (Dart dart : d.rotation_[node]) uf.unite(node, d.head(dart));
  int components = 0, isolated = 0;
  for (NodeId node = 0; node < n + t; ++node) {
    if (uf.find(node) == node) {
      ++components;
      if (d.rotation_[node].empty()) ++isolated;
    }
  }
  EulerStats& eu = d.euler_;
  eu.nodes = n + t;
  eu.segments = m + 2 * t;
  eu.traced_faces = static_cast<int>(d.faces_.size());
  eu.components = components;
  const int nontrivial = components - isolated;
  eu.sphere_faces = nontrivial == 0 ? 1 : eu.traced_faces - nontrivial + 1;
  // Every nontrivial component must be a sphere: V_i - E_i + F_i = 2.
  if (eu.nodes - eu.segments + eu.traced_faces != 2 * nontrivial + isolated) {
    throw Error(ErrorCode::NotAnEmbedding,
                "Euler check failed: V=" + str(eu.nodes) + " E=" + str(eu.segments) +
                    " F=" + str(eu.traced_faces) + " components=" + str(components));
  }
  return d;
}

Drawing make_drawing(ColoredGraph g, std::vector<CrossingPair> crossings, const NeighborRotation& neighbors) {
  const int n = g.num_vertices();
  const int t = static_cast<int>(crossings.size());
  if (static_cast<int>(neighbors.size()) != n + t) {
    throw Error(ErrorCode::MalformedRotation, "neighbour rotation covers " + str(neighbors.size()) +
                                                  " nodes, planarization has " + str(n + t));
  }
  std::vector<int> crossing_of_edge(g.num_edges(), -1);
  for (int c = 0; c < t; ++c) {
    for (EdgeId e : {crossings[c].first, crossings[c].second}) {
      if (e < 0 || e >= g.num_edges()) throw Error(ErrorCode::MalformedRotation, "crossing names a missing edge");
      crossing_of_edge[e] = c;
    }
  }
  auto bad = [](NodeId x, NodeId y) {
    return Error(ErrorCode::MalformedRotation, "no segment joins nodes " + str(x) + " and " + str(y));
  };
  Rotation rotation(n + t);
  for (NodeId x = 0; x < n + t; ++x) {
    for (NodeId y : neighbors[x]) {
      if (y < 0 || y >= n + t) throw bad(x, y);
      Dart dart = -1;
      if (x < n && y < n) {
        auto e = g.find_edge(x, y);
        if (!e || crossing_of_edge[*e] >= 0) throw bad(x, y);
        dart = g.edge(*e).u == x ? 4 * *e : 4 * *e + 1;
      } else if (x < n) {
        const CrossingPair& c = crossings[y - n];
        for (EdgeId e : {c.first, c.second})
          if (g.edge(e).has(x)) dart = g.edge(e).u == x ? 4 * e : 4 * e + 3;
        if (dart < 0) throw bad(x, y);
      } else if (y < n) {
        const CrossingPair& c = crossings[x - n];
        for (EdgeId e : {c.first, c.second})
          if (g.edge(e).has(y)) dart = g.edge(e).u == y ? 4 * e + 1 : 4 * e + 2;
        if (dart < 0) throw bad(x, y);
      } else {
        throw bad(x, y);
      }
      rotation[x].push_back(dart);
    }
  }
  return build_drawing(std::move(g), std::move(crossings), std::move(rotation));
}

NeighborRotation neighbor_rotation(const Drawing& d) {
  NeighborRotation out(d.num_nodes());
  for (NodeId x = 0; x < d.num_nodes(); ++x)
    for (Dart dart : d.rotation()[x]) out[x].push_back(d.head(dart));
  return out;
}

Planarization planarize(const Drawing& d) {
  Planarization p;
  p.num_nodes = d.num_nodes();
  p.num_original = d.num_vertices();
  p.rotation = d.rotation();
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    const int halves = d.is_crossed(e) ? 2 : 1;
    for (int h = 0; h < halves; ++h) {
      const int seg = 2 * e + h;
      p.segments.push_back({seg, d.tail(make_dart(seg, 0)), d.tail(make_dart(seg, 1)), e});
    }
  }
  return p;
}

int EdgeClassification::count(EdgeClass c) const {
  return static_cast<int>(std::count(edge_class.begin(), edge_class.end(), c));
}

namespace {

// Dart at the dummy node pointing towards the color-1 end of e.
Dart color1_dart_at_crossing(const Drawing& d, EdgeId e) {
  const Edge& ed = d.graph().edge(e);
  return d.graph().color(ed.u) == 1 ? 4 * e + 1 : 4 * e + 2;
}

bool is_right_at(const Drawing& d, int crossing, EdgeId e, EdgeId f) {
  const auto& list = d.rotation()[d.dummy_of(crossing)];
  const Dart de = color1_dart_at_crossing(d, e);
  const Dart df = color1_dart_at_crossing(d, f);
  for (int i = 0; i < 4; ++i) {
    if (list[i] == de) return list[(i + 3) % 4] == df;  // clockwise successor
  }
  throw Error(ErrorCode::MalformedRotation, "crossing dart missing");
}

}  // namespace

EdgeClass crossing_label(const Drawing& d, EdgeId first, EdgeId second) {
  auto c = d.crossing_of(first);
  if (!c || d.partner(first) != second) {
    throw Error(ErrorCode::DomainError, "edges " + str(first) + " and " + str(second) + " do not cross");
  }
  return is_right_at(d, *c, first, second) ? EdgeClass::Right : EdgeClass::Left;
}

EdgeClassification classify_edges(const Drawing& d) {
  EdgeClassification out;
  out.edge_class.assign(d.num_edges(), EdgeClass::Simple);
  for (int c = 0; c < d.num_crossings(); ++c) {
    auto [e, f] = d.crossings()[c];
    const bool e_right = is_right_at(d, c, e, f);
    out.edge_class[e] = e_right ? EdgeClass::Right : EdgeClass::Left;
    out.edge_class[f] = e_right ? EdgeClass::Left : EdgeClass::Right;
  }
  out.crossing_pairs = d.num_crossings();
  out.simple = d.num_edges() - 2 * d.num_crossings();
  return out;
}

CensusReport census_check(const Drawing& d) {
  const auto cls = classify_edges(d);
  const ColoredGraph& g = d.graph();
  CensusReport r;
  r.simple = cls.simple;
  r.crossing_pairs = cls.crossing_pairs;
  r.gprime_edges = cls.simple + cls.crossing_pairs;
  r.gprime_bound = 2 * g.num_vertices() - 4;
  r.gprime_bound_holds = r.gprime_edges <= r.gprime_bound;
  r.gprime_bound_tight = r.gprime_edges == r.gprime_bound;
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    VertexCensus vc;
    vc.vertex = x;
    vc.degree = g.degree(x);
    for (EdgeId e : g.incident(x)) {
      switch (cls.edge_class[e]) {
        case EdgeClass::Simple: ++vc.simple; break;
        case EdgeClass::Left: ++vc.left; break;
        case EdgeClass::Right: ++vc.right; break;
      }
    }
    vc.simple_floor = (vc.degree + 2) / 3;
    vc.left_exceeds_simple = vc.left > vc.simple;
    vc.right_exceeds_simple = vc.right > vc.simple;
    if (vc.left_exceeds_simple || vc.right_exceeds_simple) r.flagged.push_back(x);
    r.vertices.push_back(vc);
  }
  return r;
}

bool VerificationReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionCheck& c) { return !c.evaluated || c.passed; });
}

VerificationReport verify(const Drawing& d, int level) {
  if (level < 1 || level > 5) throw Error(ErrorCode::DomainError, "verification level must be 1..5");
  VerificationReport r;
  r.level = level;
  for (int i = 0; i < 5; ++i) {
    r.conditions[i].condition = i + 1;
    r.conditions[i].evaluated = i < level;
    r.conditions[i].passed = true;
  }
  const ColoredGraph& g = d.graph();

  // 1: every edge in at most one crossing pair.
  {
    std::vector<int> count(d.num_edges(), 0);
    for (auto [a, b] : d.crossings()) {
      ++count[a];
      ++count[b];
    }
    for (EdgeId e = 0; e < d.num_edges(); ++e) {
      if (count[e] > 1) {
        r.conditions[0].passed = false;
        r.diagnostics.push_back("condition 1: edge " + str(e) + " is crossed " + str(count[e]) + " times");
      }
    }
  }
  r.conditions[1].note = "self-intersections are not representable in a rotation system";
  if (level >= 3) {
    for (int c = 0; c < d.num_crossings(); ++c) {
      auto [a, b] = d.crossings()[c];
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      if (ea.has(eb.u) || ea.has(eb.v)) {
        r.conditions[2].passed = false;
        r.diagnostics.push_back("condition 3: crossing " + str(c) + " edges share an endpoint");
      }
    }
  }
  if (level >= 4) {
    for (int c = 0; c < d.num_crossings(); ++c) {
      const auto& list = d.rotation()[d.dummy_of(c)];
      const bool ok = list.size() == 4 && dart_edge(list[0]) == dart_edge(list[2]) &&
                      dart_edge(list[1]) == dart_edge(list[3]) && dart_edge(list[0]) != dart_edge(list[1]);
      if (!ok) {
        r.conditions[3].passed = false;
        r.diagnostics.push_back("condition 4: crossing " + str(c) + " is not transversal");
      }
    }
    if (!d.euler().holds()) {
      r.conditions[3].passed = false;
      r.diagnostics.push_back("planarization fails Euler's formula");
    }
  }
  if (level >= 5) {
    const auto cls = classify_edges(d);
    for (int c = 0; c < d.num_crossings(); ++c) {
      auto [e, f] = d.crossings()[c];
      const VertexId u1 = g.end_with_color(e, 1), u2 = g.end_with_color(e, 2);
      const VertexId v1 = g.end_with_color(f, 1), v2 = g.end_with_color(f, 2);
      for (auto [a, b] : {std::pair{u1, v2}, std::pair{u2, v1}}) {
        auto chord = g.find_edge(a, b);
        if (!chord) {
          r.conditions[4].passed = false;
          r.diagnostics.push_back("condition 5: crossing " + str(c) + " lacks chord (" + str(a) + "," + str(b) + ")");
        } else if (cls.edge_class[*chord] != EdgeClass::Simple) {
          r.conditions[4].passed = false;
          r.diagnostics.push_back("condition 5: crossing " + str(c) + " chord edge " + str(*chord) +
                                  " is not simple");
        }
      }
    }
  }
  r.census = census_check(d).vertices;
  return r;
}

GPrime derive_gprime(const Drawing& d) { return derive_gprime(d, classify_edges(d)); }

GPrime derive_gprime(const Drawing& d, const EdgeClassification& cls) {
  const ColoredGraph& g = d.graph();
  GPrime out;
  std::vector<EdgeId> new_id(g.num_edges(), -1);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (cls.edge_class[e] == EdgeClass::Left) continue;
    new_id[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(g.edge(e));
    out.original_edge.push_back(e);
    out.edge_class.push_back(cls.edge_class[e]);
  }
  Rotation rotation(g.num_vertices());
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    for (Dart dart : d.rotation()[x]) {
      const EdgeId e = dart_edge(dart);
      if (new_id[e] < 0) continue;
      rotation[x].push_back(g.edge(e).u == x ? 4 * new_id[e] : 4 * new_id[e] + 1);
    }
  }
  ColoredGraph plane_graph(SimpleGraph(g.num_vertices(), std::move(edges)), g.colors());
  out.plane = build_drawing(std::move(plane_graph), {}, std::move(rotation));
  return out;
}

Drawing reflect(const Drawing& d) {
  Rotation rotation = d.rotation();
  for (auto& list : rotation) std::reverse(list.begin(), list.end());
  return build_drawing(d.graph(), d.crossings(), std::move(rotation));
}

Drawing delete_vertices(const Drawing& d, const std::vector<VertexId>& removed) {
  const ColoredGraph& g = d.graph();
  const int n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (VertexId x : removed) {
    if (x < 0 || x >= n) throw Error(ErrorCode::BadVertex, "cannot delete vertex " + str(x));
    gone[x] = 1;
  }
  std::vector<VertexId> new_vertex(n, -1);
  std::vector<Color> colors;
  for (VertexId x = 0; x < n; ++x) {
    if (gone[x]) continue;
    new_vertex[x] = static_cast<VertexId>(colors.size());
    colors.push_back(g.color(x));
  }
  const int n2 = static_cast<int>(colors.size());
  std::vector<EdgeId> new_edge(g.num_edges(), -1);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (gone[ed.u] || gone[ed.v]) continue;
    new_edge[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({new_vertex[ed.u], new_vertex[ed.v]});
  }
  std::vector<int> new_crossing(d.num_crossings(), -1);
  std::vector<CrossingPair> crossings;
  for (int c = 0; c < d.num_crossings(); ++c) {
    auto [a, b] = d.crossings()[c];
    if (new_edge[a] < 0 || new_edge[b] < 0) continue;
    new_crossing[c] = static_cast<int>(crossings.size());
    crossings.push_back({new_edge[a], new_edge[b]});
  }
  auto map_node = [&](NodeId x) -> NodeId {
    if (x < n) return new_vertex[x];
    return new_crossing[x - n] < 0 ? -1 : n2 + new_crossing[x - n];
  };
  const NeighborRotation old = neighbor_rotation(d);
  NeighborRotation nbrs(n2 + crossings.size());
  for (NodeId x = 0; x < d.num_nodes(); ++x) {
    const NodeId nx = map_node(x);
    if (nx < 0) continue;
    for (NodeId y : old[x]) {
      NodeId ny = map_node(y);
      if (ny < 0 && y >= n && x < n) {
        // Dissolved crossing: continue straight through to the far endpoint.
        const CrossingPair& c = d.crossings()[y - n];
        for (EdgeId e : {c.first, c.second}) {
          if (g.edge(e).has(x) && new_edge[e] >= 0) ny = new_vertex[g.edge(e).other(x)];
        }
      }
      if (ny >= 0) nbrs[nx].push_back(ny);
    }
  }
  ColoredGraph sub(SimpleGraph(n2, std::move(edges)), std::move(colors));
  return make_drawing(std::move(sub), std::move(crossings), nbrs);
}

Drawing permute_vertices(const Drawing& d, const std::vector<VertexId>& new_id) {
  const ColoredGraph& g = d.graph();
  const int n = g.num_vertices();
  if (static_cast<int>(new_id.size()) != n) throw Error(ErrorCode::BadVertex, "permutation size mismatch");
  std::vector<Color> colors(n);
  std::vector<char> hit(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    if (new_id[x] < 0 || new_id[x] >= n || hit[new_id[x]]) throw Error(ErrorCode::BadVertex, "not a permutation");
    hit[new_id[x]] = 1;
    colors[new_id[x]] = g.color(x);
  }
  std::vector<Edge> edges;
  for (const Edge& ed : g.edges()) edges.push_back({new_id[ed.u], new_id[ed.v]});
  auto map_node = [&](NodeId x) { return x < n ? new_id[x] : x; };
  const NeighborRotation old = neighbor_rotation(d);
  NeighborRotation nbrs(d.num_nodes());
  for (NodeId x = 0; x < d.num_nodes(); ++x)
    for (NodeId y : old[x]) nbrs[map_node(x)].push_back(map_node(y));
  ColoredGraph pg(SimpleGraph(n, std::move(edges)), std::move(colors));
  return make_drawing(std::move(pg), d.crossings(), nbrs);
}

bool has_duplicate_edges(const std::vector<Edge>& edges) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges)
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  return false;
}

}  // namespace biplane
