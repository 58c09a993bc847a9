#include "biplane/extremal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "biplane/error.hpp"
#include "biplane/search.hpp"

namespace biplane {
namespace {

std::string str(int x) { return std::to_string(x); }

// Counterclockwise neighbour lists from face cycles: a face step p -> x -> q
// means q follows p around x.
NeighborRotation rotation_from_faces(const QuadSpec& spec) {
  const int n = static_cast<int>(spec.colors.size());
  std::vector<std::map<VertexId, VertexId>> succ(n);
  std::set<std::pair<VertexId, VertexId>> steps;
  for (const auto& face : spec.faces) {
    const int len = static_cast<int>(face.size());
    for (int i = 0; i < len; ++i) {
      const VertexId p = face[i], x = face[(i + 1) % len], q = face[(i + 2) % len];
      if (!steps.insert({p, x}).second) {
        throw Error(ErrorCode::MalformedRotation, "directed edge " + str(p) + "->" + str(x) + " on two faces");
      }
      succ[x][p] = q;
    }
  }
  SimpleGraph g(n, spec.edges);
  NeighborRotation rot(n);
  for (VertexId x = 0; x < n; ++x) {
    if (g.degree(x) == 0) continue;
    if (static_cast<int>(succ[x].size()) != g.degree(x)) {
      throw Error(ErrorCode::MalformedRotation, "faces around vertex " + str(x) + " do not match its degree");
    }
    const VertexId start = g.edge(g.incident(x)[0]).other(x);
    VertexId y = start;
    do {
      rot[x].push_back(y);
      auto it = succ[x].find(y);
      if (it == succ[x].end()) throw Error(ErrorCode::MalformedRotation, "open fan at vertex " + str(x));
      y = it->second;
    } while (y != start && static_cast<int>(rot[x].size()) <= g.degree(x));
    if (y != start || static_cast<int>(rot[x].size()) != g.degree(x)) {
      throw Error(ErrorCode::MalformedRotation, "faces around vertex " + str(x) + " form more than one fan");
    }
  }
  return rot;
}

int index_of(const std::vector<NodeId>& list, NodeId y) {
  auto it = std::find(list.begin(), list.end(), y);
  if (it == list.end()) throw Error(ErrorCode::MalformedRotation, "missing neighbour " + str(y));
  return static_cast<int>(it - list.begin());
}

NodeId rot_next(const std::vector<NodeId>& list, NodeId y) { return list[(index_of(list, y) + 1) % list.size()]; }
NodeId rot_prev(const std::vector<NodeId>& list, NodeId y) {
  return list[(index_of(list, y) + list.size() - 1) % list.size()];
}

struct Diagonal {
  EdgeId rung = 0;
  VertexId x = 0, y = 0;  // rung ends
  VertexId a = 0, b = 0;  // diagonal ends, a next to x
  bool keeps_rung_right = true;
};

// The two diagonals of the 1x2 rectangle formed by the faces on both sides of
// rung xy. With face (w, x, y, q) on one side and (w', y, x, s) on the other,
// w-w' leaves the rung Right and q-s makes it Left.
Diagonal diagonal_for(const NeighborRotation& rot, EdgeId rung, const Edge& e, bool keep_right) {
  Diagonal d;
  d.rung = rung;
  d.x = e.u;
  d.y = e.v;
  d.keeps_rung_right = keep_right;
  if (keep_right) {
    d.a = rot_prev(rot[d.x], d.y);
    d.b = rot_prev(rot[d.y], d.x);
  } else {
    d.a = rot_next(rot[d.y], d.x);
    d.b = rot_next(rot[d.x], d.y);
  }
  return d;
}

Drawing build_with(const QuadSpec& spec, const NeighborRotation& base, const std::vector<Diagonal>& diagonals) {
  const int n = static_cast<int>(spec.colors.size());
  std::vector<Edge> edges = spec.edges;
  std::vector<CrossingPair> crossings;
  NeighborRotation rot = base;
  rot.resize(n + diagonals.size());
  for (size_t c = 0; c < diagonals.size(); ++c) {
    const Diagonal& dg = diagonals[c];
    const NodeId dummy = n + static_cast<NodeId>(c);
    const EdgeId id = static_cast<EdgeId>(edges.size());
    edges.push_back({dg.a, dg.b});
    crossings.push_back({dg.rung, id});
    auto& lx = rot[dg.x];
    lx[index_of(lx, dg.y)] = dummy;
    auto& ly = rot[dg.y];
    ly[index_of(ly, dg.x)] = dummy;
    if (dg.keeps_rung_right) {
      // a = w sits before x's face angle; b = w' before y's.
      auto& la = rot[dg.a];
      la.insert(la.begin() + index_of(la, dg.x), dummy);
      auto& lb = rot[dg.b];
      lb.insert(lb.begin() + index_of(lb, dg.y), dummy);
      rot[dummy] = {dg.x, dg.a, dg.y, dg.b};
    } else {
      // a = q follows y, b = s follows x.
      auto& la = rot[dg.a];
      la.insert(la.begin() + index_of(la, dg.y) + 1, dummy);
      auto& lb = rot[dg.b];
      lb.insert(lb.begin() + index_of(lb, dg.x) + 1, dummy);
      rot[dummy] = {dg.x, dg.a, dg.y, dg.b};
    }
  }
  if (has_duplicate_edges(edges)) throw Error(ErrorCode::DuplicateEdge, "diagonal repeats an edge");
  ColoredGraph g(SimpleGraph(n, std::move(edges)), spec.colors);
  return make_drawing(std::move(g), std::move(crossings), rot);
}

int surface_color(int x, int y, int z) { return (x + y + z) % 2 == 0 ? 1 : 2; }

}  // namespace

Drawing quadrangulation_drawing(const QuadSpec& spec) {
  ColoredGraph g(SimpleGraph(static_cast<int>(spec.colors.size()), spec.edges), spec.colors);
  return make_drawing(std::move(g), {}, rotation_from_faces(spec));
}

Drawing add_diagonals(const QuadSpec& spec) {
  const NeighborRotation base = rotation_from_faces(spec);
  const int parts = static_cast<int>(spec.parts.size());
  if (parts > 20) throw Error(ErrorCode::DomainError, "too many parts for diagonal search");
  // Part 0 is the most significant choice; all-Right-rung first.
  for (long mask = 0; mask < (1L << parts); ++mask) {
    std::vector<Diagonal> diagonals;
    for (int p = 0; p < parts; ++p) {
      const bool keep_right = ((mask >> (parts - 1 - p)) & 1) == 0;
      for (EdgeId rung : spec.parts[p]) diagonals.push_back(diagonal_for(base, rung, spec.edges[rung], keep_right));
    }
    try {
      Drawing d = build_with(spec, base, diagonals);
      if (verify(d, 5).all_passed()) return d;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DuplicateEdge && e.code() != ErrorCode::NotAnEmbedding) throw;
    }
  }
  throw Error(ErrorCode::NotExtremalStructure, "no diagonal choice yields a regular drawing");
}

QuadSpec box_spec(int k, int n) {
  if (k < 1 || n < 1) throw Error(ErrorCode::DomainError, "box needs k >= 1 and n >= 1");
  // Surface of [0,1] x [0,n] x [0,k]; every lattice point has x in {0,1}.
  std::map<std::array<int, 3>, VertexId> id;
  QuadSpec s;
  for (int z = 0; z <= k; ++z)
    for (int y = 0; y <= n; ++y)
      for (int x = 0; x <= 1; ++x) {
        id[{x, y, z}] = static_cast<VertexId>(s.colors.size());
        s.colors.push_back(static_cast<Color>(surface_color(x, y, z)));
      }
  auto at = [&](int x, int y, int z) { return id.at({x, y, z}); };
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  auto add_edge = [&](VertexId a, VertexId b) {
    edge_id[std::minmax(a, b)] = static_cast<EdgeId>(s.edges.size());
    s.edges.push_back({a, b});
  };
  for (int z = 0; z <= k; ++z)
    for (int y = 0; y <= n; ++y) {
      // x-edges lie on the surface only on the outer layers.
      if (y == 0 || y == n || z == 0 || z == k) add_edge(at(0, y, z), at(1, y, z));
      for (int x = 0; x <= 1; ++x) {
        if (y < n) add_edge(at(x, y, z), at(x, y + 1, z));
        if (z < k) add_edge(at(x, y, z), at(x, y, z + 1));
      }
    }
  using P = std::array<int, 3>;
  auto add_face = [&](std::array<P, 4> corners, P outward) {
    // Orient clockwise seen from outside: the right-hand normal points inward.
    P a = corners[0], b = corners[1], c = corners[2];
    P u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - b[0], c[1] - b[1], c[2] - b[2]};
    P nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    const int dot = nrm[0] * outward[0] + nrm[1] * outward[1] + nrm[2] * outward[2];
    if (dot > 0) std::reverse(corners.begin(), corners.end());
    std::vector<VertexId> f;
    for (const P& p : corners) f.push_back(at(p[0], p[1], p[2]));
    s.faces.push_back(f);
  };
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < k; ++z)
        add_face({P{x, y, z}, P{x, y + 1, z}, P{x, y + 1, z + 1}, P{x, y, z + 1}}, P{x == 0 ? -1 : 1, 0, 0});
  for (int y : {0, n})
    for (int z = 0; z < k; ++z)
      add_face({P{0, y, z}, P{1, y, z}, P{1, y, z + 1}, P{0, y, z + 1}}, P{0, y == 0 ? -1 : 1, 0});
  for (int z : {0, k})
    for (int y = 0; y < n; ++y)
      add_face({P{0, y, z}, P{1, y, z}, P{1, y + 1, z}, P{0, y + 1, z}}, P{0, 0, z == 0 ? -1 : 1});

  // Strips: the y = 0 and y = n faces, cut by their inner x-edges.
  for (int y : {0, n}) {
    std::vector<EdgeId> rungs;
    for (int z = 1; z < k; ++z) rungs.push_back(edge_id.at(std::minmax(at(0, y, z), at(1, y, z))));
    s.parts.push_back(rungs);
  }
  // Rings: one band per unit of height, cut by its y-edges.
  for (int y = 0; y < n; ++y) {
    std::vector<EdgeId> rungs;
    for (int z = 0; z <= k; ++z)
      for (int x = 0; x <= 1; ++x) rungs.push_back(edge_id.at(std::minmax(at(x, y, z), at(x, y + 1, z))));
    s.parts.push_back(rungs);
  }
  return s;
}

QuadSpec two_strips_spec(int k) {
  if (k < 0) throw Error(ErrorCode::DomainError, "two-strips layout needs k >= 0");
  const int N = 4 * k + 6;
  const int m = 2 * k + 2;  // faces per strip
  QuadSpec s;
  for (int i = 0; i < N; ++i) s.colors.push_back(i % 2 == 0 ? 1 : 2);
  auto c = [&](int i) { return ((i % N) + N) % N; };
  for (int i = 0; i < N; ++i) s.edges.push_back({i, c(i + 1)});
  // Inner strip: sides c_0..c_m and t_i = c_{N-1-i}.
  auto t = [&](int i) { return c(N - 1 - i); };
  std::vector<EdgeId> inner, outer;
  for (int i = 1; i < m; ++i) {
    inner.push_back(static_cast<EdgeId>(s.edges.size()));
    s.edges.push_back({c(i), t(i)});
  }
  // Outer strip: the same ladder turned back by one step. Turning it forward
  // would make its rungs coincide with the inner diagonals.
  auto c2 = [&](int i) { return c(i - 1); };
  auto t2 = [&](int i) { return c(N - 2 - i); };
  for (int i = 1; i < m; ++i) {
    outer.push_back(static_cast<EdgeId>(s.edges.size()));
    s.edges.push_back({c2(i), t2(i)});
  }
  // The cycle runs counterclockwise; inner cells lie on its left, so they are
  // listed backwards to keep the face on the right.
  for (int j = 0; j < m; ++j) s.faces.push_back({t(j), t(j + 1), c(j + 1), c(j)});
  for (int j = 0; j < m; ++j) s.faces.push_back({c2(j), c2(j + 1), t2(j + 1), t2(j)});
  s.parts = {inner, outer};
  return s;
}

Drawing gen_tube(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "tube needs k >= 1, got " + str(k));
  return add_diagonals(box_spec(k, 1));
}

Drawing gen_box(int k, int n) {
  if (k < 1 || n < 1) throw Error(ErrorCode::DomainError, "box needs k >= 1 and n >= 1");
  return add_diagonals(box_spec(k, n));
}

Drawing gen_two_strips(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "two-strips needs k >= 1, got " + str(k));
  return add_diagonals(two_strips_spec(k));
}

Drawing gen_odd(int v) {
  if (v < 9 || v % 2 == 0) throw Error(ErrorCode::DomainError, "gen_odd needs odd v >= 9, got " + str(v));
  const Drawing base = gen_extremal(v - 1);
  const int n = base.num_vertices();
  const ColoredGraph& g = base.graph();

  // A planarization face w, A, y, B: two same-colored vertices separated by two
  // crossing points, i.e. the middle region of a face with two diagonals.
  const Face* target = nullptr;
  for (const Face& f : base.faces()) {
    if (f.size() != 4) continue;
    std::vector<NodeId> nodes;
    for (Dart d : f.darts) nodes.push_back(base.tail(d));
    int originals = 0;
    for (NodeId x : nodes) originals += !base.is_dummy(x);
    if (originals != 2) continue;
    std::vector<NodeId> orig;
    for (NodeId x : nodes)
      if (!base.is_dummy(x)) orig.push_back(x);
    if (g.color(orig[0]) != g.color(orig[1])) continue;
    if (base.is_dummy(nodes[0]) == base.is_dummy(nodes[1])) continue;  // originals must be opposite
    target = &f;
    break;
  }
  if (!target) throw Error(ErrorCode::NotExtremalStructure, "no face with two diagonals to host a new vertex");

  NeighborRotation rot = neighbor_rotation(base);
  const NodeId z = n;  // new vertex; dummies shift up by one
  for (auto& list : rot)
    for (NodeId& y : list)
      if (y >= n) ++y;
  std::vector<NodeId> ends;
  for (int i = 0; i < 4; ++i) {
    const NodeId x = base.tail(target->darts[i]);
    if (base.is_dummy(x)) continue;
    // Face step p -> x -> q: the face angle at x starts right after p.
    NodeId p = base.tail(target->darts[(i + 3) % 4]);
    if (p >= n) ++p;
    auto& list = rot[x];
    list.insert(list.begin() + index_of(list, p) + 1, z);
    ends.push_back(x);
  }
  rot.insert(rot.begin() + n, std::vector<NodeId>{ends[0], ends[1]});

  std::vector<Color> colors = g.colors();
  colors.push_back(static_cast<Color>(3 - g.color(ends[0])));
  std::vector<Edge> edges = g.edges();
  for (VertexId x : ends) edges.push_back({x, z});
  ColoredGraph h(SimpleGraph(n + 1, std::move(edges)), std::move(colors));
  return make_drawing(std::move(h), base.crossings(), rot);
}

Drawing gen_extremal(int v) {
  if (v < 8) throw Error(ErrorCode::DomainError, "extremal generators start at v = 8, got " + str(v));
  if (v % 2 == 1) return gen_odd(v);
  if (v % 4 == 0) return gen_tube(v / 4 - 1);
  return gen_two_strips((v - 6) / 4);
}

PairSupport complete_bipartite_support(int a, int b) {
  PairSupport s;
  s.a = std::min(a, b);
  s.b = std::max(a, b);
  if (s.a < 1) throw Error(ErrorCode::DomainError, "complete bipartite parts must be non-empty");
  if (s.a <= 2 || (s.a == 3 && s.b <= 6) || (s.a == 4 && s.b == 4)) {
    s.supported = true;
    return s;
  }
  ColoredGraph g = complete_bipartite(s.a, s.b);
  for (const BoundVerdict& v : bound_check(g)) {
    if (v.bound_name == BoundName::BipartiteOnePlanarBeta && v.violated) {
      s.bound = v;
      s.reason = "bound: e=" + str(g.num_edges()) + " > beta(" + str(g.num_vertices()) + ")=" + str(v.max_edges);
      return s;
    }
  }
  s.reason = "contains K_{3,7}, which is not 1-planar by the crossing counting argument";
  return s;
}

const std::vector<CrossingPair>& k36_crossings() {
  // Found by exhaustive search over 6-matchings; verified on every use.
  static const std::vector<CrossingPair> pairs = {{0, 7}, {2, 9}, {4, 13}, {5, 15}, {10, 12}, {11, 14}};
  return pairs;
}

namespace {

// Renames vertices so color 1 comes first and reorders edges to match
// complete_bipartite(a, b).
Drawing as_complete_bipartite(const Drawing& d, int a, int b) {
  const ColoredGraph& g = d.graph();
  std::vector<VertexId> new_id(g.num_vertices());
  int next1 = 0, next2 = a;
  for (VertexId x = 0; x < g.num_vertices(); ++x) new_id[x] = g.color(x) == 1 ? next1++ : next2++;
  if (next1 != a || next2 != a + b) throw Error(ErrorCode::DomainError, "part sizes do not match");
  const Drawing p = permute_vertices(d, new_id);
  const ColoredGraph target = complete_bipartite(a, b);
  std::vector<EdgeId> old_to_new(p.num_edges());
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    const Edge& ed = p.graph().edge(e);
    old_to_new[e] = *target.find_edge(ed.u, ed.v);
  }
  std::vector<CrossingPair> crossings;
  for (auto [e, f] : p.crossings()) crossings.push_back({old_to_new[e], old_to_new[f]});
  return make_drawing(target, std::move(crossings), neighbor_rotation(p));
}

}  // namespace

Drawing gen_complete_bipartite(int a, int b) {
  const PairSupport s = complete_bipartite_support(a, b);
  if (!s.supported) {
    throw Error(ErrorCode::UnsupportedPair, "K_{" + str(s.a) + "," + str(s.b) + "}: " + s.reason);
  }
  a = s.a;
  b = s.b;
  if (a <= 2) {
    auto d = planar_drawing(complete_bipartite(a, b));
    if (!d) throw Error(ErrorCode::NotAnEmbedding, "K_{1,n} or K_{2,n} reported non-planar");
    return *d;
  }
  if (a == 4) return as_complete_bipartite(gen_tube(1), 4, 4);
  if (b >= 5) {
    auto d = realize_matching(complete_bipartite(3, 6), k36_crossings());
    if (!d) throw Error(ErrorCode::NotAnEmbedding, "stored K_{3,6} crossings do not planarize");
    if (b == 6) return *d;
    return delete_vertices(*d, {8});
  }
  const Drawing k44 = gen_complete_bipartite(4, 4);
  if (b == 4) return delete_vertices(k44, {0});
  // K_{3,3}: drop one vertex of each color so that exactly one crossing stays.
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId w = 4; w < 8; ++w) {
      Drawing d = delete_vertices(k44, {u, w});
      if (d.num_crossings() == 1) return d;
    }
  throw Error(ErrorCode::NotExtremalStructure, "no K_{3,3} subdrawing with one crossing");
}

}  // namespace biplane
