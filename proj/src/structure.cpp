#include "biplane/structure.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/connected_components.hpp>
#include <iterator>
#include <map>
#include <set>

#include "biplane/error.hpp"

namespace biplane {
namespace {

std::string str(long x) { return std::to_string(x); }

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::NotExtremalStructure, what); }

// Face lookup for a crossing-free drawing.
struct FaceIndex {
  std::vector<int> face_of;  // dart -> index into faces
  std::vector<int> pos;      // dart -> position inside its face
  const std::vector<Face>* faces = nullptr;

  explicit FaceIndex(const Drawing& plane) : faces(&plane.faces()) {
    face_of.assign(4 * plane.num_edges(), -1);
    pos.assign(4 * plane.num_edges(), -1);
    for (int f = 0; f < static_cast<int>(faces->size()); ++f)
      for (int i = 0; i < (*faces)[f].size(); ++i) {
        face_of[(*faces)[f].darts[i]] = f;
        pos[(*faces)[f].darts[i]] = i;
      }
  }

  Dart next(Dart d) const {
    const Face& f = (*faces)[face_of[d]];
    return f.darts[(pos[d] + 1) % f.size()];
  }
};

bool same_cycle(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (int dir : {1, -1})
    for (size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        const long j = (static_cast<long>(s) + dir * static_cast<long>(i) % static_cast<long>(n) + static_cast<long>(n)) %
                       static_cast<long>(n);
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  return false;
}

}  // namespace

std::string_view to_string(PartKind k) { return k == PartKind::Strip ? "strip" : "ring"; }

QuadrangulationReport check_quadrangulation(const Drawing& plane) {
  QuadrangulationReport r;
  r.faces = plane.faces();
  r.is_quadrangulation = plane.num_crossings() == 0 && !r.faces.empty();
  if (plane.num_crossings() != 0) r.failures.push_back("drawing has crossings");
  for (const Face& f : r.faces) {
    std::set<NodeId> nodes;
    for (Dart d : f.darts) nodes.insert(plane.tail(d));
    if (f.size() != 4 || nodes.size() != 4) {
      r.is_quadrangulation = false;
      r.failures.push_back("face " + str(f.id()) + " is not a simple 4-cycle (length " + str(f.size()) + ")");
    }
  }

  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = plane.num_vertices();
  G bg(n);
  for (const Edge& e : plane.graph().edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<int> comp(n);
  const int components = n == 0 ? 0 : static_cast<int>(boost::connected_components(bg, comp.data()));
  std::vector<G::vertex_descriptor> cut;
  boost::articulation_points(bg, std::back_inserter(cut));
  r.is_biconnected = n >= 3 && components == 1 && cut.empty();
  if (!r.is_biconnected) r.failures.push_back("G' is not biconnected");
  return r;
}

std::vector<FaceRightEdges> right_edge_positions(const GPrime& gp) {
  std::vector<FaceRightEdges> out;
  for (const Face& f : gp.plane.faces()) {
    FaceRightEdges r;
    r.face = f.id();
    std::vector<int> at;
    for (int i = 0; i < f.size(); ++i)
      if (gp.edge_class[dart_edge(f.darts[i])] == EdgeClass::Right) at.push_back(i);
    r.right_edges = static_cast<int>(at.size());
    if (at.size() == 2) r.opposite = f.size() == 4 && at[1] - at[0] == 2;
    r.violation = r.right_edges > 2 || (r.right_edges == 2 && !r.opposite);
    out.push_back(r);
  }
  return out;
}

PartsDecomposition decompose(const GPrime& gp) {
  const Drawing& plane = gp.plane;
  const QuadrangulationReport q = check_quadrangulation(plane);
  if (!q.is_quadrangulation) fail("G' is not a quadrangulation: " + q.failures.front());
  if (!q.is_biconnected) fail("G' is not biconnected");
  const auto& faces = plane.faces();
  const int nf = static_cast<int>(faces.size());
  const FaceIndex index(plane);
  auto is_right = [&](Dart d) { return gp.edge_class[dart_edge(d)] == EdgeClass::Right; };

  PartsDecomposition out;

  // F: faces glued along right edges.
  std::vector<std::vector<int>> fadj(nf);
  for (EdgeId e = 0; e < plane.num_edges(); ++e) {
    if (gp.edge_class[e] != EdgeClass::Right) continue;
    const int a = index.face_of[4 * e], b = index.face_of[4 * e + 1];
    if (a == b) fail("right edge " + str(gp.original_edge[e]) + " has the same face on both sides");
    fadj[a].push_back(b);
    fadj[b].push_back(a);
    out.F.emplace_back(std::min(faces[a].id(), faces[b].id()), std::max(faces[a].id(), faces[b].id()));
  }
  std::sort(out.F.begin(), out.F.end());

  // Parts: components of F, which must be paths (strips) or cycles (rings).
  std::vector<int> part_of(nf, -1);
  for (int s = 0; s < nf; ++s) {
    if (part_of[s] != -1) continue;
    std::vector<int> members{s};
    part_of[s] = -2;
    for (size_t i = 0; i < members.size(); ++i)
      for (int y : fadj[members[i]])
        if (part_of[y] == -1) {
          part_of[y] = -2;
          members.push_back(y);
        }
    int degree_sum = 0, ends = 0;
    for (int f : members) {
      const int deg = static_cast<int>(fadj[f].size());
      if (deg > 2) fail("face " + str(faces[f].id()) + " has " + str(deg) + " right edges");
      degree_sum += deg;
      ends += deg < 2;
    }
    const int edges = degree_sum / 2;
    const int size = static_cast<int>(members.size());
    Part part;
    if (edges == size - 1) {
      part.kind = PartKind::Strip;
    } else if (edges == size && ends == 0) {
      part.kind = PartKind::Ring;
    } else {
      fail("component of F at face " + str(faces[s].id()) + " is neither a path nor a cycle");
    }
    // Walk the component from its smallest end (strip) or smallest face (ring).
    int start = -1;
    for (int f : members) {
      const bool candidate = part.kind == PartKind::Ring || fadj[f].size() < 2;
      if (candidate && (start < 0 || faces[f].id() < faces[start].id())) start = f;
    }
    int prev = -1, cur = start;
    std::set<int> visited;
    while (cur != -1 && visited.insert(cur).second) {
      part.faces.push_back(faces[cur].id());
      int next = -1;
      for (int y : fadj[cur]) {
        if (y == prev || visited.count(y)) continue;
        if (next < 0 || faces[y].id() < faces[next].id()) next = y;
      }
      prev = cur;
      cur = next;
    }
    for (int f : members) part_of[f] = static_cast<int>(out.parts.size());
    out.parts.push_back(std::move(part));
  }
  // Parts are created in increasing order of their smallest face index, and
  // face indices follow face ids, so this order is by smallest face id.

  // Boundaries: closed walks along simple-edge halves, stepping across right
  // edges inside the part.
  std::vector<char> used(4 * plane.num_edges(), 0);
  for (int pi = 0; pi < static_cast<int>(out.parts.size()); ++pi) {
    Part& part = out.parts[pi];
    for (Dart fid : part.faces) {
      const Face& f = faces[index.face_of[fid]];
      for (Dart d : f.darts) {
        if (is_right(d) || used[d]) continue;
        std::vector<Dart> cycle;
        Dart cur = d;
        do {
          used[cur] = 1;
          cycle.push_back(cur);
          Dart nxt = index.next(cur);
          int guard = 0;
          while (is_right(nxt)) {
            nxt = index.next(twin(nxt));
            if (++guard > 4 * plane.num_edges()) fail("boundary walk does not close");
          }
          if (part_of[index.face_of[nxt]] != pi) fail("boundary walk leaves its part");
          cur = nxt;
        } while (cur != d);
        part.boundaries.push_back(std::move(cycle));
      }
    }
    const int nfaces = static_cast<int>(part.faces.size());
    if (part.kind == PartKind::Strip) {
      if (part.boundaries.size() != 1) fail("strip has " + str(part.boundaries.size()) + " boundaries");
      if (static_cast<int>(part.boundaries[0].size()) != 2 * nfaces + 2) {
        fail("strip with " + str(nfaces) + " faces has a boundary of length " + str(part.boundaries[0].size()));
      }
    } else {
      if (part.boundaries.size() != 2) fail("ring has " + str(part.boundaries.size()) + " boundaries");
      for (const auto& b : part.boundaries)
        if (static_cast<int>(b.size()) != nfaces) {
          fail("ring with " + str(nfaces) + " faces has a boundary of length " + str(b.size()));
        }
    }
    for (const auto& b : part.boundaries) {
      std::set<EdgeId> seen;
      for (Dart d : b)
        if (!seen.insert(dart_edge(d)).second) fail("a boundary contains both halves of one simple edge");
    }
    if (part.kind == PartKind::Strip) {
      for (Dart fid : part.faces) {
        const Face& f = faces[index.face_of[fid]];
        for (int i = 0; i < f.size(); ++i) {
          const Dart in = f.darts[i], out_d = f.darts[(i + 1) % f.size()];
          if (!is_right(in) && !is_right(out_d)) part.corners.push_back(plane.tail(out_d));
        }
      }
      if (part.corners.size() != 4) fail("strip has " + str(part.corners.size()) + " corners");
    }
  }

  // P: the simple edges; every component must be a cycle.
  const int n = plane.num_vertices();
  std::vector<std::vector<EdgeId>> simple_at(n);
  for (EdgeId e = 0; e < plane.num_edges(); ++e) {
    if (gp.edge_class[e] != EdgeClass::Simple) continue;
    simple_at[plane.graph().edge(e).u].push_back(e);
    simple_at[plane.graph().edge(e).v].push_back(e);
  }
  for (VertexId x = 0; x < n; ++x)
    if (simple_at[x].size() != 2) fail("vertex " + str(x) + " has " + str(simple_at[x].size()) + " simple edges");
  std::vector<int> cycle_of(plane.num_edges(), -1);
  for (EdgeId e0 = 0; e0 < plane.num_edges(); ++e0) {
    if (gp.edge_class[e0] != EdgeClass::Simple || cycle_of[e0] >= 0) continue;
    const int id = static_cast<int>(out.P.size());
    std::vector<EdgeId> cyc;
    EdgeId e = e0;
    VertexId x = plane.graph().edge(e0).v;
    while (cycle_of[e] < 0) {
      cycle_of[e] = id;
      cyc.push_back(e);
      e = simple_at[x][0] == e ? simple_at[x][1] : simple_at[x][0];
      x = plane.graph().edge(e).other(x);
    }
    out.P.push_back(std::move(cyc));
  }

  // L: each simple cycle is cut into exactly two congruent boundaries.
  std::vector<std::vector<std::pair<int, int>>> holders(out.P.size());  // (part, boundary)
  int total_length = 0;
  for (int pi = 0; pi < static_cast<int>(out.parts.size()); ++pi)
    for (int bi = 0; bi < static_cast<int>(out.parts[pi].boundaries.size()); ++bi) {
      const auto& b = out.parts[pi].boundaries[bi];
      total_length += static_cast<int>(b.size());
      const int c = cycle_of[dart_edge(b[0])];
      for (Dart d : b)
        if (cycle_of[dart_edge(d)] != c) fail("a boundary runs over two simple cycles");
      if (b.size() != out.P[c].size()) fail("a boundary covers only part of its simple cycle");
      holders[c].emplace_back(pi, bi);
    }
  for (size_t c = 0; c < holders.size(); ++c) {
    if (holders[c].size() != 2) fail("simple cycle " + str(c) + " bounds " + str(holders[c].size()) + " parts");
    auto [pa, ba] = holders[c][0];
    auto [pb, bb] = holders[c][1];
    if (pa == pb) fail("a part is glued to itself");
    std::vector<VertexId> sa, sb;
    for (Dart d : out.parts[pa].boundaries[ba]) sa.push_back(plane.tail(d));
    for (Dart d : out.parts[pb].boundaries[bb]) sb.push_back(plane.tail(d));
    if (!same_cycle(sa, sb)) fail("paired boundaries differ as vertex cycles");
    out.L.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(out.L.begin(), out.L.end());

  const int np = static_cast<int>(out.parts.size());
  std::vector<int> ldeg(np, 0);
  for (auto [a, b] : out.L) {
    ++ldeg[a];
    ++ldeg[b];
  }
  int strips = 0;
  for (int pi = 0; pi < np; ++pi) {
    const bool strip = out.parts[pi].kind == PartKind::Strip;
    strips += strip;
    if (ldeg[pi] != (strip ? 1 : 2)) fail("L is not a path with strips at its ends");
  }
  if (strips != 2) fail("found " + str(strips) + " strips instead of two");
  if (static_cast<int>(out.L.size()) != np - 1) fail("L is not a path");
  {
    std::vector<int> seen(np, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [x, y] : out.L) {
        const int other = x == a ? y : (y == a ? x : -1);
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          stack.push_back(other);
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != np) fail("L is disconnected");
  }

  out.boundary_length = static_cast<int>(out.parts[0].boundaries[0].size());
  for (const Part& p : out.parts)
    for (const auto& b : p.boundaries)
      if (static_cast<int>(b.size()) != out.boundary_length) fail("boundaries have different lengths");
  for (const Part& p : out.parts)
    if (p.kind == PartKind::Strip) {
      out.strip_faces = static_cast<int>(p.faces.size());
      break;
    }
  if (total_length != 2 * n) fail("boundary lengths do not add up to twice the vertex count");
  if ((2 * out.strip_faces + 2) * static_cast<int>(out.L.size()) != n) fail("v differs from (2k+2) e(L)");
  return out;
}

std::vector<CornerCount> corner_census(const PartsDecomposition& decomp, const GPrime& gp) {
  const int n = gp.plane.num_vertices();
  std::vector<CornerCount> out(n);
  for (VertexId x = 0; x < n; ++x) {
    out[x].vertex = x;
    out[x].expected = 4 - gp.plane.graph().degree(x);
  }
  for (const Part& p : decomp.parts)
    for (VertexId x : p.corners) ++out[x].corners;
  return out;
}

std::vector<Lemma2Hit> lemma2_scan(const Drawing& d) {
  const auto cls = classify_edges(d);
  const ColoredGraph& g = d.graph();
  struct Pair {
    EdgeId left, right;
  };
  std::vector<Pair> pairs;
  for (auto [a, b] : d.crossings()) {
    if (cls.edge_class[a] == EdgeClass::Left) pairs.push_back({a, b});
    else pairs.push_back({b, a});
  }
  auto common = [&](EdgeId a, EdgeId b) -> std::optional<VertexId> {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    if (y.has(x.u)) return x.u;
    if (y.has(x.v)) return x.v;
    return std::nullopt;
  };
  std::vector<Lemma2Hit> hits;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pairs.size()); ++j) {
      auto u = common(pairs[i].left, pairs[j].left);
      auto v = common(pairs[i].right, pairs[j].right);
      if (!u || !v || g.color(*u) == g.color(*v)) continue;
      hits.push_back({i, j, *u, *v, pairs[i].left, pairs[i].right, pairs[j].left, pairs[j].right});
    }
  return hits;
}

StructureReport analyze(const Drawing& d) {
  StructureReport r;
  const auto cls = classify_edges(d);
  const GPrime gp = derive_gprime(d, cls);
  r.v = d.num_vertices();
  r.e = d.num_edges();
  r.t = cls.crossing_pairs;
  r.p = cls.simple;
  r.gprime_edges = gp.plane.num_edges();
  if (r.t != r.v - 4) r.failures.push_back("t=" + str(r.t) + " differs from v-4=" + str(r.v - 4));
  if (r.p != r.v) r.failures.push_back("p=" + str(r.p) + " differs from v=" + str(r.v));
  if (r.gprime_edges != 2 * r.v - 4) {
    r.failures.push_back("e(G')=" + str(r.gprime_edges) + " differs from 2v-4=" + str(2 * r.v - 4));
  }

  const QuadrangulationReport q = check_quadrangulation(gp.plane);
  r.is_quadrangulation = q.is_quadrangulation;
  r.is_biconnected = q.is_biconnected;
  for (const auto& f : q.failures) r.failures.push_back(f);
  r.max_degree_gprime = gp.plane.graph().graph().max_degree();
  if (r.max_degree_gprime > 4) r.failures.push_back("G' has a vertex of degree " + str(r.max_degree_gprime));

  r.two_simple_edges_each = true;
  for (const VertexCensus& c : census_check(d).vertices)
    if (c.simple != 2) r.two_simple_edges_each = false;
  if (!r.two_simple_edges_each) r.failures.push_back("some vertex does not have exactly two simple edges");

  for (const FaceRightEdges& f : right_edge_positions(gp)) r.right_edge_violations += f.violation;
  if (r.right_edge_violations) r.failures.push_back(str(r.right_edge_violations) + " faces with misplaced right edges");

  try {
    r.decomposition = decompose(gp);
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  if (r.decomposition) {
    r.corner_census = corner_census(*r.decomposition, gp);
    r.corner_census_matches = std::all_of(r.corner_census.begin(), r.corner_census.end(),
                                          [](const CornerCount& c) { return c.corners == c.expected; });
    if (!r.corner_census_matches) r.failures.push_back("corner census differs from 4 - d(x)");
  }

  r.lemma2_hits = lemma2_scan(d);
  if (!r.lemma2_hits.empty() && r.e > 3 * r.v - 11) {
    r.failures.push_back(str(r.lemma2_hits.size()) + " double-crossing configurations in a drawing with e > 3v-11");
  }
  r.parity_conclusion = r.failures.empty() && r.v % 2 == 0;
  return r;
}

}  // namespace biplane
