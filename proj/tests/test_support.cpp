#include "test_support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace biplane::testing {

namespace {

// Plain union-find; the library's component code is not reused.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<int> trace_face_lengths(const NeighborRotation& rot) {
  std::map<std::pair<int, int>, bool> seen;
  for (int a = 0; a < static_cast<int>(rot.size()); ++a)
    for (int b : rot[a]) seen[{a, b}] = false;
  auto succ_around = [&](int b, int a) {
    const auto& l = rot[b];
    auto it = std::find(l.begin(), l.end(), a);
    ++it;
    return it == l.end() ? l.front() : *it;
  };
  std::vector<int> lengths;
  for (auto& [start, used] : seen) {
    if (used) continue;
    int len = 0;
    auto cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      cur = {cur.second, succ_around(cur.second, cur.first)};
    }
    lengths.push_back(len);
  }
  return lengths;
}

bool euler_by_component(const Drawing& d) {
  const NeighborRotation rot = neighbor_rotation(d);
  const int n = static_cast<int>(rot.size());
  Dsu dsu(n);
  for (int a = 0; a < n; ++a)
    for (int b : rot[a]) dsu.join(a, b);
  std::map<int, int> verts, half_edges, faces;
  for (int a = 0; a < n; ++a) {
    if (rot[a].empty()) continue;
    ++verts[dsu.find(a)];
    half_edges[dsu.find(a)] += static_cast<int>(rot[a].size());
  }
  // Trace faces per component so each face is attributed to one root.
  for (auto& [root, count] : verts) {
    NeighborRotation sub(n);
    for (int a = 0; a < n; ++a)
      if (dsu.find(a) == root) sub[a] = rot[a];
    faces[root] = static_cast<int>(trace_face_lengths(sub).size());
    if (count - half_edges[root] / 2 + faces[root] != 2) return false;
  }
  return true;
}

std::optional<bool> brute_force_planar(const SimpleGraph& g, long long limit) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::vector<int>>> orders(n);
  long long total = 1;
  for (int x = 0; x < n; ++x) {
    std::vector<int> nb;
    for (EdgeId e : g.incident(x)) nb.push_back(g.edge(e).other(x));
    if (nb.empty()) {
      orders[x].push_back({});
      continue;
    }
    std::sort(nb.begin() + 1, nb.end());
    do {
      orders[x].push_back(nb);
    } while (std::next_permutation(nb.begin() + 1, nb.end()));
    total *= static_cast<long long>(orders[x].size());
    if (total > limit) return std::nullopt;
  }
  Dsu dsu(n);
  for (const Edge& e : g.edges()) dsu.join(e.u, e.v);
  int comps = 0, active = 0;
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) == 0) continue;
    ++active;
    if (dsu.find(x) == x) ++comps;
  }
  std::vector<size_t> pick(n, 0);
  while (true) {
    NeighborRotation rot(n);
    for (int x = 0; x < n; ++x) rot[x] = orders[x][pick[x]];
    const int faces = static_cast<int>(trace_face_lengths(rot).size());
    if (active - g.num_edges() + faces == 2 * comps) return true;
    int x = 0;
    while (x < n && ++pick[x] == orders[x].size()) pick[x++] = 0;
    if (x == n) return false;
  }
}

int stated_beta(int v) {
  if (v % 2 == 0 && v != 6) return 3 * v - 8;
  return 3 * v - 9;
}

int bipartite_max(int v) { return (v / 2) * ((v + 1) / 2); }

DoubleCrossing double_crossing(bool flip_second) {
  // u=0 v=1 x1=2 x2=3 y1=4 y2=5, pendants 6,7 on u and 8,9 on v.
  const std::vector<int> colors{1, 2, 2, 1, 2, 1, 2, 2, 1, 1};
  const std::vector<std::pair<int, int>> edges{{0, 2}, {3, 1}, {0, 4}, {5, 1}, {0, 6}, {0, 7}, {1, 8}, {1, 9}};
  ColoredGraph g = build_graph(10, colors, edges);
  const int A = 10, B = 11;
  NeighborRotation rot(12);
  rot[0] = {A, 6, B, 7};
  rot[1] = {A, 9, B, 8};
  rot[2] = {A};
  rot[3] = {A};
  rot[4] = {B};
  rot[5] = {B};
  rot[6] = {0};
  rot[7] = {0};
  rot[8] = {1};
  rot[9] = {1};
  rot[A] = {0, 3, 2, 1};
  rot[B] = flip_second ? NeighborRotation::value_type{1, 4, 5, 0} : NeighborRotation::value_type{0, 5, 4, 1};
  DoubleCrossing out;
  out.drawing = make_drawing(std::move(g), {{0, 1}, {2, 3}}, rot);
  out.ux1 = 0;
  out.x2v = 1;
  out.uy1 = 2;
  out.y2v = 3;
  return out;
}

Drawing k33_one_crossing() {
  // Hexagon 0,3,1,4,2,5 counterclockwise; 0-4 and 2-3 cross at the centre,
  // 1-5 runs around the outside past 3 and 0.
  ColoredGraph g = complete_bipartite(3, 3);
  const EdgeId e04 = *g.find_edge(0, 4), e23 = *g.find_edge(2, 3);
  const int X = 6;
  NeighborRotation rot(7);
  rot[0] = {3, X, 5};
  rot[3] = {1, X, 0};
  rot[1] = {3, 5, 4};
  rot[4] = {X, 1, 2};
  rot[2] = {5, X, 4};
  rot[5] = {1, 0, 2};
  rot[X] = {0, 3, 4, 2};
  return make_drawing(std::move(g), {{e04, e23}}, rot);
}

ColoredGraph random_bipartite(std::mt19937& rng, int n, double p) {
  std::vector<int> colors(n);
  std::uniform_int_distribution<int> coin(1, 2);
  for (int& c : colors) c = coin(rng);
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (colors[a] != colors[b] && keep(rng)) edges.emplace_back(a, b);
  return build_graph(n, colors, edges);
}

Drawing random_drawing(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int kind = pick(rng);
  Drawing d;
  if (kind < 6) {
    switch (kind) {
      case 0: d = gen_tube(std::uniform_int_distribution<int>(1, 4)(rng)); break;
      case 1: d = gen_box(std::uniform_int_distribution<int>(1, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng)); break;
      case 2: d = gen_two_strips(std::uniform_int_distribution<int>(1, 4)(rng)); break;
      case 3: d = gen_odd(2 * std::uniform_int_distribution<int>(4, 8)(rng) + 1); break;
      case 4: {
        static const std::pair<int, int> pairs[] = {{3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}, {2, 5}};
        auto [a, b] = pairs[std::uniform_int_distribution<int>(0, 5)(rng)];
        d = gen_complete_bipartite(a, b);
        break;
      }
      default: d = gen_extremal(std::uniform_int_distribution<int>(8, 22)(rng)); break;
    }
    std::vector<VertexId> removed;
    std::bernoulli_distribution drop(0.2);
    for (VertexId x = 0; x < d.num_vertices(); ++x)
      if (drop(rng)) removed.push_back(x);
    if (static_cast<int>(removed.size()) < d.num_vertices()) d = delete_vertices(d, removed);
  } else {
    // Small random graph through the search; retry until it is 1-planar.
    while (true) {
      ColoredGraph g = random_bipartite(rng, std::uniform_int_distribution<int>(4, 7)(rng), 0.7);
      auto r = decide_one_planar(g);
      if (r.witness()) {
        d = r.witness()->drawing;
        break;
      }
    }
  }
  std::vector<VertexId> perm(d.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  d = permute_vertices(d, perm);
  if (std::bernoulli_distribution(0.5)(rng)) d = reflect(d);
  return d;
}

}  // namespace biplane::testing
