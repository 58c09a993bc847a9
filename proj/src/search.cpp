#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <thread>

#include "biplane/error.hpp"
#include "biplane/search.hpp"

namespace biplane {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  explicit Deadline(std::optional<double> seconds) {
    if (seconds) at = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }
  bool passed() const { return at && Clock::now() >= *at; }
};

// One size-k layer of the matching enumeration, restricted to matchings whose
// first pair index is congruent to `worker` modulo `stride`. Stops at the
// first realizable matching, which is the lexicographically smallest one in
// this worker's share.
class Layer {
 public:
  Layer(const ColoredGraph& g, const std::vector<CrossingPair>& pairs, int k, const Deadline& deadline)
      : g_(g), pairs_(pairs), k_(k), deadline_(deadline), used_(g.num_edges(), 0) {}

  void run(int worker, int stride) {
    const int np = static_cast<int>(pairs_.size());
    if (k_ == 0) {
      if (worker == 0) visit();
      return;
    }
    for (int i = worker; i < np && !done(); i += stride) extend(i);
  }

  std::optional<std::vector<int>> found;
  std::optional<Drawing> drawing;
  long long tested = 0;
  bool timed_out = false;

 private:
  bool done() const { return found || timed_out; }

  void extend(int i) {
    const CrossingPair& p = pairs_[i];
    if (used_[p.first] || used_[p.second]) return;
    used_[p.first] = used_[p.second] = 1;
    chosen_.push_back(i);
    if (static_cast<int>(chosen_.size()) == k_) {
      visit();
    } else {
      const int np = static_cast<int>(pairs_.size());
      const int remaining = k_ - static_cast<int>(chosen_.size());
      for (int j = i + 1; j + remaining <= np && !done(); ++j) extend(j);
    }
    chosen_.pop_back();
    used_[p.first] = used_[p.second] = 0;
  }

  void visit() {
    if ((++tested & 255) == 0 && deadline_.passed()) {
      timed_out = true;
      return;
    }
    std::vector<CrossingPair> matching;
    for (int i : chosen_) matching.push_back(pairs_[i]);
    if (auto d = realize_matching(g_, matching)) {
      found = chosen_;
      drawing = std::move(d);
    }
  }

  const ColoredGraph& g_;
  const std::vector<CrossingPair>& pairs_;
  int k_;
  const Deadline& deadline_;
  std::vector<char> used_;
  std::vector<int> chosen_;
};

std::optional<BoundVerdict> bound_refutation(const ColoredGraph& g, bool use_beta) {
  std::optional<BoundVerdict> best;
  for (const BoundVerdict& b : bound_check(g)) {
    if (!certifies_non_one_planar(b)) continue;
    if (!use_beta && b.bound_name == BoundName::BipartiteOnePlanarBeta) continue;
    if (!best || b.max_edges < best->max_edges) best = b;
  }
  return best;
}

}  // namespace

std::vector<CrossingPair> disjoint_edge_pairs(const SimpleGraph& g) {
  std::vector<CrossingPair> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& a = g.edge(e);
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const Edge& b = g.edge(f);
      if (!a.has(b.u) && !a.has(b.v)) out.push_back({e, f});
    }
  }
  return out;
}

int search_start_size(const ColoredGraph& g) {
  const int v = g.num_vertices();
  if (v < 3) return 0;
  const int excess = g.num_edges() - (2 * v - 4);
  return excess <= 0 ? 0 : (excess + 1) / 2;
}

std::optional<Drawing> realize_matching(const ColoredGraph& g, const std::vector<CrossingPair>& matching) {
  const int n = g.num_vertices();
  const int t = static_cast<int>(matching.size());
  std::vector<int> crossing_of(g.num_edges(), -1);
  for (int c = 0; c < t; ++c) {
    for (EdgeId e : {matching[c].first, matching[c].second}) {
      if (e < 0 || e >= g.num_edges() || crossing_of[e] >= 0) return std::nullopt;
      crossing_of[e] = c;
    }
    const Edge& a = g.edge(matching[c].first);
    const Edge& b = g.edge(matching[c].second);
    if (a.has(b.u) || a.has(b.v)) return std::nullopt;
  }
  // Planarization edges, each remembering its segment id.
  std::vector<Edge> pedges;
  std::vector<int> segment;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (crossing_of[e] < 0) {
      pedges.push_back(ed);
      segment.push_back(2 * e);
    } else {
      const NodeId dummy = n + crossing_of[e];
      pedges.push_back({ed.u, dummy});
      segment.push_back(2 * e);
      pedges.push_back({dummy, ed.v});
      segment.push_back(2 * e + 1);
    }
  }
  const SimpleGraph plan(n + t, pedges);
  auto order = planar_edge_order(plan);
  if (!order) return std::nullopt;
  Rotation rotation(n + t);
  for (NodeId x = 0; x < n + t; ++x)
    for (int pe : (*order)[x]) rotation[x].push_back(make_dart(segment[pe], pedges[pe].u == x ? 0 : 1));
  for (int c = 0; c < t; ++c) {
    const auto& list = rotation[n + c];
    // The embedding found may route both halves of one edge next to each
    // other; such a dummy is a touching point, not a crossing.
    if (dart_edge(list[0]) != dart_edge(list[2])) return std::nullopt;
  }
  return build_drawing(g, matching, std::move(rotation));
}

DecideResult decide_one_planar(const ColoredGraph& g, const SearchOptions& options) {
  DecideResult result;
  if (auto bound = bound_refutation(g, options.use_beta_bound)) {
    Refutation r;
    r.kind = Refutation::Kind::Bound;
    r.bound = bound;
    r.complete = true;
    result.outcome = r;
    return result;
  }
  const Deadline deadline(options.timeout_seconds);
  const auto pairs = disjoint_edge_pairs(g.graph());
  const int start = search_start_size(g);
  result.start_size = start;
  const int natural_max = g.num_edges() / 2;
  const int last = options.max_crossings ? std::min(*options.max_crossings, natural_max) : natural_max;
  const int jobs = std::max(1, options.jobs);

  for (int k = start; k <= last; ++k) {
    std::vector<Layer> layers;
    layers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) layers.emplace_back(g, pairs, k, deadline);
    if (jobs == 1) {
      layers[0].run(0, 1);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back([&, w] { layers[w].run(w, jobs); });
      for (auto& th : threads) th.join();
    }
    const Layer* best = nullptr;
    bool timed_out = false;
    long long tested = 0;
    for (const Layer& l : layers) {
      tested += l.tested;
      timed_out = timed_out || l.timed_out;
      if (l.found && (!best || *l.found < *best->found)) best = &l;
    }
    // A worker that timed out may have missed a smaller witness than another
    // worker's, so a witness only counts when nobody timed out.
    if (best && !timed_out) {
      result.outcome = OnePlanarWitness{best->drawing->crossings(), *best->drawing};
      return result;
    }
    if (timed_out) {
      result.outcome = SearchTimeout{k - 1};
      return result;
    }
    result.matchings_exhausted += tested;
  }
  Refutation r;
  r.kind = Refutation::Kind::Exhausted;
  r.searched_up_to = last;
  r.complete = last == natural_max;
  result.outcome = r;
  return result;
}

int min_one_planar_crossings(const ColoredGraph& g, const SearchOptions& options) {
  const DecideResult r = decide_one_planar(g, options);
  if (const auto* w = r.witness()) return w->crossings();
  if (const auto* ref = r.refutation()) {
    if (ref->kind == Refutation::Kind::Bound) {
      throw Error(ErrorCode::NotOnePlanar, "edge count " + std::to_string(g.num_edges()) + " exceeds " +
                                               std::string(to_string(ref->bound->bound_name)) + " bound " +
                                               std::to_string(ref->bound->max_edges));
    }
    throw Error(ErrorCode::NotOnePlanar, "no 1-planar drawing with at most " + std::to_string(ref->searched_up_to) +
                                             " crossing pairs" + (ref->complete ? "" : " (search capped)"));
  }
  throw Error(ErrorCode::Timeout,
              "search exhausted matchings up to size " + std::to_string(r.timeout()->largest_exhausted));
}

BetaSearchResult beta_exhaustive(int v, const BetaSearchOptions& options) {
  if (v < 4) throw Error(ErrorCode::DomainError, "beta is defined for v >= 4, got " + std::to_string(v));
  if (v > options.max_v) {
    throw Error(ErrorCode::DomainError,
                "v=" + std::to_string(v) + " exceeds the exhaustive ceiling " + std::to_string(options.max_v));
  }
  BetaSearchResult out;
  out.v = v;
  const Deadline deadline(options.timeout_seconds);
  const int top = (v / 2) * ((v + 1) / 2);
  for (int m = top; m >= 0; --m) {
    BetaLogEntry entry;
    entry.edges = m;
    std::set<CanonicalForm> seen;
    std::optional<ColoredGraph> witness_graph;
    std::optional<OnePlanarWitness> witness;
    for (int a = 1; a <= v / 2 && !witness; ++a) {
      const int b = v - a;
      if (a * b < m) continue;
      const ColoredGraph full = complete_bipartite(a, b);
      std::vector<int> pick(m);
      for (int i = 0; i < m; ++i) pick[i] = i;
      const int total = a * b;
      while (!witness) {
        std::vector<Edge> edges;
        for (int i : pick) edges.push_back(full.edge(i));
        ColoredGraph cand(SimpleGraph(v, std::move(edges)), full.colors());
        if (seen.insert(canonical_form(cand)).second) {
          ++entry.classes;
          SearchOptions so;
          so.use_beta_bound = false;
          so.jobs = options.jobs;
          if (deadline.at) {
            so.timeout_seconds =
                std::max(0.0, std::chrono::duration<double>(*deadline.at - Clock::now()).count());
          }
          const DecideResult r = decide_one_planar(cand, so);
          if (const auto* w = r.witness()) {
            witness = *w;
            witness_graph = cand;
          } else if (r.refutation()) {
            ++entry.refuted;
          } else {
            ++entry.timed_out;
          }
        }
        // Next m-combination of 0..total-1.
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    entry.witness_found = witness.has_value();
    out.log.push_back(entry);
    if (witness) {
      out.beta = m;
      out.witness = std::move(witness);
      out.witness_graph = std::move(witness_graph);
      return out;
    }
    if (entry.timed_out > 0) {
      out.timed_out = true;
      return out;
    }
  }
  return out;
}

}  // namespace biplane
