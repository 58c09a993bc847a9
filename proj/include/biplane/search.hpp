#pragma once

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "biplane/drawing.hpp"
#include "biplane/graph.hpp"

namespace biplane {

// ---------------------------------------------------------------------------
// Planarity

/// Edge order around each vertex of a planar embedding, or nullopt when the
/// graph is not planar. Backed by the Boyer-Myrvold test.
std::optional<std::vector<std::vector<EdgeId>>> planar_edge_order(const SimpleGraph& g);

/// Crossing-free rotation system (darts 4e / 4e+1) of a planar graph, checked
/// against Euler's formula before it is returned. nullopt means NonPlanar.
std::optional<Rotation> planarity_test(const SimpleGraph& g);

/// Crossing-free drawing of a planar bipartite graph; nullopt when non-planar.
std::optional<Drawing> planar_drawing(const ColoredGraph& g);

// ---------------------------------------------------------------------------
// Canonical forms

struct CanonicalForm {
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> edges;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographically smallest relabelled (colors, sorted edge list) over all
/// leaves of an individualization-refinement tree seeded with (color, degree).
/// With allow_color_swap the two color classes may trade names.
CanonicalForm canonical_form(const ColoredGraph& g, bool allow_color_swap = true);

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, bool allow_color_swap = true);

// ---------------------------------------------------------------------------
// 1-planarity search

struct SearchOptions {
  std::optional<int> max_crossings;
  std::optional<double> timeout_seconds;
  int jobs = 1;
  /// Reject immediately when e(G) exceeds beta(v). Disabled when the search is
  /// itself used to confirm beta.
  bool use_beta_bound = true;
};

struct OnePlanarWitness {
  std::vector<CrossingPair> matching;
  Drawing drawing;

  int crossings() const { return static_cast<int>(matching.size()); }
};

struct Refutation {
  enum class Kind { Bound, Exhausted };
  Kind kind = Kind::Exhausted;
  std::optional<BoundVerdict> bound;  // Kind::Bound
  int searched_up_to = -1;            // largest matching size fully rejected
  bool complete = false;              // every possible matching size covered
};

struct SearchTimeout {
  int largest_exhausted = -1;
};

struct DecideResult {
  std::variant<OnePlanarWitness, Refutation, SearchTimeout> outcome;
  int start_size = 0;
  long long matchings_exhausted = 0;  // matchings rejected in fully searched sizes

  const OnePlanarWitness* witness() const { return std::get_if<OnePlanarWitness>(&outcome); }
  const Refutation* refutation() const { return std::get_if<Refutation>(&outcome); }
  const SearchTimeout* timeout() const { return std::get_if<SearchTimeout>(&outcome); }
};

/// All unordered pairs of edges with four distinct endpoints, in lexicographic
/// order of (smaller id, larger id).
std::vector<CrossingPair> disjoint_edge_pairs(const SimpleGraph& g);

/// Smallest matching size the search starts from: ceil((e - planar_max) / 2),
/// planar_max = 2v - 4 (bipartite input).
int search_start_size(const ColoredGraph& g);

/// Enumerates sets of edge-disjoint crossing pairs by increasing size and
/// tests each planarization for planarity. The first success is a witness with
/// the minimum number of crossings over all 1-planar drawings.
DecideResult decide_one_planar(const ColoredGraph& g, const SearchOptions& options = {});

/// Planarizes g along `matching` and returns a drawing when the result is
/// planar with every crossing transversal.
std::optional<Drawing> realize_matching(const ColoredGraph& g, const std::vector<CrossingPair>& matching);

/// The 1-planar crossing number: minimum crossing pairs over 1-planar
/// drawings. Throws NotOnePlanar when refuted, Timeout when undecided.
int min_one_planar_crossings(const ColoredGraph& g, const SearchOptions& options = {});

struct BetaLogEntry {
  int edges = 0;
  int classes = 0;
  int refuted = 0;
  int timed_out = 0;
  bool witness_found = false;
};

struct BetaSearchOptions {
  int max_v = 8;
  std::optional<double> timeout_seconds;
  int jobs = 1;
};

struct BetaSearchResult {
  int v = 0;
  std::optional<int> beta;
  std::optional<ColoredGraph> witness_graph;
  std::optional<OnePlanarWitness> witness;
  std::vector<BetaLogEntry> log;
  bool timed_out = false;
};

/// Largest m such that some bipartite graph on v vertices with m edges is
/// 1-planar, found by enumerating graphs up to isomorphism from the complete
/// bipartite maximum downwards.
BetaSearchResult beta_exhaustive(int v, const BetaSearchOptions& options = {});

}  // namespace biplane
