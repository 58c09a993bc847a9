#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biplane/drawing.hpp"

namespace biplane {

struct QuadrangulationReport {
  bool is_quadrangulation = false;  // every face a simple 4-cycle
  bool is_biconnected = false;
  std::vector<Face> faces;
  std::vector<std::string> failures;
};

/// Face check on a crossing-free drawing.
QuadrangulationReport check_quadrangulation(const Drawing& plane);

struct FaceRightEdges {
  Dart face = 0;         // face id
  int right_edges = 0;
  bool opposite = true;  // meaningful when right_edges == 2
  bool violation = false;
};

/// Per face of G', how many Right edges bound it and whether two of them sit
/// on opposite sides. More than two, or two adjacent ones, is a violation.
std::vector<FaceRightEdges> right_edge_positions(const GPrime& gp);

enum class PartKind { Strip, Ring };
std::string_view to_string(PartKind k);

struct Part {
  PartKind kind = PartKind::Strip;
  std::vector<Dart> faces;                    // face ids, in order along the part
  std::vector<std::vector<Dart>> boundaries;  // dart cycles (G' darts)
  std::vector<VertexId> corners;              // strips only
};

struct PartsDecomposition {
  std::vector<Part> parts;  // ordered by smallest face id
  std::vector<std::pair<Dart, Dart>> F;            // faces sharing a Right edge
  std::vector<std::vector<EdgeId>> P;              // simple-edge cycles (G' edge ids)
  std::vector<std::pair<int, int>> L;              // parts with congruent boundaries
  int boundary_length = 0;                         // common to all boundaries
  int strip_faces = 0;                             // k of the first strip
};

/// Cuts G' along its simple edges. Throws NotExtremalStructure naming the
/// first invariant that fails.
PartsDecomposition decompose(const GPrime& gp);

struct CornerCount {
  VertexId vertex = 0;
  int corners = 0;
  int expected = 0;  // 4 - d_{G'}(x)
};

std::vector<CornerCount> corner_census(const PartsDecomposition& decomp, const GPrime& gp);

struct Lemma2Hit {
  int crossing_x = 0;
  int crossing_y = 0;
  VertexId u = 0;  // common end of the two left edges
  VertexId v = 0;  // common end of the two right edges
  EdgeId left_x = 0, right_x = 0, left_y = 0, right_y = 0;
};

/// Pairs of crossings whose left edges share an end u and whose right edges
/// share an end v of the other color.
std::vector<Lemma2Hit> lemma2_scan(const Drawing& d);

struct StructureReport {
  int v = 0;
  int e = 0;
  int t = 0;
  int p = 0;
  int gprime_edges = 0;
  bool is_quadrangulation = false;
  bool is_biconnected = false;
  int max_degree_gprime = 0;
  bool two_simple_edges_each = false;
  int right_edge_violations = 0;
  std::optional<PartsDecomposition> decomposition;
  std::vector<CornerCount> corner_census;
  bool corner_census_matches = false;
  std::vector<Lemma2Hit> lemma2_hits;
  bool parity_conclusion = false;  // v = (2k+2) e(L), asserted only when everything above holds
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Everything above on one drawing.
StructureReport analyze(const Drawing& d);

}  // namespace biplane
