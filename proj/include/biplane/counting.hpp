#pragma once

#include <cstdint>
#include <vector>

namespace biplane {

/// Exact non-negative fraction kept unreduced so derivations print the same
/// numbers a hand computation would (84/10, not 42/5).
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t ceil() const { return (num + den - 1) / den; }
  /// a/b > c exactly, by cross-multiplication.
  bool greater_than(std::int64_t c) const { return num > c * den; }
};

std::int64_t binomial(int n, int k);

/// K_{3,m} has at least base_lb crossings; count them over all copies of
/// K_{3,m} inside K_{3,n}.
struct CrStep {
  int base_m = 0;
  std::int64_t base_lb = 0;
  int host_n = 0;
  std::int64_t copies = 0;        // C(n, m)
  std::int64_t multiplicity = 0;  // C(n-2, m-2): copies sharing one crossing
  Fraction bound;                 // base_lb * copies / multiplicity
  std::int64_t resulting_lb = 0;  // ceil(bound)
};

struct CrBoundDerivation {
  std::vector<CrStep> steps;
  std::int64_t final_lb() const { return steps.empty() ? 0 : steps.back().resulting_lb; }
};

/// One step. Requires 3 <= m < n and lb >= 0; throws DomainError otherwise.
CrStep cr_counting_step(int m, std::int64_t lb, int n);
CrBoundDerivation cr_counting_bound(int m, std::int64_t lb, int n);

/// Starting from cr(K_{3,m}) >= lb, applies one step per host size in order.
CrBoundDerivation cr_counting_chain(int m, std::int64_t lb, const std::vector<int>& hosts);

struct K37Refutation {
  int vertices = 10;
  int edges = 21;
  int dense_threshold = 20;  // 3v - 10; above it every degree-d vertex has ceil(d/3) simple edges
  bool dense = true;
  int high_degree = 7;
  int high_degree_vertices = 3;
  int simple_floor_per_vertex = 3;
  int simple_floor = 9;
  int max_crossings = 6;  // (e - simple_floor) / 2
  CrBoundDerivation derivation;  // 3:1 -> 5 -> 7
  Fraction lower_bound;          // 84/10
  std::int64_t lower_bound_ceil = 9;
  bool contradiction = true;  // lower_bound > max_crossings
};

/// Certificate that K_{3,7} is not 1-planar. Every number is computed.
K37Refutation refute_k37();

}  // namespace biplane
