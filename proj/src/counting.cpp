#include "biplane/counting.hpp"

#include <string>

#include "biplane/error.hpp"

namespace biplane {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CrStep cr_counting_step(int m, std::int64_t lb, int n) {
  if (m < 3 || m >= n || lb < 0) {
    throw Error(ErrorCode::DomainError, "counting step needs 3 <= m < n and lb >= 0, got m=" + std::to_string(m) +
                                            " n=" + std::to_string(n) + " lb=" + std::to_string(lb));
  }
  CrStep s;
  s.base_m = m;
  s.base_lb = lb;
  s.host_n = n;
  // A crossing of K_{3,n} involves two of the n vertices, so it survives in
  // every K_{3,m} that keeps both: C(n-2, m-2) of them.
  s.copies = binomial(n, m);
  s.multiplicity = binomial(n - 2, m - 2);
  s.bound = {lb * s.copies, s.multiplicity};
  s.resulting_lb = s.bound.ceil();
  return s;
}

CrBoundDerivation cr_counting_bound(int m, std::int64_t lb, int n) {
  return {{cr_counting_step(m, lb, n)}};
}

CrBoundDerivation cr_counting_chain(int m, std::int64_t lb, const std::vector<int>& hosts) {
  CrBoundDerivation d;
  for (int n : hosts) {
    d.steps.push_back(cr_counting_step(m, lb, n));
    m = n;
    lb = d.steps.back().resulting_lb;
  }
  return d;
}

K37Refutation refute_k37() {
  K37Refutation r;
  r.vertices = 3 + 7;
  r.edges = 3 * 7;
  r.dense_threshold = 3 * r.vertices - 10;
  r.dense = r.edges > r.dense_threshold;
  r.high_degree = 7;
  r.high_degree_vertices = 3;
  r.simple_floor_per_vertex = (r.high_degree + 2) / 3;
  // The three degree-7 vertices lie in one color class, so their simple edges
  // are distinct.
  r.simple_floor = r.high_degree_vertices * r.simple_floor_per_vertex;
  r.max_crossings = (r.edges - r.simple_floor) / 2;
  r.derivation = cr_counting_chain(3, 1, {5, 7});
  r.lower_bound = r.derivation.steps.back().bound;
  r.lower_bound_ceil = r.lower_bound.ceil();
  r.contradiction = r.dense && r.lower_bound.greater_than(r.max_crossings);
  return r;
}

}  // namespace biplane
