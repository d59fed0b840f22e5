#include "graphmon/path_counts.hpp"

namespace graphmon {

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

namespace {

// out = lhs * rhs for square matrices; rows are independent.
IntMatrix multiply_parallel(const IntMatrix& lhs, const IntMatrix& rhs) {
  const auto n = static_cast<long>(lhs.rows());
  IntMatrix out(lhs.rows(), rhs.cols());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Integer& a = lhs(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Integer>> path_counts(const Graph& g,
                                              std::size_t level) {
  const std::size_t n = g.vertex_count();
  const IntMatrix a = adjacency_matrix(g);
  std::vector<std::vector<Integer>> counts(level + 1, std::vector<Integer>(n));
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t i = 0; i <= level; ++i) {
    if (i > 0) power = multiply_parallel(power, a);
    auto& row = counts[i];
#pragma omp parallel for schedule(static)
    for (long v = 0; v < static_cast<long>(n); ++v) {
      Integer sum = 0;
      for (std::size_t u = 0; u < n; ++u) sum += power(u, v);
      row[v] = std::move(sum);
    }
  }
  return counts;
}

std::vector<std::vector<Integer>> path_counts_serial(const Graph& g,
                                                     std::size_t level) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Integer>> counts(level + 1, std::vector<Integer>(n));
  for (Vertex v = 0; v < n; ++v) counts[0][v] = 1;
  for (std::size_t i = 0; i < level; ++i)
    for (const Edge& e : g.edges()) counts[i + 1][e.range] += counts[i][e.source];
  return counts;
}

}  // namespace graphmon
