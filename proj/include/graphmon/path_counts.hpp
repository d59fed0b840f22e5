#pragma once

#include <cstddef>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"
#include "graphmon/smith.hpp"

namespace graphmon {

/// A(v, w): number of edges from v to w.
IntMatrix adjacency_matrix(const Graph& g);

/// counts[i][v] = number of paths of length i ending at v, i = 0..level.
/// Computed from powers of the adjacency matrix (column sums of A^i),
/// parallelised over columns with OpenMP.
std::vector<std::vector<Integer>> path_counts(const Graph& g,
                                              std::size_t level);

/// Serial reference for path_counts: the one-step recursion
/// counts[i+1][w] = sum_v counts[i][v] * A(v, w).
std::vector<std::vector<Integer>> path_counts_serial(const Graph& g,
                                                     std::size_t level);

}  // namespace graphmon
