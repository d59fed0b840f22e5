#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"
#include "graphmon/smith.hpp"

namespace graphmon::testing {

using Rng = std::mt19937_64;

// Fixtures.
Graph mixed_graph();   // a: 2 loops; b->a, b->c; c: 2 loops, c->d
Graph o2_graph();      // v with two loops
Graph ladder_graph();  // p0->p1, p0->x, p1->p2, p1->x
Graph split_graph();   // v with two parallel edges to w
Graph make_graph(std::vector<std::string> names,
                 std::vector<std::pair<std::string, std::string>> edges);

/// Weakly connected graphs with 1..max_vertices vertices and at most
/// max_edges edges (loops and parallel edges allowed), one per
/// isomorphism class, in a fixed order.
std::vector<Graph> connected_graphs(std::size_t max_vertices, std::size_t max_edges);
/// connected_graphs(3, 4) plus the mixed graph.
const std::vector<Graph>& corpus();

// Oracles, written independently of the library routines they check.

/// Every hereditary subset, by filtering all subsets edge by edge.
std::vector<VertexSet> brute_hereditary_sets(const Graph& g);
/// Cofinality straight from maximal paths: for every v, every path that
/// ends in a sink or runs forever meets a vertex reachable from v.
bool cofinal_by_paths(const Graph& g);
/// Fraction-free Gaussian elimination.
Integer bareiss_determinant(const IntMatrix& m);
/// Rewrites randomly chosen occurrences until only sinks remain.
Element random_normal_form(const Graph& g, Element x, Rng& rng);
/// Number of paths of length `len` ending at v, by walking all paths.
Integer brute_path_count(const Graph& g, std::size_t len, Vertex v);

// Random elements and steps.
Element random_element(std::size_t universe, std::size_t min_size,
                       std::size_t max_size, Rng& rng);
/// x ->1 y at a random non-sink of the support.
std::optional<Element> forward_step(const Graph& g, const Element& x, Rng& rng);
/// A random y with y ->1 x.
std::optional<Element> backward_step(const Graph& g, const Element& x, Rng& rng);

}  // namespace graphmon::testing
