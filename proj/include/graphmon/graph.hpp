#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphmon {

/// Index of a vertex in the canonical (lexicographic by name) order.
using Vertex = std::size_t;
/// Index of an edge in declaration order.
using EdgeIndex = std::size_t;

struct Edge {
  Vertex source;
  Vertex range;
  bool operator==(const Edge&) const = default;
};

/// Subset of the vertices of a graph with `universe` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet all(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_[v]; }
  void insert(Vertex v) { bits_.at(v) = true; }
  void erase(Vertex v) { bits_.at(v) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Vertex> members() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<bool> bits_;
};

/// Cardinality first, then lexicographic member lists; the order used for
/// every emitted collection of vertex sets.
bool canonical_less(const VertexSet& lhs, const VertexSet& rhs);

/// Finite directed multigraph with named vertices. Parallel edges are kept
/// individually; edge indices follow declaration order.
class Graph {
 public:
  Graph() = default;

  /// Validates names (nonempty, distinct, no whitespace or `#,;+*`) and
  /// edge endpoints; throws ParseError on violation.
  Graph(std::vector<std::string> vertex_names,
        const std::vector<std::pair<std::string, std::string>>& edges);

  /// Builds from canonical indices. `names` must already be sorted.
  static Graph from_indices(std::vector<std::string> names,
                            std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Throws DomainError naming the unknown vertex.
  Vertex index_of(std::string_view name) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  /// Edges emitted by v, in index order.
  std::span<const EdgeIndex> out_edges(Vertex v) const {
    return out_.at(v);
  }
  bool is_sink(Vertex v) const { return out_.at(v).empty(); }
  /// Number of edges from v to w.
  std::size_t adjacency(Vertex v, Vertex w) const;
  bool is_acyclic() const;

  VertexSet vertex_set(std::span<const std::string> names) const;
  std::string format_set(const VertexSet& s) const;

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  void index_edges();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
};

/// A path given by its edge indices; length-0 paths carry only a vertex.
class Path {
 public:
  Path() = default;
  static Path trivial(Vertex v);
  /// Throws DomainError when consecutive edges do not compose.
  Path(const Graph& g, std::vector<EdgeIndex> edges);

  std::span<const EdgeIndex> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  Vertex source() const noexcept { return source_; }
  Vertex range() const noexcept { return range_; }
  bool is_loop() const noexcept { return !edges_.empty() && source_ == range_; }

  bool operator==(const Path&) const = default;

 private:
  std::vector<EdgeIndex> edges_;
  Vertex source_ = 0;
  Vertex range_ = 0;
};

std::string format_path(const Graph& g, const Path& p);

// Graph predicates and constructions.

VertexSet sinks(const Graph& g);
/// All vertices reachable from v, v included.
VertexSet tree(const Graph& g, Vertex v);
/// Union of the trees of the members of s.
VertexSet hereditary_closure(const Graph& g, const VertexSet& s);
bool is_hereditary(const Graph& g, const VertexSet& s);
bool is_saturated(const Graph& g, const VertexSet& s);
/// Least saturated superset of a hereditary set. Throws DomainError when s
/// is not hereditary.
VertexSet saturate(const Graph& g, const VertexSet& s);
/// saturate(hereditary_closure(s)): the saturated hereditary set generated
/// by an arbitrary subset.
VertexSet hsat_closure(const Graph& g, const VertexSet& s);

/// Complete subgraph containing (x_vertices, x_edges): every source in
/// x_vertices keeps all of its edges. Throws DomainError when the input is
/// not a subgraph.
Graph completion(const Graph& g, const VertexSet& x_vertices,
                 std::span<const EdgeIndex> x_edges);
/// Vertex subset together with the kept edge indices of g.
struct Subgraph {
  VertexSet vertices;
  std::vector<EdgeIndex> edges;
};
Subgraph completion_subgraph(const Graph& g, const VertexSet& x_vertices,
                             std::span<const EdgeIndex> x_edges);
bool is_complete_subgraph(const Graph& g, const Subgraph& sub);
/// Induced graph object for a subgraph, edges kept in g's order.
Graph to_graph(const Graph& g, const Subgraph& sub);

bool is_cofinal(const Graph& g);

/// Simple loops, one per cyclic rotation, rotated to start at their least
/// vertex (ties by least first edge index); sorted by vertex sequence then
/// edge sequence.
std::vector<Path> simple_loops(const Graph& g);
/// Throws DomainError when `loop` is not a loop of g.
bool has_exit(const Graph& g, const Path& loop);

}  // namespace graphmon
