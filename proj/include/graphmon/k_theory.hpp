#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"
#include "graphmon/smith.hpp"

namespace graphmon {

/// One row per non-sink vertex v, encoding v - r(v) over the vertex basis.
struct RelationMatrix {
  std::vector<Vertex> row_vertices;
  IntMatrix matrix;
};

RelationMatrix relation_matrix(const Graph& g);

/// Coordinates of a class in Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_k.
/// Torsion coordinates are reduced into [0, d_i).
struct GroupElement {
  std::vector<Integer> free;
  std::vector<Integer> torsion;

  bool is_identity() const;
  auto operator<=>(const GroupElement& other) const {
    if (auto c = compare(free, other.free); c != 0) return c;
    return compare(torsion, other.torsion);
  }
  bool operator==(const GroupElement&) const = default;

 private:
  static std::strong_ordering compare(const std::vector<Integer>& a,
                                      const std::vector<Integer>& b);
};

/// Cokernel of an integer relation lattice inside Z^n, as produced by the
/// Smith form of the relation rows.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Row span of `relations` (k x n) is the kernel of the quotient map.
  explicit GroupPresentation(const IntMatrix& relations);

  std::size_t free_rank() const noexcept { return free_rank_; }
  /// Invariant factors, each >= 2, each dividing the next.
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return transform_.rows(); }
  /// n x n unimodular column transform V; a row vector x maps to x * V.
  const IntMatrix& transform() const noexcept { return transform_; }

  GroupElement image(const Element& x) const;
  GroupElement image_of_vector(const std::vector<Integer>& x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  /// Whether the given elements generate the whole group.
  bool spans(const std::vector<GroupElement>& elems) const;

  std::string format(const GroupElement& x) const;

 private:
  // Coordinates j of x * V for diagonal index j: torsion_pos_ lists those
  // with d_j >= 2, free coordinates are rank_.. n-1.
  IntMatrix transform_;
  std::vector<std::size_t> torsion_cols_;
  std::vector<Integer> torsion_;
  std::size_t rank_ = 0;
  std::size_t free_rank_ = 0;
};

/// Grothendieck group of the graph monoid: cokernel of the relation rows.
GroupPresentation grothendieck_group(const Graph& g);

/// Cokernel of the relation rows of the non-sinks in `within` together with
/// unit rows killing every vertex in `killed` and every vertex outside
/// `within`. With within = all and killed = {} this is grothendieck_group.
GroupPresentation subquotient_group(const Graph& g, const VertexSet& within,
                                    const VertexSet& killed);

GroupElement group_image(const Graph& g, const Element& x);

/// Images of all elements of size <= size_bound. This only
/// under-approximates the positive cone.
std::set<GroupElement> positive_cone_probe(const Graph& g,
                                           std::size_t size_bound);

// ------------------------------------------------------------- filtration

struct FiltrationBlock {
  Vertex vertex;
  Integer size;
  std::size_t stage;
  bool degenerate() const { return sgn(size) == 0; }
};

struct FiltrationTransition {
  Vertex from;
  Vertex to;
  std::size_t multiplicity;
};

/// Block sizes of the level-n algebra in the path-count filtration: a
/// block per sink for every stage below n, then a block per vertex at
/// stage n; transitions A(v, w) for non-sinks v.
struct FiltrationShape {
  std::size_t level = 0;
  std::vector<FiltrationBlock> blocks;
  std::vector<FiltrationTransition> transitions;
};

FiltrationShape matricial_filtration(const Graph& g, std::size_t level);

}  // namespace graphmon
