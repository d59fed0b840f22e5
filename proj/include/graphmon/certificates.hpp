#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"
#include "graphmon/k_theory.hpp"

namespace graphmon {

/// Why two elements of F_E cannot be congruent. Every kind is an invariant
/// of single rewrite steps, so a differing value rules out a common reduct
/// at any depth.
struct Certificate {
  enum class Kind {
    zero,             // exactly one side is the zero element
    support_closure,  // saturated hereditary closures of the supports differ
    group_image,      // images in a Grothendieck group of a sub-quotient differ
    exhausted,        // both reduct sets are finite, fully explored, disjoint
  };

  Kind kind = Kind::zero;
  /// Non-empty when the claim is about congruence modulo the order-ideal of
  /// this saturated hereditary set.
  VertexSet base;
  VertexSet lhs_closure;
  VertexSet rhs_closure;
  /// For group_image: the sub-quotient is (within / killed).
  VertexSet within;
  VertexSet killed;
  GroupElement lhs_image;
  GroupElement rhs_image;
  /// For exhausted: sizes of the two reduct sets.
  std::size_t lhs_reducts = 0;
  std::size_t rhs_reducts = 0;
};

std::string to_string(Certificate::Kind kind);
std::string describe(const Graph& g, const Certificate& c);

/// Invariants of the congruence, precomputed per graph.
///
/// The battery compares, in order: images in the Grothendieck group of the
/// whole graph and its quotients, the closures C = saturate(tree(supp x)),
/// and images in the Grothendieck group of every sub-quotient C / H' with
/// H' a saturated hereditary set strictly inside C. Sub-quotient groups are cokernels of the relation rows of C with the
/// vertices of H' killed, so nothing here goes through quotient graphs.
class Invariants {
 public:
  /// Lattice-based tables are built only when the graph has at most
  /// `vertex_cap` vertices and at most `max_sets` saturated hereditary
  /// sets; otherwise the battery falls back to (C / empty) computed on
  /// demand.
  Invariants(const Graph& g, std::size_t vertex_cap = 20,
             std::size_t max_sets = 64);

  const Graph& graph() const noexcept { return g_; }
  bool has_tables() const noexcept { return tables_; }
  std::size_t vertex_count() const noexcept { return n_; }

  VertexSet closure(const Element& x) const;
  /// Saturated hereditary closure of supp(x) together with `base`.
  VertexSet closure(const Element& x, const VertexSet& base) const;

  std::optional<Certificate> separate(const Element& x, const Element& y) const;
  /// Invariants of congruence modulo the order-ideal generated by the
  /// hereditary saturated set `base`.
  std::optional<Certificate> separate_modulo(const Element& x,
                                             const Element& y,
                                             const VertexSet& base) const;

  /// Independently recomputes the claim in `c` for (x, y). Exhaustion
  /// claims need a search and are checked by WordProblem instead.
  bool verify(const Certificate& c, const Element& x, const Element& y) const;

  /// Saturated hereditary sets (canonical order) when tables are built.
  const std::vector<VertexSet>& lattice() const noexcept { return sets_; }

 private:
  struct Subquotient {
    std::uint64_t killed;
    VertexSet killed_set;
    GroupPresentation group;
  };
  struct Level {
    std::uint64_t within;
    VertexSet within_set;
    std::vector<Subquotient> below;
  };

  std::uint64_t closure_mask(std::uint64_t support) const;
  std::uint64_t support_mask(const Element& x) const;
  std::optional<Certificate> compare_in(const Element& x, const Element& y,
                                        const VertexSet& closure,
                                        const VertexSet& base) const;

  Graph g_;
  std::size_t n_;
  bool masks_ = false;   // n <= 64: closures through bit masks
  bool tables_ = false;
  std::vector<std::uint64_t> tree_;
  std::vector<std::uint64_t> out_;
  std::vector<VertexSet> sets_;
  std::vector<Level> levels_;
};

}  // namespace graphmon
