#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"

namespace graphmon {

/// A vertex set known to be hereditary and saturated in its graph.
class HSatSet {
 public:
  /// Throws DomainError unless s is hereditary and saturated in g.
  HSatSet(const Graph& g, VertexSet s);

  const VertexSet& vertices() const noexcept { return set_; }
  operator const VertexSet&() const noexcept { return set_; }
  bool operator==(const HSatSet&) const = default;

 private:
  VertexSet set_;
};

bool is_hsat(const Graph& g, const VertexSet& s);

/// Largest table the lattice report will materialise (sets, not cells).
inline constexpr std::size_t kMaxLatticeReport = 1024;

struct LatticeReport {
  /// Canonical order: cardinality, then lexicographic members.
  std::vector<VertexSet> sets;
  /// Covering pairs (i, j): sets[i] is a maximal proper subset of sets[j].
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  /// join[i][j] = index of saturate(sets[i] | sets[j]); meet is intersection.
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::vector<std::size_t>> meet;

  std::size_t index_of(const VertexSet& s) const;
};

/// All saturated hereditary subsets by subset filtering, parallelised over
/// subset masks with OpenMP. Throws ResourceLimit when the graph has more
/// than `vertex_cap` vertices (cap at most 30).
std::vector<VertexSet> hsat_sets(const Graph& g, std::size_t vertex_cap = 20);
/// Serial reference for hsat_sets.
std::vector<VertexSet> hsat_sets_serial(const Graph& g,
                                        std::size_t vertex_cap = 20);

/// hsat_sets plus the Hasse diagram and join/meet tables. Throws
/// ResourceLimit when the lattice exceeds kMaxLatticeReport elements.
LatticeReport enumerate_hsat(const Graph& g, std::size_t vertex_cap = 20);

/// supp(x) is contained in h.
bool order_ideal_membership(const Graph& g, const Element& x,
                            const VertexSet& h);

/// Vertices outside h; edges whose range lies outside h.
Graph quotient_graph(const Graph& g, const VertexSet& h);
/// Vertices of h; edges whose source lies in h.
Graph restriction_graph(const Graph& g, const VertexSet& h);
/// restriction to `upper`, then quotient by `lower` (lower within upper).
Graph subquotient_graph(const Graph& g, const VertexSet& lower,
                        const VertexSet& upper);

/// Projection F_E -> F_G onto the quotient graph's vertices.
Element project_to_quotient(const Graph& g, const VertexSet& h,
                            const Graph& quotient, const Element& x);

enum class SimpleKind { sink, cycle_no_exit, loops_with_exit };

struct SimpleClass {
  SimpleKind kind;
  std::optional<Vertex> sink;    // SinkType witness
  std::optional<Path> loop;      // CycleNoExitType witness
};

std::string to_string(SimpleKind kind);

/// Trichotomy for cofinal finite graphs. Throws DomainError otherwise.
SimpleClass classify_simple(const Graph& g);

struct SeriesStep {
  VertexSet set;
  Graph quotient;  // sub-quotient between this set and its predecessor
  SimpleClass kind;
};

struct CompositionSeries {
  std::vector<VertexSet> chain;  // starts with the empty set
  std::vector<SeriesStep> steps; // one per proper inclusion
};

/// Greedy chain: from the current set, step to a covering set of least
/// cardinality, ties broken lexicographically.
CompositionSeries composition_series(const Graph& g,
                                     std::size_t vertex_cap = 20);

/// Checks a chain (empty set optional as first entry): every entry
/// saturated hereditary, strictly increasing, ending at all vertices, and
/// every consecutive sub-quotient cofinal. `why` receives the first failure.
bool validate_series(const Graph& g, const std::vector<VertexSet>& chain,
                     std::string* why = nullptr);

}  // namespace graphmon
