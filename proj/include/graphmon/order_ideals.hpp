#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"
#include "graphmon/word_problem.hpp"

namespace graphmon {

/// Whether x lies in the order-ideal generated by the classes of the
/// vertices in s: x <= k * (sum of s) for some k up to `max_multiplier`.
/// Unknown when neither a witness nor a refutation is found.
Verdict in_generated_ideal(const WordProblem& wp, const Element& x,
                           const VertexSet& s, std::size_t max_multiplier);

/// Vertices whose class lies in the order-ideal generated by s.
struct IdealVertices {
  VertexSet members;
  bool complete = true;  // false when some vertex was undecided
};
IdealVertices ideal_vertices(const WordProblem& wp, const VertexSet& s,
                             std::size_t max_multiplier);

/// Checks that saturated hereditary sets and order-ideals correspond: for
/// every vertex subset S, the vertices of the ideal generated by S form
/// hsat_closure(S); every saturated hereditary H is recovered from its
/// ideal; and a proper inclusion of sets gives a proper inclusion of
/// ideals. Throws ResourceLimit when a membership stays undecided.
bool phi_psi_roundtrip(const WordProblem& wp, std::string* why = nullptr);

/// Class counts for the congruence modulo the ideal of h on F_E and for the
/// quotient graph's monoid, over elements of size at most size_bound.
struct QuotientComparison {
  VertexSet h;
  std::size_t monoid_classes = 0;    // F_E modulo the ideal of h
  std::size_t quotient_classes = 0;  // F_G for the quotient graph G
  bool bijective = false;            // projection induces a bijection
  bool undecided = false;
};

QuotientComparison compare_quotient(const WordProblem& wp, const VertexSet& h,
                                    std::size_t size_bound,
                                    std::optional<std::size_t> depth = std::nullopt);

}  // namespace graphmon
