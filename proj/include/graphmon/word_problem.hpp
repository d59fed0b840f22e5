#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphmon/certificates.hpp"
#include "graphmon/config.hpp"
#include "graphmon/element.hpp"
#include "graphmon/graph.hpp"

namespace graphmon {

enum class Verdict { equal, distinct, unknown };
std::string to_string(Verdict v);

/// Outcome of the word problem for a pair of elements.
struct EqVerdict {
  Verdict verdict = Verdict::unknown;
  /// Equal: common reduct and the traces reaching it from each side.
  Element common;
  RewriteTrace lhs_trace;
  RewriteTrace rhs_trace;
  /// Distinct: the separating invariant.
  std::optional<Certificate> certificate;
  /// Unknown: which budget ran out.
  std::string reason;
};

/// Three-valued answer for the algebraic pre-order x <= y.
struct LeqVerdict {
  enum class Value { yes, no, unknown };
  Value value = Value::unknown;
  /// yes: z with x + z ~ y.
  Element witness;
  /// no: human-readable separating argument.
  std::string certificate;
  std::string reason;
};

/// Word problem solver for one graph. Construction precomputes the
/// certificate battery (and vertex normal forms on acyclic graphs); every
/// query afterwards is const and safe to call concurrently.
class WordProblem {
 public:
  explicit WordProblem(Graph g, Config cfg = {});

  const Graph& graph() const noexcept { return g_; }
  const Config& config() const noexcept { return cfg_; }
  const Invariants& invariants() const noexcept { return inv_; }
  bool acyclic() const noexcept { return acyclic_; }

  /// Equal iff a common reduct is found within `depth` steps per side (or
  /// normal forms agree on acyclic graphs), with traces; Distinct with a
  /// certificate; otherwise Unknown.
  EqVerdict decide(const Element& x, const Element& y,
                   std::optional<std::size_t> depth = std::nullopt) const;
  /// decide() without building traces.
  Verdict compare(const Element& x, const Element& y,
                  std::optional<std::size_t> depth = std::nullopt) const;

  /// Congruence modulo the order-ideal generated by the saturated
  /// hereditary set h: x ~_h y iff x + e ~ y + f for some e, f supported
  /// in h. Decided on F_E directly (no quotient graph).
  Verdict compare_modulo(const Element& x, const Element& y,
                         const VertexSet& h,
                         std::optional<std::size_t> depth = std::nullopt) const;

  LeqVerdict leq(const Element& x, const Element& y,
                 std::optional<std::size_t> depth = std::nullopt) const;

  /// Acyclic graphs only; throws DomainError otherwise.
  Element normal_form(const Element& x) const;

  /// Re-checks an EqVerdict: traces valid and meeting for Equal, the
  /// certificate for Distinct.
  bool verify(const Element& x, const Element& y, const EqVerdict& v) const;

 private:
  void check(const Element& x) const;
  std::size_t budget(std::optional<std::size_t> depth) const {
    return depth.value_or(cfg_.depth);
  }
  RewriteTrace trace_to_normal_form(const Element& x) const;
  /// Non-empty explanation when x <= y is ruled out by an invariant.
  std::string leq_refutation(const Element& x, const Element& y) const;
  Verdict search(const Element& x, const Element& y, std::size_t depth,
                 EqVerdict* out) const;

  // Normal forms in the sub-quotient within / killed, which must be
  // acyclic: one element per vertex of g, zero on `killed`, unused outside
  // `within`.
  struct AcyclicPiece {
    VertexSet within;
    VertexSet killed;
    std::vector<Element> vertex_nf;
  };

  Graph g_;
  Config cfg_;
  bool acyclic_;
  std::vector<Vertex> topo_;  // acyclic only: sources before ranges
  std::vector<Element> vertex_nf_;
  Invariants inv_;
  std::vector<AcyclicPiece> pieces_;
};

// Free-function forms of the operations.

/// All beta with x -> beta in at most `depth` steps (x included). Throws
/// ResourceLimit when more than `cap` elements are produced.
std::unordered_set<Element, ElementHash> reduct_set(const Graph& g,
                                                    const Element& x,
                                                    std::size_t depth,
                                                    std::size_t cap = 100000);

/// The unique irreducible reduct; acyclic graphs only.
Element normal_form(const Graph& g, const Element& x);

EqVerdict decide_eq(const Graph& g, const Element& x, const Element& y,
                    std::size_t depth, const Config& cfg = {});

struct SplitResult {
  Element first;
  Element second;
  RewriteTrace first_trace;
  RewriteTrace second_trace;
};

/// Splits a trace from x1 + x2 into traces from x1 and x2 whose ends sum to
/// the trace end. A step at a vertex in both current supports goes to the
/// first side. Throws DomainError for an invalid trace or start mismatch.
SplitResult split(const Graph& g, const Element& x1, const Element& x2,
                  const RewriteTrace& trace);

/// gamma[i][j] with a_i ~ gamma[i][0] + gamma[i][1] and
/// b_j ~ gamma[0][j] + gamma[1][j].
struct Refinement {
  Verdict verdict = Verdict::unknown;  // equal: matrix is filled
  Element gamma[2][2];
  std::string reason;
};

Refinement refine(const WordProblem& wp, const Element& a1, const Element& a2,
                  const Element& b1, const Element& b2,
                  std::optional<std::size_t> depth = std::nullopt);
Refinement refine(const Graph& g, const Element& a1, const Element& a2,
                  const Element& b1, const Element& b2, std::size_t depth);

/// Verifies a refinement matrix through decide(): every row and column sum
/// must come back Equal.
bool verify_refinement(const WordProblem& wp, const Element& a1,
                       const Element& a2, const Element& b1, const Element& b2,
                       const Refinement& r,
                       std::optional<std::size_t> depth = std::nullopt);

}  // namespace graphmon
