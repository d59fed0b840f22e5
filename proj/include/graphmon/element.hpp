#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphmon/graph.hpp"

namespace graphmon {

using Integer = mpz_class;

/// Element of the free abelian monoid on the vertices of a graph: a
/// multiplicity per vertex, stored densely in canonical vertex order.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t universe) : mult_(universe) {}

  static Element unit(std::size_t universe, Vertex v);

  std::size_t universe() const noexcept { return mult_.size(); }
  const Integer& operator[](Vertex v) const { return mult_.at(v); }
  void set(Vertex v, Integer k);
  void add(Vertex v, const Integer& k) { mult_.at(v) += k; }

  bool is_zero() const;
  /// Total multiplicity.
  Integer size() const;
  VertexSet support() const;
  /// Componentwise comparison in the free monoid.
  bool divides(const Element& other) const;

  Element& operator+=(const Element& other);
  Element operator+(const Element& other) const;
  /// Componentwise difference; throws DomainError if it would go negative.
  Element operator-(const Element& other) const;
  Element operator*(const Integer& k) const;

  /// Zeroes the coordinates in `s`.
  Element masked(const VertexSet& s) const;

  bool operator==(const Element&) const = default;
  /// Canonical order: total size, then multiplicities in vertex order.
  friend bool operator<(const Element& a, const Element& b);

  std::size_t hash() const noexcept;

 private:
  std::vector<Integer> mult_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// `2*a + b`, `0` for the zero element.
std::string format_element(const Graph& g, const Element& x);
/// Parses the element grammar: terms `k*v` or `v` joined by `+`; `0` is the
/// zero element; whitespace is ignored. Throws ParseError.
Element parse_element(const Graph& g, std::string_view text);

/// Multiset of ranges of the edges emitted by v. Throws DomainError for a
/// sink.
Element r_of(const Graph& g, Vertex v);

/// One rewrite step per non-sink vertex in the support, in vertex order.
std::vector<std::pair<Vertex, Element>> successors(const Graph& g,
                                                   const Element& x);
/// (x - v) + r(v); the caller guarantees v is in the support and emits.
Element rewrite_at(const Graph& g, const Element& x, Vertex v);

/// Chain of single rewrite steps starting at `start`.
struct RewriteTrace {
  struct Step {
    Vertex vertex;
    Element after;
    bool operator==(const Step&) const = default;
  };

  Element start;
  std::vector<Step> steps;

  explicit RewriteTrace(Element s = {}) : start(std::move(s)) {}

  const Element& end() const { return steps.empty() ? start : steps.back().after; }
  std::size_t length() const noexcept { return steps.size(); }
  void push(const Graph& g, Vertex v);

  bool operator==(const RewriteTrace&) const = default;
};

/// True iff every step rewrites a non-sink vertex present before the step
/// and produces exactly (pre - v) + r(v).
bool is_valid_trace(const Graph& g, const RewriteTrace& t);

/// Elements of total multiplicity at most `max_size` over `universe`
/// vertices, in canonical order (0 first).
std::vector<Element> elements_up_to(std::size_t universe, std::size_t max_size);
/// Elements of total multiplicity exactly `size`.
std::vector<Element> elements_of_size(std::size_t universe, std::size_t size);

}  // namespace graphmon
