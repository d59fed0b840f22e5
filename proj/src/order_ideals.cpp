#include "graphmon/order_ideals.hpp"

#include <unordered_map>

#include "graphmon/error.hpp"
#include "graphmon/lattice.hpp"
#include "graphmon/properties.hpp"

namespace graphmon {

Verdict in_generated_ideal(const WordProblem& wp, const Element& x,
                           const VertexSet& s, std::size_t max_multiplier) {
  const Graph& g = wp.graph();
  if (!x.support().is_subset_of(hsat_closure(g, s))) {
    // Closures are congruence invariants and grow with the element.
    return Verdict::distinct;
  }
  Element gens(g.vertex_count());
  for (Vertex v : s.members()) gens.set(v, 1);
  for (std::size_t k = 1;; k *= 2) {
    k = std::min(k, max_multiplier);
    if (wp.leq(x, gens * Integer(static_cast<unsigned long>(k))).value ==
        LeqVerdict::Value::yes)
      return Verdict::equal;
    if (k == max_multiplier) return Verdict::unknown;
  }
}

IdealVertices ideal_vertices(const WordProblem& wp, const VertexSet& s,
                             std::size_t max_multiplier) {
  const std::size_t n = wp.graph().vertex_count();
  IdealVertices out{VertexSet(n), true};
  for (Vertex v = 0; v < n; ++v) {
    switch (in_generated_ideal(wp, Element::unit(n, v), s, max_multiplier)) {
      case Verdict::equal: out.members.insert(v); break;
      case Verdict::distinct: break;
      case Verdict::unknown: out.complete = false; break;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kIdealMultiplier = 64;

}  // namespace

bool phi_psi_roundtrip(const WordProblem& wp, std::string* why) {
  const Graph& g = wp.graph();
  const std::size_t n = g.vertex_count();
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (n > wp.config().lattice_cap)
    throw ResourceLimit("graph has " + std::to_string(n) +
                        " vertices; lattice enumeration cap is " +
                        std::to_string(wp.config().lattice_cap));

  // psi(ideal generated by S) = saturated hereditary closure of S.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.insert(v);
    IdealVertices t = ideal_vertices(wp, s, kIdealMultiplier);
    if (!t.complete)
      throw ResourceLimit("ideal membership undecided for generators " +
                          g.format_set(s));
    const VertexSet expected = hsat_closure(g, s);
    if (t.members != expected)
      return fail("ideal generated by " + g.format_set(s) + " contains " +
                  g.format_set(t.members) + ", expected " +
                  g.format_set(expected));
  }

  // phi(H) is exactly the elements supported in H, and proper inclusions
  // stay proper.
  const LatticeReport lattice = enumerate_hsat(g, wp.config().lattice_cap);
  const auto small = elements_up_to(n, 2);
  for (const VertexSet& h : lattice.sets)
    for (const Element& x : small) {
      const Verdict v = in_generated_ideal(wp, x, h, kIdealMultiplier);
      if (v == Verdict::unknown)
        throw ResourceLimit("ideal membership undecided for " +
                            format_element(g, x));
      if ((v == Verdict::equal) != order_ideal_membership(g, x, h))
        return fail("membership of " + format_element(g, x) + " in the ideal of " +
                    g.format_set(h) + " disagrees with its support");
    }
  for (auto [i, j] : lattice.hasse) {
    const VertexSet& lo = lattice.sets[i];
    const VertexSet& hi = lattice.sets[j];
    bool separated = false;
    for (Vertex v : (hi - lo).members())
      if (in_generated_ideal(wp, Element::unit(n, v), lo, kIdealMultiplier) ==
          Verdict::distinct)
        separated = true;
    if (!separated)
      return fail("ideals of " + g.format_set(lo) + " and " + g.format_set(hi) +
                  " coincide");
  }
  return true;
}

QuotientComparison compare_quotient(const WordProblem& wp, const VertexSet& h,
                                    std::size_t size_bound,
                                    std::optional<std::size_t> depth) {
  const Graph& g = wp.graph();
  HSatSet valid(g, h);
  QuotientComparison out;
  out.h = h;
  if (h == VertexSet::all(g.vertex_count())) {
    // Everything is congruent to 0 and the quotient graph is empty.
    out.monoid_classes = out.quotient_classes = 1;
    out.bijective = true;
    return out;
  }
  const Graph q = quotient_graph(g, h);
  const WordProblem wq(q, wp.config());

  const auto elems = elements_up_to(g.vertex_count(), size_bound);
  const Partition lhs = partition_classes(
      elems,
      [&](const Element& x, const Element& y) {
        return wp.compare_modulo(x, y, h, depth);
      },
      [&](const Element& x) { return wp.invariants().closure(x, h); });

  const auto qelems = elements_up_to(q.vertex_count(), size_bound);
  std::unordered_map<Element, std::size_t, ElementHash> qindex;
  for (std::size_t i = 0; i < qelems.size(); ++i) qindex.emplace(qelems[i], i);
  const Partition rhs = partition_classes(
      qelems,
      [&](const Element& x, const Element& y) { return wq.compare(x, y, depth); },
      [&](const Element& x) { return wq.invariants().closure(x); });

  out.monoid_classes = lhs.class_count();
  out.quotient_classes = rhs.class_count();
  out.undecided = !lhs.unresolved.empty() || !rhs.unresolved.empty();

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(lhs.class_count(), unset);
  std::vector<std::size_t> preimage(rhs.class_count(), unset);
  bool ok = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t c = lhs.class_of[i];
    const std::size_t d =
        rhs.class_of[qindex.at(project_to_quotient(g, h, q, elems[i]))];
    if (image[c] == unset) image[c] = d;
    if (preimage[d] == unset) preimage[d] = c;
    if (image[c] != d || preimage[d] != c) ok = false;
  }
  for (std::size_t d : preimage)
    if (d == unset) ok = false;
  out.bijective = ok;
  return out;
}

}  // namespace graphmon
