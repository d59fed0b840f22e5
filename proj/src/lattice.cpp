#include "graphmon/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "graphmon/error.hpp"

namespace graphmon {

bool is_hsat(const Graph& g, const VertexSet& s) {
  return s.universe() == g.vertex_count() && is_hereditary(g, s) &&
         is_saturated(g, s);
}

HSatSet::HSatSet(const Graph& g, VertexSet s) : set_(std::move(s)) {
  if (set_.universe() != g.vertex_count())
    throw DomainError("vertex set does not belong to the graph");
  if (!is_hereditary(g, set_))
    throw DomainError(g.format_set(set_) + " is not hereditary");
  if (!is_saturated(g, set_))
    throw DomainError(g.format_set(set_) + " is not saturated");
}

// ------------------------------------------------------------ enumeration

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
  std::vector<Mask> out;  // neighbour mask per vertex
  std::vector<bool> emits;
};

MaskGraph mask_graph(const Graph& g) {
  MaskGraph m{std::vector<Mask>(g.vertex_count(), 0),
              std::vector<bool>(g.vertex_count(), false)};
  for (const Edge& e : g.edges()) {
    m.out[e.source] |= Mask{1} << e.range;
    m.emits[e.source] = true;
  }
  return m;
}

bool mask_is_hsat(const MaskGraph& m, Mask s) {
  for (std::size_t v = 0; v < m.out.size(); ++v) {
    const bool in = (s >> v) & 1;
    const bool inside = (m.out[v] & ~s) == 0;
    if (in && !inside) return false;                   // hereditary
    if (!in && m.emits[v] && inside) return false;     // saturated
  }
  return true;
}

Mask mask_saturate(const MaskGraph& m, Mask s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < m.out.size(); ++v)
      if (!((s >> v) & 1) && m.emits[v] && (m.out[v] & ~s) == 0) {
        s |= Mask{1} << v;
        changed = true;
      }
  }
  return s;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s.members()) m |= Mask{1} << v;
  return m;
}

VertexSet from_mask(std::size_t n, Mask m) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if ((m >> v) & 1) s.insert(v);
  return s;
}

void check_cap(const Graph& g, std::size_t cap) {
  if (cap > 30) throw DomainError("lattice vertex cap must be at most 30");
  if (g.vertex_count() > cap)
    throw ResourceLimit("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; lattice enumeration cap is " +
                        std::to_string(cap));
}

std::vector<VertexSet> sorted_sets(std::size_t n, std::vector<Mask> masks) {
  std::vector<VertexSet> sets;
  sets.reserve(masks.size());
  for (Mask m : masks) sets.push_back(from_mask(n, m));
  std::sort(sets.begin(), sets.end(), canonical_less);
  return sets;
}

}  // namespace

std::vector<VertexSet> hsat_sets_serial(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  const MaskGraph m = mask_graph(g);
  const Mask limit = Mask{1} << g.vertex_count();
  std::vector<Mask> found;
  for (Mask s = 0; s < limit; ++s)
    if (mask_is_hsat(m, s)) found.push_back(s);
  return sorted_sets(g.vertex_count(), std::move(found));
}

std::vector<VertexSet> hsat_sets(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  const MaskGraph m = mask_graph(g);
  const auto limit = static_cast<long long>(Mask{1} << g.vertex_count());
  std::vector<Mask> found;
#pragma omp parallel
  {
    std::vector<Mask> local;
#pragma omp for schedule(static) nowait
    for (long long s = 0; s < limit; ++s)
      if (mask_is_hsat(m, static_cast<Mask>(s))) local.push_back(static_cast<Mask>(s));
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  return sorted_sets(g.vertex_count(), std::move(found));
}

std::size_t LatticeReport::index_of(const VertexSet& s) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return i;
  throw DomainError("set is not an element of the lattice");
}

LatticeReport enumerate_hsat(const Graph& g, std::size_t cap) {
  LatticeReport r;
  r.sets = hsat_sets(g, cap);
  const std::size_t size = r.sets.size();
  if (size > kMaxLatticeReport)
    throw ResourceLimit("lattice has " + std::to_string(size) +
                        " elements; report limit is " +
                        std::to_string(kMaxLatticeReport));
  const MaskGraph m = mask_graph(g);
  std::vector<Mask> masks;
  std::unordered_map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) {
    masks.push_back(to_mask(r.sets[i]));
    index.emplace(masks.back(), i);
  }
  auto strictly_inside = [&](std::size_t a, std::size_t b) {
    return masks[a] != masks[b] && (masks[a] & ~masks[b]) == 0;
  };
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (!strictly_inside(i, j)) continue;
      bool covers = true;
      for (std::size_t k = 0; k < size && covers; ++k)
        if (strictly_inside(i, k) && strictly_inside(k, j)) covers = false;
      if (covers) r.hasse.emplace_back(i, j);
    }
  r.join.assign(size, std::vector<std::size_t>(size));
  r.meet.assign(size, std::vector<std::size_t>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      r.join[i][j] = index.at(mask_saturate(m, masks[i] | masks[j]));
      r.meet[i][j] = index.at(masks[i] & masks[j]);
    }
  return r;
}

bool order_ideal_membership(const Graph& g, const Element& x,
                            const VertexSet& h) {
  if (x.universe() != g.vertex_count() || h.universe() != g.vertex_count())
    throw DomainError("element or set does not belong to the graph");
  return x.support().is_subset_of(h);
}

// -------------------------------------------------------- graph quotients

Graph quotient_graph(const Graph& g, const VertexSet& h) {
  HSatSet valid(g, h);
  Subgraph sub{VertexSet::all(g.vertex_count()) - h, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!h.contains(g.edge(e).range)) sub.edges.push_back(e);
  return to_graph(g, sub);
}

Graph restriction_graph(const Graph& g, const VertexSet& h) {
  HSatSet valid(g, h);
  Subgraph sub{h, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (h.contains(g.edge(e).source)) sub.edges.push_back(e);
  return to_graph(g, sub);
}

namespace {

VertexSet transfer(const Graph& from, const Graph& to, const VertexSet& s) {
  VertexSet out(to.vertex_count());
  for (Vertex v : s.members())
    if (auto w = to.find(from.name(v))) out.insert(*w);
  return out;
}

}  // namespace

Graph subquotient_graph(const Graph& g, const VertexSet& lower,
                        const VertexSet& upper) {
  if (!lower.is_subset_of(upper))
    throw DomainError("lower set is not contained in the upper set");
  Graph restricted = restriction_graph(g, upper);
  return quotient_graph(restricted, transfer(g, restricted, lower));
}

Element project_to_quotient(const Graph& g, const VertexSet& h,
                            const Graph& quotient, const Element& x) {
  Element out(quotient.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || sgn(x[v]) == 0) continue;
    out.add(quotient.index_of(g.name(v)), x[v]);
  }
  return out;
}

// ---------------------------------------------------------- classification

std::string to_string(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::sink: return "SinkType";
    case SimpleKind::cycle_no_exit: return "CycleNoExitType";
    case SimpleKind::loops_with_exit: return "LoopsWithExitType";
  }
  return "?";
}

SimpleClass classify_simple(const Graph& g) {
  if (g.vertex_count() == 0 || !is_cofinal(g))
    throw DomainError("graph is not cofinal");
  const auto loops = simple_loops(g);
  if (loops.empty()) {
    // A cofinal acyclic graph has exactly one sink.
    auto s = sinks(g).members();
    return {SimpleKind::sink, s.front(), std::nullopt};
  }
  for (const Path& loop : loops)
    if (!has_exit(g, loop))
      return {SimpleKind::cycle_no_exit, std::nullopt, loop};
  return {SimpleKind::loops_with_exit, std::nullopt, std::nullopt};
}

// ---------------------------------------------------- composition series

CompositionSeries composition_series(const Graph& g, std::size_t cap) {
  const auto sets = hsat_sets(g, cap);
  CompositionSeries out;
  VertexSet current(g.vertex_count());
  out.chain.push_back(current);
  const VertexSet everything = VertexSet::all(g.vertex_count());
  while (current != everything) {
    std::vector<const VertexSet*> above;
    for (const auto& s : sets)
      if (s != current && current.is_subset_of(s)) above.push_back(&s);
    const VertexSet* best = nullptr;
    for (const VertexSet* s : above) {
      bool minimal = true;
      for (const VertexSet* t : above)
        if (t != s && t->is_subset_of(*s)) minimal = false;
      if (minimal && (!best || canonical_less(*s, *best))) best = s;
    }
    if (!best) throw DomainError("lattice has no element above the chain");
    Graph sub = subquotient_graph(g, current, *best);
    if (!is_cofinal(sub))
      throw DomainError("covering step produced a non-simple quotient");
    SimpleClass kind = classify_simple(sub);
    out.steps.push_back({*best, std::move(sub), std::move(kind)});
    current = *best;
    out.chain.push_back(current);
  }
  return out;
}

bool validate_series(const Graph& g, const std::vector<VertexSet>& chain,
                     std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  std::vector<VertexSet> full;
  if (chain.empty() || !chain.front().empty())
    full.emplace_back(g.vertex_count());
  full.insert(full.end(), chain.begin(), chain.end());
  for (const auto& s : full) {
    if (s.universe() != g.vertex_count())
      return fail("set does not belong to the graph");
    if (!is_hereditary(g, s)) return fail(g.format_set(s) + " is not hereditary");
    if (!is_saturated(g, s)) return fail(g.format_set(s) + " is not saturated");
  }
  if (full.back() != VertexSet::all(g.vertex_count()))
    return fail("chain does not end at the full vertex set");
  for (std::size_t i = 1; i < full.size(); ++i) {
    if (full[i] == full[i - 1] || !full[i - 1].is_subset_of(full[i]))
      return fail("chain is not strictly increasing at " + g.format_set(full[i]));
    Graph sub = subquotient_graph(g, full[i - 1], full[i]);
    if (!is_cofinal(sub))
      return fail("quotient " + g.format_set(full[i]) + " / " +
                  g.format_set(full[i - 1]) + " is not simple");
  }
  return true;
}

}  // namespace graphmon
