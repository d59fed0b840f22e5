#include "graphmon/certificates.hpp"

#include "graphmon/error.hpp"
#include "graphmon/lattice.hpp"

namespace graphmon {

std::string to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::zero: return "zero";
    case Certificate::Kind::support_closure: return "support-closure";
    case Certificate::Kind::group_image: return "grothendieck-image";
    case Certificate::Kind::exhausted: return "exhausted-reducts";
  }
  return "?";
}

std::string describe(const Graph& g, const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::zero:
      return "exactly one side is the zero element";
    case Certificate::Kind::support_closure:
      return "saturated hereditary closures differ: " +
             g.format_set(c.lhs_closure) + " vs " + g.format_set(c.rhs_closure);
    case Certificate::Kind::group_image: {
      GroupPresentation p = subquotient_group(g, c.within, c.killed);
      std::string where = c.killed.empty()
                              ? "K0 of " + g.format_set(c.within)
                              : "K0 of " + g.format_set(c.within) + " / " +
                                    g.format_set(c.killed);
      return "images in " + where + " differ: " + p.format(c.lhs_image) +
             " vs " + p.format(c.rhs_image);
    }
    case Certificate::Kind::exhausted:
      return "reduct sets are finite (" + std::to_string(c.lhs_reducts) +
             " and " + std::to_string(c.rhs_reducts) + " elements) and disjoint";
  }
  return {};
}

// ------------------------------------------------------------- Invariants

Invariants::Invariants(const Graph& g, std::size_t vertex_cap,
                       std::size_t max_sets)
    : g_(g), n_(g.vertex_count()), masks_(g.vertex_count() <= 64) {
  if (masks_) {
    out_.assign(n_, 0);
    tree_.assign(n_, 0);
    for (const Edge& e : g.edges()) out_[e.source] |= std::uint64_t{1} << e.range;
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : tree(g, v).members()) tree_[v] |= std::uint64_t{1} << w;
  }
  if (!masks_ || n_ > vertex_cap || n_ > 30) return;
  std::vector<VertexSet> sets = hsat_sets(g, std::min<std::size_t>(vertex_cap, 30));
  if (sets.size() > max_sets) return;
  sets_ = std::move(sets);
  auto to_mask = [](const VertexSet& s) {
    std::uint64_t m = 0;
    for (Vertex v : s.members()) m |= std::uint64_t{1} << v;
    return m;
  };
  for (const VertexSet& c : sets_) {
    Level level{to_mask(c), c, {}};
    for (const VertexSet& h : sets_)
      if (h != c && h.is_subset_of(c))
        level.below.push_back({to_mask(h), h, subquotient_group(g, c, h)});
    levels_.push_back(std::move(level));
  }
  tables_ = true;
}

std::uint64_t Invariants::support_mask(const Element& x) const {
  std::uint64_t m = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (sgn(x[v]) != 0) m |= std::uint64_t{1} << v;
  return m;
}

std::uint64_t Invariants::closure_mask(std::uint64_t support) const {
  std::uint64_t s = 0;
  for (Vertex v = 0; v < n_; ++v)
    if ((support >> v) & 1) s |= tree_[v];
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n_; ++v)
      if (!((s >> v) & 1) && out_[v] != 0 && (out_[v] & ~s) == 0) {
        s |= std::uint64_t{1} << v;
        changed = true;
      }
  }
  return s;
}

VertexSet Invariants::closure(const Element& x) const {
  return closure(x, VertexSet(n_));
}

VertexSet Invariants::closure(const Element& x, const VertexSet& base) const {
  if (x.universe() != n_) throw DomainError("element does not belong to the graph");
  if (!masks_) return hsat_closure(g_, x.support() | base);
  std::uint64_t support = support_mask(x);
  for (Vertex v : base.members()) support |= std::uint64_t{1} << v;
  const std::uint64_t m = closure_mask(support);
  VertexSet out(n_);
  for (Vertex v = 0; v < n_; ++v)
    if ((m >> v) & 1) out.insert(v);
  return out;
}

std::optional<Certificate> Invariants::compare_in(const Element& x,
                                                  const Element& y,
                                                  const VertexSet& closure,
                                                  const VertexSet& base) const {
  auto make = [&](const VertexSet& killed, const GroupElement& ix,
                  const GroupElement& iy) {
    Certificate c;
    c.kind = Certificate::Kind::group_image;
    c.base = base;
    c.lhs_closure = c.rhs_closure = closure;
    c.within = closure;
    c.killed = killed;
    c.lhs_image = ix;
    c.rhs_image = iy;
    return c;
  };
  if (tables_) {
    for (const Level& level : levels_) {
      if (level.within_set != closure) continue;
      for (const Subquotient& sq : level.below) {
        if (!base.is_subset_of(sq.killed_set)) continue;
        GroupElement ix = sq.group.image(x);
        GroupElement iy = sq.group.image(y);
        if (ix != iy) return make(sq.killed_set, ix, iy);
      }
      return std::nullopt;
    }
  }
  if (closure == base) return std::nullopt;
  GroupPresentation p = subquotient_group(g_, closure, base);
  GroupElement ix = p.image(x);
  GroupElement iy = p.image(y);
  if (ix != iy) return make(base, ix, iy);
  return std::nullopt;
}

std::optional<Certificate> Invariants::separate(const Element& x,
                                                const Element& y) const {
  return separate_modulo(x, y, VertexSet(n_));
}

std::optional<Certificate> Invariants::separate_modulo(
    const Element& x, const Element& y, const VertexSet& base) const {
  if (x.universe() != n_ || y.universe() != n_)
    throw DomainError("element does not belong to the graph");
  if (x == y) return std::nullopt;
  const VertexSet cx = closure(x, base);
  const VertexSet cy = closure(y, base);
  if (base.empty() && x.is_zero() != y.is_zero()) {
    Certificate c;
    c.kind = Certificate::Kind::zero;
    c.base = base;
    c.lhs_closure = cx;
    c.rhs_closure = cy;
    return c;
  }
  // Image in the group of the whole graph (modulo base) first.
  const VertexSet all = VertexSet::all(n_);
  if (base != all) {
    if (auto c = compare_in(x, y, all, base); c) {
      c->lhs_closure = cx;
      c->rhs_closure = cy;
      return c;
    }
  }
  if (cx != cy) {
    Certificate c;
    c.kind = Certificate::Kind::support_closure;
    c.base = base;
    c.lhs_closure = cx;
    c.rhs_closure = cy;
    return c;
  }
  if (cx == all) return std::nullopt;  // already compared above
  return compare_in(x, y, cx, base);
}

bool Invariants::verify(const Certificate& c, const Element& x,
                        const Element& y) const {
  const VertexSet base = c.base.universe() == n_ ? c.base : VertexSet(n_);
  if (!is_hsat(g_, base)) return false;
  const VertexSet cx = hsat_closure(g_, x.support() | base);
  const VertexSet cy = hsat_closure(g_, y.support() | base);
  switch (c.kind) {
    case Certificate::Kind::zero:
      return base.empty() && x.is_zero() != y.is_zero();
    case Certificate::Kind::support_closure:
      return cx == c.lhs_closure && cy == c.rhs_closure && cx != cy;
    case Certificate::Kind::group_image: {
      if (!cx.is_subset_of(c.within) || !cy.is_subset_of(c.within)) return false;
      if (!base.is_subset_of(c.killed) || !c.killed.is_subset_of(c.within))
        return false;
      if (!is_hsat(g_, c.within) || !is_hsat(g_, c.killed)) return false;
      GroupPresentation p = subquotient_group(g_, c.within, c.killed);
      return p.image(x) == c.lhs_image && p.image(y) == c.rhs_image &&
             c.lhs_image != c.rhs_image;
    }
    case Certificate::Kind::exhausted:
      return false;
  }
  return false;
}

}  // namespace graphmon
