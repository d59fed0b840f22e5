#include "graphmon/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "graphmon/error.hpp"
#include "graphmon/k_theory.hpp"
#include "graphmon/lattice.hpp"

namespace graphmon {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "Equal";
    case Verdict::distinct: return "Distinct";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Kahn order of the vertices in `part`, using only edges inside `part`.
// Empty optional when those edges contain a cycle.
std::optional<std::vector<Vertex>> topological_order(const Graph& g,
                                                     const VertexSet& part) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& e : g.edges())
    if (part.contains(e.source) && part.contains(e.range)) ++indegree[e.range];
  std::deque<Vertex> ready;
  for (Vertex v : part.members())
    if (indegree[v] == 0) ready.push_back(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeIndex e : g.out_edges(v)) {
      Vertex w = g.edge(e).range;
      if (part.contains(w) && --indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != part.count()) return std::nullopt;
  return order;
}

// Vertex normal forms of the sub-quotient within / killed when its edges
// form no cycle.
std::optional<std::vector<Element>> piece_normal_forms(const Graph& g,
                                                       const VertexSet& within,
                                                       const VertexSet& killed) {
  const VertexSet part = within - killed;
  auto order = topological_order(g, part);
  if (!order) return std::nullopt;
  const std::size_t n = g.vertex_count();
  std::vector<Element> nf(n, Element(n));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const Vertex v = *it;
    bool emits = false;
    for (EdgeIndex e : g.out_edges(v)) {
      Vertex w = g.edge(e).range;
      if (!part.contains(w)) continue;
      emits = true;
      nf[v] += nf[w];
    }
    if (!emits) nf[v].set(v, 1);
  }
  return nf;
}

Element apply_forms(const std::vector<Element>& nf, const VertexSet& part,
                    const Element& x) {
  Element out(x.universe());
  for (Vertex v : part.members())
    if (sgn(x[v]) != 0) out += nf[v] * x[v];
  return out;
}

Element componentwise_min(const Element& a, const Element& b) {
  Element out(a.universe());
  for (Vertex v = 0; v < a.universe(); ++v) out.set(v, a[v] < b[v] ? a[v] : b[v]);
  return out;
}

// Breadth-first reduct search from one element. Parents point at keys of
// `seen`, which stay put across rehashing.
struct Side {
  struct Node {
    const Element* parent;
    Vertex vertex;
  };
  std::unordered_map<Element, Node, ElementHash> seen;
  std::vector<const Element*> frontier;
  std::size_t depth = 0;
  bool exhausted = false;

  explicit Side(const Element& start) {
    auto [it, _] = seen.emplace(start, Node{nullptr, 0});
    frontier.push_back(&it->first);
  }

  RewriteTrace trace_to(const Graph& g, const Element* target) const {
    std::vector<Vertex> steps;
    const Element* cur = target;
    const Element* root = cur;
    while (true) {
      const Node& node = seen.at(*cur);
      if (!node.parent) {
        root = cur;
        break;
      }
      steps.push_back(node.vertex);
      cur = node.parent;
    }
    RewriteTrace t(*root);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) t.push(g, *it);
    return t;
  }
};

// Expands one level. `mask` (possibly empty) zeroes coordinates after each
// step and suppresses rewriting inside it. Calls hit(elem) for every new
// element; stops early when hit returns true and returns that element.
template <class Hit>
const Element* expand(const Graph& g, Side& side, const VertexSet* mask,
                      Hit&& hit) {
  std::vector<const Element*> next;
  ++side.depth;
  for (const Element* e : side.frontier) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (sgn((*e)[v]) == 0 || g.is_sink(v)) continue;
      if (mask && mask->contains(v)) continue;
      Element y = rewrite_at(g, *e, v);
      if (mask) y = y.masked(*mask);
      auto [it, inserted] = side.seen.emplace(std::move(y), Side::Node{e, v});
      if (!inserted) continue;
      next.push_back(&it->first);
      if (hit(it->first)) {
        side.frontier = std::move(next);
        return &it->first;
      }
    }
  }
  side.frontier = std::move(next);
  if (side.frontier.empty()) side.exhausted = true;
  return nullptr;
}

// Index of the side to expand next, or -1 when neither can move.
int pick(const Side& a, const Side& b, std::size_t depth) {
  const bool ma = !a.exhausted && a.depth < depth;
  const bool mb = !b.exhausted && b.depth < depth;
  if (ma && (!mb || a.depth <= b.depth)) return 0;
  if (mb) return 1;
  return -1;
}

}  // namespace

// ------------------------------------------------------------ WordProblem

WordProblem::WordProblem(Graph g, Config cfg)
    : g_(std::move(g)),
      cfg_(cfg),
      acyclic_(g_.is_acyclic()),
      inv_(g_, cfg.lattice_cap) {
  cfg_.validate();
  const std::size_t n = g_.vertex_count();
  const VertexSet all = VertexSet::all(n);
  if (acyclic_) {
    topo_ = *topological_order(g_, all);
    vertex_nf_ = *piece_normal_forms(g_, all, VertexSet(n));
  }
  if (inv_.has_tables()) {
    const auto& sets = inv_.lattice();
    for (const VertexSet& c : sets)
      for (const VertexSet& h : sets) {
        if (h == c || !h.is_subset_of(c)) continue;
        if (auto nf = piece_normal_forms(g_, c, h))
          pieces_.push_back({c, h, std::move(*nf)});
      }
  } else if (acyclic_) {
    pieces_.push_back({all, VertexSet(n), vertex_nf_});
  }
}

void WordProblem::check(const Element& x) const {
  if (x.universe() != g_.vertex_count())
    throw DomainError("element does not belong to the graph");
}

Element WordProblem::normal_form(const Element& x) const {
  check(x);
  if (!acyclic_) throw DomainError("normal forms need an acyclic graph");
  return apply_forms(vertex_nf_, VertexSet::all(g_.vertex_count()), x);
}

RewriteTrace WordProblem::trace_to_normal_form(const Element& x) const {
  RewriteTrace t(x);
  Element cur = x;
  std::size_t steps = 0;
  for (Vertex v : topo_) {
    if (g_.is_sink(v)) continue;
    // Rewriting v only adds to later vertices, so each occurrence is
    // rewritten exactly once.
    const Integer k = t.end()[v];
    if (k > Integer(cfg_.reduct_cap) ||
        steps + k.get_ui() > cfg_.reduct_cap)
      throw ResourceLimit("rewrite trace to the normal form exceeds " +
                          std::to_string(cfg_.reduct_cap) + " steps");
    for (unsigned long i = 0; i < k.get_ui(); ++i) t.push(g_, v);
    steps += k.get_ui();
  }
  return t;
}

Verdict WordProblem::search(const Element& x, const Element& y,
                            std::size_t depth, EqVerdict* out) const {
  if (x == y) {
    if (out) {
      out->verdict = Verdict::equal;
      out->common = x;
      out->lhs_trace = RewriteTrace(x);
      out->rhs_trace = RewriteTrace(y);
    }
    return Verdict::equal;
  }
  if (auto c = inv_.separate(x, y)) {
    if (out) {
      out->verdict = Verdict::distinct;
      out->certificate = std::move(c);
    }
    return Verdict::distinct;
  }
  if (acyclic_) {
    const Element nx = normal_form(x);
    const Element ny = normal_form(y);
    if (nx == ny) {
      if (out) {
        out->verdict = Verdict::equal;
        out->common = nx;
        out->lhs_trace = trace_to_normal_form(x);
        out->rhs_trace = trace_to_normal_form(y);
      }
      return Verdict::equal;
    }
    if (out) {
      // Group images equal the normal forms here, so this is a K0 claim.
      const std::size_t n = g_.vertex_count();
      Certificate c;
      c.kind = Certificate::Kind::group_image;
      c.base = VertexSet(n);
      c.lhs_closure = c.rhs_closure = c.within = inv_.closure(x);
      c.killed = VertexSet(n);
      GroupPresentation p = subquotient_group(g_, c.within, c.killed);
      c.lhs_image = p.image(x);
      c.rhs_image = p.image(y);
      out->verdict = Verdict::distinct;
      out->certificate = std::move(c);
    }
    return Verdict::distinct;
  }

  Side sides[2] = {Side(x), Side(y)};
  for (int s; (s = pick(sides[0], sides[1], depth)) >= 0;) {
    const Side& other = sides[1 - s];
    const Element* met = expand(g_, sides[s], nullptr, [&](const Element& e) {
      return other.seen.count(e) != 0;
    });
    if (met) {
      if (out) {
        const Element& common = *met;
        const Element* in_other = &other.seen.find(common)->first;
        RewriteTrace mine = sides[s].trace_to(g_, met);
        RewriteTrace theirs = other.trace_to(g_, in_other);
        out->verdict = Verdict::equal;
        out->common = common;
        out->lhs_trace = s == 0 ? std::move(mine) : std::move(theirs);
        out->rhs_trace = s == 0 ? std::move(theirs) : std::move(mine);
      }
      return Verdict::equal;
    }
    if (sides[0].seen.size() + sides[1].seen.size() > cfg_.reduct_cap) {
      if (out) {
        out->verdict = Verdict::unknown;
        out->reason = "reduct cap of " + std::to_string(cfg_.reduct_cap) +
                      " elements reached";
      }
      return Verdict::unknown;
    }
  }
  if (sides[0].exhausted && sides[1].exhausted) {
    if (out) {
      Certificate c;
      c.kind = Certificate::Kind::exhausted;
      c.base = VertexSet(g_.vertex_count());
      c.lhs_closure = c.rhs_closure = inv_.closure(x);
      c.lhs_reducts = sides[0].seen.size();
      c.rhs_reducts = sides[1].seen.size();
      out->verdict = Verdict::distinct;
      out->certificate = std::move(c);
    }
    return Verdict::distinct;
  }
  if (out) {
    out->verdict = Verdict::unknown;
    out->reason = "no common reduct within " + std::to_string(depth) +
                  " steps per side";
  }
  return Verdict::unknown;
}

EqVerdict WordProblem::decide(const Element& x, const Element& y,
                              std::optional<std::size_t> depth) const {
  check(x);
  check(y);
  EqVerdict out;
  search(x, y, budget(depth), &out);
  return out;
}

Verdict WordProblem::compare(const Element& x, const Element& y,
                             std::optional<std::size_t> depth) const {
  check(x);
  check(y);
  return search(x, y, budget(depth), nullptr);
}

Verdict WordProblem::compare_modulo(const Element& x, const Element& y,
                                    const VertexSet& h,
                                    std::optional<std::size_t> depth) const {
  check(x);
  check(y);
  HSatSet valid(g_, h);
  const Element mx = x.masked(h);
  const Element my = y.masked(h);
  if (mx == my) return Verdict::equal;
  if (inv_.separate_modulo(x, y, h)) return Verdict::distinct;
  const VertexSet all = VertexSet::all(g_.vertex_count());
  for (const AcyclicPiece& p : pieces_)
    if (p.within == all && p.killed == h)
      return apply_forms(p.vertex_nf, all - h, mx) ==
                     apply_forms(p.vertex_nf, all - h, my)
                 ? Verdict::equal
                 : Verdict::distinct;
  if (auto nf = piece_normal_forms(g_, all, h))
    return apply_forms(*nf, all - h, mx) == apply_forms(*nf, all - h, my)
               ? Verdict::equal
               : Verdict::distinct;

  const std::size_t d = budget(depth);
  Side sides[2] = {Side(mx), Side(my)};
  for (int s; (s = pick(sides[0], sides[1], d)) >= 0;) {
    const Side& other = sides[1 - s];
    if (expand(g_, sides[s], &h,
               [&](const Element& e) { return other.seen.count(e) != 0; }))
      return Verdict::equal;
    if (sides[0].seen.size() + sides[1].seen.size() > cfg_.reduct_cap)
      return Verdict::unknown;
  }
  if (sides[0].exhausted && sides[1].exhausted) return Verdict::distinct;
  return Verdict::unknown;
}

std::string WordProblem::leq_refutation(const Element& x,
                                        const Element& y) const {
  const VertexSet cx = inv_.closure(x);
  const VertexSet cy = inv_.closure(y);
  if (!cx.is_subset_of(cy))
    return "closure " + g_.format_set(cx) + " is not contained in " +
           g_.format_set(cy);
  const VertexSet sy = y.support();
  for (const AcyclicPiece& p : pieces_) {
    if (!sy.is_subset_of(p.within)) continue;
    const VertexSet part = p.within - p.killed;
    const Element nx = apply_forms(p.vertex_nf, part, x);
    const Element ny = apply_forms(p.vertex_nf, part, y);
    if (!nx.divides(ny)) {
      std::string where = g_.format_set(p.within);
      if (!p.killed.empty()) where += " / " + g_.format_set(p.killed);
      return "normal forms in the acyclic piece " + where + " are not ordered: " +
             format_element(g_, nx) + " vs " + format_element(g_, ny);
    }
  }
  return {};
}

LeqVerdict WordProblem::leq(const Element& x, const Element& y,
                            std::optional<std::size_t> depth) const {
  check(x);
  check(y);
  LeqVerdict out;
  using V = LeqVerdict::Value;
  if (x.divides(y)) {
    out.value = V::yes;
    out.witness = y - x;
    return out;
  }
  if (x.is_zero()) {
    out.value = V::yes;
    out.witness = y;
    return out;
  }
  if (y.is_zero()) {
    out.value = V::no;
    out.certificate = "only 0 lies below 0";
    return out;
  }
  if (std::string why = leq_refutation(x, y); !why.empty()) {
    out.value = V::no;
    out.certificate = std::move(why);
    return out;
  }
  if (acyclic_) {
    // The refutation above covers every failure here.
    out.value = V::yes;
    out.witness = normal_form(y) - normal_form(x);
    return out;
  }

  // x <= y iff some reduct of x is dominated by some reduct of y.
  const std::size_t d = budget(depth);
  Side sides[2] = {Side(x), Side(y)};
  const Element* low = nullptr;
  const Element* high = nullptr;
  for (int s; (s = pick(sides[0], sides[1], d)) >= 0;) {
    const Side& other = sides[1 - s];
    const Element* hit = expand(g_, sides[s], nullptr, [&](const Element& e) {
      for (const auto& [f, node] : other.seen)
        if (s == 0 ? e.divides(f) : f.divides(e)) {
          (s == 0 ? low : high) = &e;
          (s == 0 ? high : low) = &f;
          return true;
        }
      return false;
    });
    if (hit) {
      out.value = V::yes;
      out.witness = *high - *low;
      return out;
    }
    if (sides[0].seen.size() + sides[1].seen.size() > cfg_.reduct_cap) {
      out.reason = "reduct cap of " + std::to_string(cfg_.reduct_cap) +
                   " elements reached";
      return out;
    }
  }
  if (sides[0].exhausted && sides[1].exhausted) {
    out.value = V::no;
    out.certificate = "reduct sets are finite and no reduct of the left side "
                      "is dominated by a reduct of the right side";
    return out;
  }
  out.reason = "no dominating reduct within " + std::to_string(d) +
               " steps per side";
  return out;
}

bool WordProblem::verify(const Element& x, const Element& y,
                         const EqVerdict& v) const {
  switch (v.verdict) {
    case Verdict::equal:
      return v.lhs_trace.start == x && v.rhs_trace.start == y &&
             is_valid_trace(g_, v.lhs_trace) &&
             is_valid_trace(g_, v.rhs_trace) && v.lhs_trace.end() == v.common &&
             v.rhs_trace.end() == v.common;
    case Verdict::distinct: {
      if (!v.certificate) return false;
      const Certificate& c = *v.certificate;
      if (c.kind != Certificate::Kind::exhausted) return inv_.verify(c, x, y);
      const std::size_t limit = std::max(c.lhs_reducts, c.rhs_reducts);
      try {
        auto rx = reduct_set(g_, x, limit, limit);
        auto ry = reduct_set(g_, y, limit, limit);
        if (rx.size() != c.lhs_reducts || ry.size() != c.rhs_reducts)
          return false;
        // Closed under one more step: every successor already present.
        for (const auto* r : {&rx, &ry})
          for (const Element& e : *r)
            for (const auto& [vertex, next] : successors(g_, e))
              if (!r->count(next)) return false;
        for (const Element& e : rx)
          if (ry.count(e)) return false;
        return true;
      } catch (const ResourceLimit&) {
        return false;
      }
    }
    case Verdict::unknown:
      return true;
  }
  return false;
}

// -------------------------------------------------------- free functions

std::unordered_set<Element, ElementHash> reduct_set(const Graph& g,
                                                    const Element& x,
                                                    std::size_t depth,
                                                    std::size_t cap) {
  if (x.universe() != g.vertex_count())
    throw DomainError("element does not belong to the graph");
  std::unordered_set<Element, ElementHash> seen{x};
  std::vector<Element> frontier{x};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Element> next;
    for (const Element& e : frontier)
      for (auto& [v, y] : successors(g, e))
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw ResourceLimit("reduct set exceeds " + std::to_string(cap) +
                                " elements");
          next.push_back(std::move(y));
        }
    frontier = std::move(next);
  }
  return seen;
}

Element normal_form(const Graph& g, const Element& x) {
  if (x.universe() != g.vertex_count())
    throw DomainError("element does not belong to the graph");
  const VertexSet all = VertexSet::all(g.vertex_count());
  auto nf = piece_normal_forms(g, all, VertexSet(g.vertex_count()));
  if (!nf) throw DomainError("normal forms need an acyclic graph");
  return apply_forms(*nf, all, x);
}

EqVerdict decide_eq(const Graph& g, const Element& x, const Element& y,
                    std::size_t depth, const Config& cfg) {
  return WordProblem(g, cfg).decide(x, y, depth);
}

SplitResult split(const Graph& g, const Element& x1, const Element& x2,
                  const RewriteTrace& trace) {
  if (x1.universe() != g.vertex_count() || x2.universe() != g.vertex_count())
    throw DomainError("element does not belong to the graph");
  if (trace.start != x1 + x2)
    throw DomainError("trace does not start at the sum of the two elements");
  if (!is_valid_trace(g, trace)) throw DomainError("trace is not valid");
  SplitResult out{x1, x2, RewriteTrace(x1), RewriteTrace(x2)};
  for (const auto& step : trace.steps) {
    if (sgn(out.first_trace.end()[step.vertex]) > 0)
      out.first_trace.push(g, step.vertex);
    else
      out.second_trace.push(g, step.vertex);
  }
  out.first = out.first_trace.end();
  out.second = out.second_trace.end();
  return out;
}

Refinement refine(const WordProblem& wp, const Element& a1, const Element& a2,
                  const Element& b1, const Element& b2,
                  std::optional<std::size_t> depth) {
  const Graph& g = wp.graph();
  EqVerdict v = wp.decide(a1 + a2, b1 + b2, depth);
  Refinement out;
  if (v.verdict == Verdict::distinct)
    throw DomainError("a1 + a2 and b1 + b2 are not equivalent");
  if (v.verdict == Verdict::unknown) {
    out.reason = v.reason;
    return out;
  }
  SplitResult a = split(g, a1, a2, v.lhs_trace);
  SplitResult b = split(g, b1, b2, v.rhs_trace);
  // Refinement in the free monoid of a.first + a.second = b.first + b.second.
  out.verdict = Verdict::equal;
  out.gamma[0][0] = componentwise_min(a.first, b.first);
  out.gamma[0][1] = a.first - out.gamma[0][0];
  out.gamma[1][0] = b.first - out.gamma[0][0];
  out.gamma[1][1] = a.second - out.gamma[1][0];
  return out;
}

Refinement refine(const Graph& g, const Element& a1, const Element& a2,
                  const Element& b1, const Element& b2, std::size_t depth) {
  return refine(WordProblem(g), a1, a2, b1, b2, depth);
}

bool verify_refinement(const WordProblem& wp, const Element& a1,
                       const Element& a2, const Element& b1, const Element& b2,
                       const Refinement& r, std::optional<std::size_t> depth) {
  if (r.verdict != Verdict::equal) return false;
  const auto& m = r.gamma;
  return wp.compare(a1, m[0][0] + m[0][1], depth) == Verdict::equal &&
         wp.compare(a2, m[1][0] + m[1][1], depth) == Verdict::equal &&
         wp.compare(b1, m[0][0] + m[1][0], depth) == Verdict::equal &&
         wp.compare(b2, m[0][1] + m[1][1], depth) == Verdict::equal;
}

}  // namespace graphmon
