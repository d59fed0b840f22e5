#include "graphmon/element.hpp"

#include <algorithm>
#include <cctype>

#include "graphmon/error.hpp"

namespace graphmon {

Element Element::unit(std::size_t universe, Vertex v) {
  Element e(universe);
  e.mult_.at(v) = 1;
  return e;
}

void Element::set(Vertex v, Integer k) {
  if (sgn(k) < 0) throw DomainError("negative multiplicity");
  mult_.at(v) = std::move(k);
}

bool Element::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(),
                     [](const Integer& k) { return sgn(k) == 0; });
}

Integer Element::size() const {
  Integer total = 0;
  for (const auto& k : mult_) total += k;
  return total;
}

VertexSet Element::support() const {
  VertexSet s(universe());
  for (Vertex v = 0; v < mult_.size(); ++v)
    if (sgn(mult_[v]) != 0) s.insert(v);
  return s;
}

bool Element::divides(const Element& other) const {
  for (Vertex v = 0; v < mult_.size(); ++v)
    if (mult_[v] > other.mult_[v]) return false;
  return true;
}

Element& Element::operator+=(const Element& other) {
  if (other.universe() != universe())
    throw DomainError("elements belong to different graphs");
  for (Vertex v = 0; v < mult_.size(); ++v) mult_[v] += other.mult_[v];
  return *this;
}

Element Element::operator+(const Element& other) const {
  Element out = *this;
  out += other;
  return out;
}

Element Element::operator-(const Element& other) const {
  if (other.universe() != universe())
    throw DomainError("elements belong to different graphs");
  Element out = *this;
  for (Vertex v = 0; v < mult_.size(); ++v) {
    out.mult_[v] -= other.mult_[v];
    if (sgn(out.mult_[v]) < 0) throw DomainError("difference is not in F");
  }
  return out;
}

Element Element::operator*(const Integer& k) const {
  if (sgn(k) < 0) throw DomainError("negative multiplier");
  Element out = *this;
  for (auto& m : out.mult_) m *= k;
  return out;
}

Element Element::masked(const VertexSet& s) const {
  Element out = *this;
  for (Vertex v : s.members()) out.mult_.at(v) = 0;
  return out;
}

bool operator<(const Element& a, const Element& b) {
  const Integer sa = a.size();
  const Integer sb = b.size();
  if (sa != sb) return sa < sb;
  for (Vertex v = 0; v < a.mult_.size() && v < b.mult_.size(); ++v)
    if (a.mult_[v] != b.mult_[v]) return a.mult_[v] > b.mult_[v];
  return a.mult_.size() < b.mult_.size();
}

std::size_t Element::hash() const noexcept {
  std::size_t h = mult_.size();
  for (const auto& k : mult_) {
    const mpz_srcptr z = k.get_mpz_t();
    std::size_t kh = static_cast<std::size_t>(z->_mp_size);
    const int limbs = std::abs(z->_mp_size);
    for (int i = 0; i < limbs; ++i) kh = kh * 0x9e3779b97f4a7c15ULL + z->_mp_d[i];
    h ^= kh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ------------------------------------------------------------------ text

std::string format_element(const Graph& g, const Element& x) {
  std::string out;
  for (Vertex v = 0; v < x.universe(); ++v) {
    if (sgn(x[v]) == 0) continue;
    if (!out.empty()) out += " + ";
    if (x[v] != 1) out += x[v].get_str() + "*";
    out += g.name(v);
  }
  return out.empty() ? "0" : out;
}

Element parse_element(const Graph& g, std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw ParseError("empty element literal");
  Element x(g.vertex_count());
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    auto end = compact.find('+', pos);
    if (end == std::string::npos) end = compact.size();
    const std::string term = compact.substr(pos, end - pos);
    pos = end + 1;
    if (term.empty())
      throw ParseError("empty term in element literal '" + std::string(text) +
                       "'");
    Integer k = 1;
    std::string name = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      const std::string coeff = term.substr(0, star);
      name = term.substr(star + 1);
      if (coeff.empty() ||
          !std::all_of(coeff.begin(), coeff.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad coefficient '" + coeff + "'");
      k = Integer(coeff, 10);
    }
    if (auto v = g.find(name)) {
      x.add(*v, k);
    } else if (name == "0" && term.find('*') == std::string::npos) {
      // the zero element contributes nothing
    } else {
      throw ParseError("unknown vertex '" + name + "' in element literal");
    }
  }
  return x;
}

// -------------------------------------------------------------- rewriting

Element r_of(const Graph& g, Vertex v) {
  if (g.is_sink(v))
    throw DomainError("vertex '" + g.name(v) + "' is a sink; r(v) undefined");
  Element out(g.vertex_count());
  for (EdgeIndex e : g.out_edges(v)) out.add(g.edge(e).range, 1);
  return out;
}

Element rewrite_at(const Graph& g, const Element& x, Vertex v) {
  Element out = x;
  out.add(v, -1);
  for (EdgeIndex e : g.out_edges(v)) out.add(g.edge(e).range, 1);
  return out;
}

std::vector<std::pair<Vertex, Element>> successors(const Graph& g,
                                                   const Element& x) {
  if (x.universe() != g.vertex_count())
    throw DomainError("element does not belong to the graph");
  std::vector<std::pair<Vertex, Element>> out;
  for (Vertex v = 0; v < x.universe(); ++v)
    if (sgn(x[v]) > 0 && !g.is_sink(v)) out.emplace_back(v, rewrite_at(g, x, v));
  return out;
}

void RewriteTrace::push(const Graph& g, Vertex v) {
  const Element& current = end();
  if (v >= current.universe() || sgn(current[v]) == 0 || g.is_sink(v))
    throw DomainError("invalid rewrite step at '" + g.name(v) + "'");
  Element next = rewrite_at(g, current, v);
  steps.push_back({v, std::move(next)});
}

bool is_valid_trace(const Graph& g, const RewriteTrace& t) {
  if (t.start.universe() != g.vertex_count()) return false;
  const Element* current = &t.start;
  for (const auto& step : t.steps) {
    if (step.vertex >= g.vertex_count() || g.is_sink(step.vertex) ||
        sgn((*current)[step.vertex]) == 0)
      return false;
    if (step.after != rewrite_at(g, *current, step.vertex)) return false;
    current = &step.after;
  }
  return true;
}

// ------------------------------------------------------------ enumeration

namespace {

void compose(std::size_t universe, std::size_t remaining, Vertex at,
             Element& cur, std::vector<Element>& out) {
  if (at + 1 == universe) {
    cur.set(at, Integer(static_cast<unsigned long>(remaining)));
    out.push_back(cur);
    cur.set(at, 0);
    return;
  }
  for (std::size_t k = remaining + 1; k-- > 0;) {
    cur.set(at, Integer(static_cast<unsigned long>(k)));
    compose(universe, remaining - k, at + 1, cur, out);
  }
  cur.set(at, 0);
}

}  // namespace

std::vector<Element> elements_of_size(std::size_t universe, std::size_t size) {
  std::vector<Element> out;
  if (universe == 0) {
    if (size == 0) out.emplace_back(0);
    return out;
  }
  Element cur(universe);
  compose(universe, size, 0, cur, out);
  return out;
}

std::vector<Element> elements_up_to(std::size_t universe,
                                    std::size_t max_size) {
  std::vector<Element> out;
  for (std::size_t s = 0; s <= max_size; ++s) {
    auto level = elements_of_size(universe, s);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace graphmon
