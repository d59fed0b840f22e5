#include "graphmon/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_map>

#include "graphmon/error.hpp"

namespace graphmon {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe, false) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

std::size_t VertexSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(v);
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (Vertex v = 0; v < bits_.size(); ++v)
    if (bits_[v] && !other.contains(v)) return false;
  return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out(std::max(universe(), other.universe()));
  for (Vertex v = 0; v < out.universe(); ++v)
    if (contains(v) || other.contains(v)) out.insert(v);
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out(universe());
  for (Vertex v = 0; v < universe(); ++v)
    if (contains(v) && other.contains(v)) out.insert(v);
  return out;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet out(universe());
  for (Vertex v = 0; v < universe(); ++v)
    if (contains(v) && !other.contains(v)) out.insert(v);
  return out;
}

bool canonical_less(const VertexSet& lhs, const VertexSet& rhs) {
  const auto a = lhs.members();
  const auto b = rhs.members();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// -------------------------------------------------------------------- Graph

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw ParseError("empty vertex identifier");
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#' ||
        ch == ',' || ch == ';' || ch == '+' || ch == '*')
      throw ParseError("invalid character in vertex identifier '" + name +
                       "'");
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_names,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& n : vertex_names) check_name(n);
  std::sort(vertex_names.begin(), vertex_names.end());
  auto dup = std::adjacent_find(vertex_names.begin(), vertex_names.end());
  if (dup != vertex_names.end())
    throw ParseError("duplicate vertex '" + *dup + "'");
  names_ = std::move(vertex_names);
  edges_.reserve(edges.size());
  for (const auto& [src, dst] : edges) {
    auto s = find(src);
    if (!s) throw ParseError("unknown vertex '" + src + "'");
    auto r = find(dst);
    if (!r) throw ParseError("unknown vertex '" + dst + "'");
    edges_.push_back({*s, *r});
  }
  index_edges();
}

Graph Graph::from_indices(std::vector<std::string> names,
                          std::vector<Edge> edges) {
  Graph g;
  g.names_ = std::move(names);
  for (const Edge& e : edges)
    if (e.source >= g.names_.size() || e.range >= g.names_.size())
      throw DomainError("edge endpoint out of range");
  g.edges_ = std::move(edges);
  g.index_edges();
  return g;
}

void Graph::index_edges() {
  out_.assign(names_.size(), {});
  for (EdgeIndex e = 0; e < edges_.size(); ++e)
    out_[edges_[e].source].push_back(e);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

std::size_t Graph::adjacency(Vertex v, Vertex w) const {
  std::size_t n = 0;
  for (EdgeIndex e : out_edges(v))
    if (edges_[e].range == w) ++n;
  return n;
}

bool Graph::is_acyclic() const {
  // Kahn's algorithm on out-degrees of the reversed graph.
  std::vector<std::size_t> indegree(vertex_count(), 0);
  for (const Edge& e : edges_) ++indegree[e.range];
  std::deque<Vertex> ready;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop_front();
    ++seen;
    for (EdgeIndex e : out_[v])
      if (--indegree[edges_[e].range] == 0) ready.push_back(edges_[e].range);
  }
  return seen == vertex_count();
}

VertexSet Graph::vertex_set(std::span<const std::string> names) const {
  VertexSet s(vertex_count());
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::string Graph::format_set(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ", ";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

// --------------------------------------------------------------------- Path

Path Path::trivial(Vertex v) {
  Path p;
  p.source_ = p.range_ = v;
  return p;
}

Path::Path(const Graph& g, std::vector<EdgeIndex> edges)
    : edges_(std::move(edges)) {
  if (edges_.empty()) throw DomainError("path needs at least one edge");
  for (EdgeIndex e : edges_)
    if (e >= g.edge_count()) throw DomainError("edge index out of range");
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (g.edge(edges_[i]).range != g.edge(edges_[i + 1]).source)
      throw DomainError("edges of a path must compose");
  source_ = g.edge(edges_.front()).source;
  range_ = g.edge(edges_.back()).range;
}

std::string format_path(const Graph& g, const Path& p) {
  std::string out = g.name(p.source());
  for (EdgeIndex e : p.edges())
    out += " -[" + std::to_string(e) + "]-> " + g.name(g.edge(e).range);
  return out;
}

// ---------------------------------------------------------- predicates

VertexSet sinks(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) s.insert(v);
  return s;
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& s) {
  VertexSet out(g.vertex_count());
  std::deque<Vertex> queue;
  for (Vertex v : s.members()) {
    out.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.out_edges(v)) {
      Vertex w = g.edge(e).range;
      if (!out.contains(w)) {
        out.insert(w);
        queue.push_back(w);
      }
    }
  }
  return out;
}

VertexSet tree(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw DomainError("unknown vertex");
  VertexSet start(g.vertex_count());
  start.insert(v);
  return hereditary_closure(g, start);
}

bool is_hereditary(const Graph& g, const VertexSet& s) {
  for (const Edge& e : g.edges())
    if (s.contains(e.source) && !s.contains(e.range)) return false;
  return true;
}

namespace {

bool feeds_only_into(const Graph& g, Vertex v, const VertexSet& s) {
  if (g.is_sink(v)) return false;
  for (EdgeIndex e : g.out_edges(v))
    if (!s.contains(g.edge(e).range)) return false;
  return true;
}

}  // namespace

bool is_saturated(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!s.contains(v) && feeds_only_into(g, v, s)) return false;
  return true;
}

VertexSet saturate(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw DomainError("vertex set does not belong to the graph");
  if (!is_hereditary(g, s)) throw DomainError("input set is not hereditary");
  // Lambda iteration: adjoin every vertex feeding only into the previous
  // stage until nothing changes.
  VertexSet current = s;
  for (;;) {
    VertexSet next = current;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!current.contains(v) && feeds_only_into(g, v, current)) next.insert(v);
    if (next == current) return current;
    current = std::move(next);
  }
}

VertexSet hsat_closure(const Graph& g, const VertexSet& s) {
  return saturate(g, hereditary_closure(g, s));
}

// ------------------------------------------------------------- completion

Subgraph completion_subgraph(const Graph& g, const VertexSet& x_vertices,
                             std::span<const EdgeIndex> x_edges) {
  if (x_vertices.universe() != g.vertex_count())
    throw DomainError("vertex set does not belong to the graph");
  for (EdgeIndex e : x_edges) {
    if (e >= g.edge_count()) throw DomainError("edge index out of range");
    const Edge& ed = g.edge(e);
    if (!x_vertices.contains(ed.source) || !x_vertices.contains(ed.range))
      throw DomainError("not a subgraph: edge " + std::to_string(e) +
                        " has an endpoint outside the vertex set");
  }
  Subgraph y{x_vertices, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (x_vertices.contains(g.edge(e).source)) {
      y.edges.push_back(e);
      y.vertices.insert(g.edge(e).range);
    }
  }
  return y;
}

bool is_complete_subgraph(const Graph& g, const Subgraph& sub) {
  std::set<EdgeIndex> kept(sub.edges.begin(), sub.edges.end());
  for (EdgeIndex e : sub.edges) {
    const Edge& ed = g.edge(e);
    if (!sub.vertices.contains(ed.source) || !sub.vertices.contains(ed.range))
      return false;
  }
  for (Vertex v : sub.vertices.members()) {
    auto out = g.out_edges(v);
    std::size_t present = 0;
    for (EdgeIndex e : out) present += kept.count(e);
    if (present != 0 && present != out.size()) return false;
  }
  return true;
}

Graph to_graph(const Graph& g, const Subgraph& sub) {
  std::vector<Vertex> keep = sub.vertices.members();
  std::vector<std::string> names;
  std::unordered_map<Vertex, Vertex> remap;
  for (Vertex v : keep) {
    remap.emplace(v, names.size());
    names.push_back(g.name(v));
  }
  std::vector<EdgeIndex> edge_ids = sub.edges;
  std::sort(edge_ids.begin(), edge_ids.end());
  std::vector<Edge> edges;
  for (EdgeIndex e : edge_ids) {
    const Edge& ed = g.edge(e);
    edges.push_back({remap.at(ed.source), remap.at(ed.range)});
  }
  return Graph::from_indices(std::move(names), std::move(edges));
}

Graph completion(const Graph& g, const VertexSet& x_vertices,
                 std::span<const EdgeIndex> x_edges) {
  return to_graph(g, completion_subgraph(g, x_vertices, x_edges));
}

// ------------------------------------------------------------- cofinality

bool is_cofinal(const Graph& g) {
  const VertexSet everything = VertexSet::all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (saturate(g, tree(g, v)) != everything) return false;
  return true;
}

// ------------------------------------------------------------------ loops

namespace {

void extend_loops(const Graph& g, Vertex start, Vertex at,
                  std::vector<bool>& on_path, std::vector<EdgeIndex>& edges,
                  std::vector<Path>& out) {
  for (EdgeIndex e : g.out_edges(at)) {
    Vertex w = g.edge(e).range;
    if (w == start) {
      edges.push_back(e);
      out.emplace_back(g, edges);
      edges.pop_back();
    } else if (w > start && !on_path[w]) {
      on_path[w] = true;
      edges.push_back(e);
      extend_loops(g, start, w, on_path, edges, out);
      edges.pop_back();
      on_path[w] = false;
    }
  }
}

}  // namespace

std::vector<Path> simple_loops(const Graph& g) {
  std::vector<Path> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeIndex> edges;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    extend_loops(g, s, s, on_path, edges, out);
    on_path[s] = false;
  }
  auto key = [&](const Path& p) {
    std::pair<std::vector<Vertex>, std::vector<EdgeIndex>> k;
    for (EdgeIndex e : p.edges()) {
      k.first.push_back(g.edge(e).source);
      k.second.push_back(e);
    }
    return k;
  };
  std::sort(out.begin(), out.end(),
            [&](const Path& a, const Path& b) { return key(a) < key(b); });
  return out;
}

bool has_exit(const Graph& g, const Path& loop) {
  if (!loop.is_loop()) throw DomainError("path is not a loop");
  for (std::size_t i = 0; i + 1 < loop.length(); ++i)
    if (g.edge(loop.edges()[i]).range != g.edge(loop.edges()[i + 1]).source)
      throw DomainError("malformed loop");
  std::set<EdgeIndex> loop_edges(loop.edges().begin(), loop.edges().end());
  std::set<Vertex> loop_vertices;
  for (EdgeIndex e : loop.edges()) loop_vertices.insert(g.edge(e).source);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (loop_vertices.count(g.edge(e).source) && !loop_edges.count(e))
      return true;
  return false;
}

}  // namespace graphmon
