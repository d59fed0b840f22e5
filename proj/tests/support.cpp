#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace graphmon::testing {

Graph make_graph(std::vector<std::string> names,
                 std::vector<std::pair<std::string, std::string>> edges) {
  return Graph(std::move(names), edges);
}

Graph mixed_graph() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "a"},
                                           {"a", "a"},
                                           {"b", "a"},
                                           {"b", "c"},
                                           {"c", "c"},
                                           {"c", "c"},
                                           {"c", "d"}});
}

Graph o2_graph() { return make_graph({"v"}, {{"v", "v"}, {"v", "v"}}); }

Graph ladder_graph() {
  return make_graph({"p0", "p1", "p2", "x"},
                    {{"p0", "p1"}, {"p0", "x"}, {"p1", "p2"}, {"p1", "x"}});
}

Graph split_graph() { return make_graph({"v", "w"}, {{"v", "w"}, {"v", "w"}}); }

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

bool weakly_connected(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [s, d] : edges) parent[find(s)] = find(d);
  for (std::size_t v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

EdgeList canonical(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [s, d] : edges) mapped.emplace_back(perm[s], perm[d]);
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Multisets of `k` items from [0, choices), non-decreasing.
void multisets(std::size_t choices, std::size_t k, std::size_t from,
               std::vector<std::size_t>& cur,
               const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t c = from; c < choices; ++c) {
    cur.push_back(c);
    multisets(choices, k, c, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::set<EdgeList> seen;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, char('a' + v)));
    for (std::size_t k = 0; k <= max_edges; ++k) {
      std::vector<std::size_t> cur;
      multisets(n * n, k, 0, cur, [&](const std::vector<std::size_t>& picks) {
        EdgeList edges;
        for (std::size_t p : picks) edges.emplace_back(p / n, p % n);
        if (!weakly_connected(n, edges)) return;
        EdgeList key = canonical(n, edges);
        if (!seen.insert(key).second) return;
        std::vector<Edge> es;
        for (auto [s, d] : key) es.push_back({s, d});
        out.push_back(Graph::from_indices(names, es));
      });
    }
  }
  return out;
}

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = [] {
    auto g = connected_graphs(3, 4);
    g.push_back(mixed_graph());
    return g;
  }();
  return graphs;
}

std::vector<VertexSet> brute_hereditary_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((mask >> e.source) & 1) && !((mask >> e.range) & 1)) ok = false;
    if (!ok) continue;
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.insert(v);
    out.push_back(s);
  }
  return out;
}

bool cofinal_by_paths(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> reach(n, false);
    std::vector<Vertex> stack{v};
    reach[v] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges())
        if (e.source == u && !reach[e.range]) {
          reach[e.range] = true;
          stack.push_back(e.range);
        }
    }
    // Look for a maximal path that never meets reach: one that stops at a
    // sink or revisits a vertex (and so can loop forever) while avoiding it.
    std::function<bool(Vertex, std::vector<bool>&)> escapes =
        [&](Vertex u, std::vector<bool>& on_path) {
          bool emits = false;
          for (const Edge& e : g.edges()) {
            if (e.source != u) continue;
            emits = true;
            if (reach[e.range]) continue;
            if (on_path[e.range]) return true;
            on_path[e.range] = true;
            const bool found = escapes(e.range, on_path);
            on_path[e.range] = false;
            if (found) return true;
          }
          return !emits;
        };
    for (Vertex u = 0; u < n; ++u) {
      if (reach[u]) continue;
      std::vector<bool> on_path(n, false);
      on_path[u] = true;
      if (escapes(u, on_path)) return false;
    }
  }
  return true;
}

Integer bareiss_determinant(const IntMatrix& m0) {
  IntMatrix m = m0;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;  // exact
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Element random_normal_form(const Graph& g, Element x, Rng& rng) {
  while (true) {
    std::vector<Vertex> live;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (sgn(x[v]) > 0 && !g.is_sink(v)) live.push_back(v);
    if (live.empty()) return x;
    const Vertex v = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
    x.add(v, -1);
    for (const Edge& e : g.edges())
      if (e.source == v) x.add(e.range, 1);
  }
}

Integer brute_path_count(const Graph& g, std::size_t len, Vertex v) {
  Integer count = 0;
  std::function<void(Vertex, std::size_t)> walk = [&](Vertex u, std::size_t left) {
    if (left == 0) {
      if (u == v) ++count;
      return;
    }
    for (const Edge& e : g.edges())
      if (e.source == u) walk(e.range, left - 1);
  };
  for (Vertex u = 0; u < g.vertex_count(); ++u) walk(u, len);
  return count;
}

Element random_element(std::size_t universe, std::size_t min_size,
                       std::size_t max_size, Rng& rng) {
  Element x(universe);
  const std::size_t size =
      std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, universe - 1);
  for (std::size_t i = 0; i < size; ++i) x.add(pick(rng), 1);
  return x;
}

std::optional<Element> forward_step(const Graph& g, const Element& x, Rng& rng) {
  std::vector<Vertex> live;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (sgn(x[v]) > 0 && !g.is_sink(v)) live.push_back(v);
  if (live.empty()) return std::nullopt;
  const Vertex v = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
  Element y = x;
  y.add(v, -1);
  for (const Edge& e : g.edges())
    if (e.source == v) y.add(e.range, 1);
  return y;
}

std::optional<Element> backward_step(const Graph& g, const Element& x, Rng& rng) {
  std::vector<Element> options;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    Element ranges(g.vertex_count());
    for (const Edge& e : g.edges())
      if (e.source == v) ranges.add(e.range, 1);
    if (!ranges.divides(x)) continue;
    Element y = x - ranges;
    y.add(v, 1);
    options.push_back(std::move(y));
  }
  if (options.empty()) return std::nullopt;
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

}  // namespace graphmon::testing
