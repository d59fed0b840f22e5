#include <doctest.h>

#include "graphmon/k_theory.hpp"
#include "graphmon/path_counts.hpp"
#include "graphmon/smith.hpp"
#include "graphmon/word_problem.hpp"
#include "support.hpp"

using namespace graphmon;
using namespace graphmon::testing;

namespace {

Element el(const Graph& g, const char* text) { return parse_element(g, text); }

Graph bouquet(std::size_t loops) {
  std::vector<std::pair<std::string, std::string>> edges(loops, {"v", "v"});
  return make_graph({"v"}, edges);
}

IntMatrix random_matrix(Rng& rng) {
  std::uniform_int_distribution<std::size_t> shape(1, 6);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(shape(rng), shape(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

// Minors of order k, by brute force over row and column subsets.
Integer gcd_of_minors(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows, cols;
  auto pick_cols = [&](auto&& self, std::size_t from) -> void {
    if (cols.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      const Integer d = bareiss_determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) {
      cols.push_back(c);
      self(self, c + 1);
      cols.pop_back();
    }
  };
  auto pick_rows = [&](auto&& self, std::size_t from) -> void {
    if (rows.size() == k) {
      pick_cols(pick_cols, 0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) {
      rows.push_back(r);
      self(self, r + 1);
      rows.pop_back();
    }
  };
  pick_rows(pick_rows, 0);
  return g;
}

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(bareiss_determinant(s.u)) == 1);
  CHECK(abs(bareiss_determinant(s.v)) == 1);
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i < s.rank) CHECK(diag[i] > 0);
    else CHECK(diag[i] == 0);
    if (i + 1 < s.rank) CHECK(diag[i + 1] % diag[i] == 0);
  }
}

}  // namespace

TEST_CASE("relation_matrix") {
  const RelationMatrix r = relation_matrix(mixed_graph());
  CHECK(r.row_vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(r.matrix == IntMatrix{{-1, 0, 0, 0}, {-1, 1, -1, 0}, {0, 0, -1, -1}});
  CHECK(relation_matrix(make_graph({"a", "b"}, {})).matrix.rows() == 0);
  CHECK(relation_matrix(bouquet(3)).matrix == IntMatrix{{-2}});
}

TEST_CASE("smith_normal_form") {
  CHECK(smith_normal_form(IntMatrix{{0}}).d == IntMatrix{{0}});
  CHECK(smith_normal_form(IntMatrix{{-1}}).d == IntMatrix{{1}});
  const SmithForm s = smith_normal_form(relation_matrix(mixed_graph()).matrix);
  CHECK(s.d == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(s.rank == 3);
  check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  check_smith(IntMatrix(0, 3));
}

TEST_CASE("grothendieck_group") {
  const Graph g = mixed_graph();
  const GroupPresentation k0 = grothendieck_group(g);
  CHECK(k0.free_rank() == 1);
  CHECK(k0.torsion().empty());
  const GroupElement c = k0.image(el(g, "c"));
  CHECK(abs(c.free[0]) == 1);
  CHECK(k0.image(el(g, "a")).is_identity());
  CHECK(k0.image(el(g, "b")) == c);
  CHECK(k0.image(el(g, "d")).free[0] == -c.free[0]);
  CHECK(group_image(g, Element(4)).is_identity());

  CHECK(grothendieck_group(bouquet(2)).free_rank() == 0);
  CHECK(grothendieck_group(bouquet(2)).torsion().empty());
  for (std::size_t n = 3; n <= 6; ++n) {
    const GroupPresentation p = grothendieck_group(bouquet(n));
    CHECK(p.free_rank() == 0);
    CHECK(p.torsion() == std::vector<Integer>{Integer(static_cast<long>(n - 1))});
  }
  const GroupPresentation free3 = grothendieck_group(make_graph({"a", "b", "c"}, {}));
  CHECK(free3.free_rank() == 3);
  CHECK(free3.torsion().empty());
}

TEST_CASE("positive_cone_probe") {
  const Graph g = mixed_graph();
  const GroupPresentation k0 = grothendieck_group(g);
  const auto cone = positive_cone_probe(g, 3);
  CHECK(cone.count(k0.image(el(g, "c"))) == 1);
  CHECK(cone.count(k0.image(el(g, "d"))) == 1);
  CHECK(k0.spans({cone.begin(), cone.end()}));
  CHECK(positive_cone_probe(bouquet(2), 3).size() == 1);
  CHECK(positive_cone_probe(make_graph({"a", "b"}, {}), 2).size() == 6);
}

TEST_CASE("matricial_filtration") {
  const FiltrationShape o2 = matricial_filtration(o2_graph(), 5);
  REQUIRE(o2.blocks.size() == 1);
  CHECK(o2.blocks[0].size == 32);
  CHECK(o2.blocks[0].stage == 5);

  const Graph g = mixed_graph();
  const FiltrationShape one = matricial_filtration(g, 1);
  REQUIRE(one.blocks.size() == 5);
  CHECK(one.blocks[0].vertex == g.index_of("d"));
  CHECK(one.blocks[0].stage == 0);
  CHECK(one.blocks[0].size == 1);
  const long sizes[] = {3, 0, 3, 1};
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(one.blocks[1 + v].vertex == v);
    CHECK(one.blocks[1 + v].stage == 1);
    CHECK(one.blocks[1 + v].size == sizes[v]);
  }
  CHECK(one.blocks[2].degenerate());

  const FiltrationShape zero = matricial_filtration(g, 0);
  CHECK(zero.blocks.size() == 4);
  for (const FiltrationBlock& b : zero.blocks) CHECK(b.size == 1);
  CHECK(zero.transitions.size() == 5);  // a->a, b->a, b->c, c->c, c->d
}

// ----------------------------------------------------------- properties

TEST_CASE("random Smith forms verify") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) check_smith(random_matrix(rng));
}

TEST_CASE("invariant factors are ratios of minor gcds") {
  Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<std::size_t> shape(1, 4);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix m(shape(rng), shape(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    const SmithForm s = smith_normal_form(m);
    const auto diag = s.diagonal();
    Integer product = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      product *= diag[k - 1];
      CHECK(gcd_of_minors(m, k) == product);
    }
  }
}

TEST_CASE("group images are additive and respect congruence") {
  Rng rng(33);
  for (const Graph& g : corpus()) {
    const GroupPresentation k0 = grothendieck_group(g);
    const WordProblem wp(g);
    for (int i = 0; i < 20; ++i) {
      const Element x = random_element(g.vertex_count(), 0, 3, rng);
      const Element y = random_element(g.vertex_count(), 0, 3, rng);
      CHECK(k0.image(x + y) == k0.add(k0.image(x), k0.image(y)));
      if (wp.compare(x, y) == Verdict::equal) CHECK(k0.image(x) == k0.image(y));
      if (auto z = forward_step(g, x, rng)) CHECK(k0.image(*z) == k0.image(x));
    }
  }
}

TEST_CASE("acyclic groups are free on the sinks") {
  for (const Graph& g : corpus()) {
    if (!g.is_acyclic()) continue;
    const GroupPresentation k0 = grothendieck_group(g);
    CHECK(k0.free_rank() == sinks(g).count());
    CHECK(k0.torsion().empty());
    const auto elems = elements_up_to(g.vertex_count(), 3);
    for (const Element& x : elems)
      for (const Element& y : elems)
        CHECK((k0.image(x) == k0.image(y)) == (normal_form(g, x) == normal_form(g, y)));
  }
}

TEST_CASE("path counts follow the one-step recursion") {
  for (const Graph& g : corpus()) {
    const auto counts = path_counts(g, 8);
    CHECK(counts == path_counts_serial(g, 8));
    const IntMatrix a = adjacency_matrix(g);
    for (std::size_t n = 0; n + 1 <= 8; ++n)
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        Integer sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) sum += counts[n][v] * a(v, w);
        CHECK(counts[n + 1][w] == sum);
      }
    for (std::size_t n = 0; n <= 4; ++n)
      for (Vertex w = 0; w < g.vertex_count(); ++w)
        CHECK(counts[n][w] == brute_path_count(g, n, w));
  }
}
