#include <doctest.h>

#include "graphmon/error.hpp"
#include "graphmon/graph_io.hpp"
#include "graphmon/lattice.hpp"
#include "graphmon/order_ideals.hpp"
#include "graphmon/word_problem.hpp"
#include "support.hpp"

using namespace graphmon;
using namespace graphmon::testing;

namespace {

Element el(const Graph& g, const char* text) { return parse_element(g, text); }
VertexSet vs(const Graph& g, const char* text) { return parse_vertex_list(g, text); }

}  // namespace

TEST_CASE("enumerate_hsat") {
  const Graph g = mixed_graph();
  const LatticeReport r = enumerate_hsat(g);
  CHECK(r.sets == std::vector<VertexSet>{vs(g, ""), vs(g, "a"), vs(g, "d"), vs(g, "a,d"),
                                         vs(g, "c,d"), vs(g, "a,b,c,d")});
  CHECK(r.index_of(vs(g, "c,d")) == 4);
  CHECK(r.sets[r.join[1][2]] == vs(g, "a,d"));
  CHECK(r.sets[r.join[3][4]] == VertexSet::all(4));
  CHECK(r.sets[r.meet[3][4]] == vs(g, "d"));

  const Graph bare = make_graph({"a", "b", "c"}, {});
  CHECK(enumerate_hsat(bare).sets.size() == 8);
  const Graph loop = make_graph({"v"}, {{"v", "v"}});
  CHECK(enumerate_hsat(loop).sets.size() == 2);
  CHECK_THROWS_AS(hsat_sets(mixed_graph(), 3), ResourceLimit);
}

TEST_CASE("HSatSet validates") {
  const Graph g = mixed_graph();
  CHECK_NOTHROW(HSatSet(g, vs(g, "c,d")));
  CHECK_THROWS_AS(HSatSet(g, vs(g, "c")), DomainError);
  CHECK_THROWS_AS(HSatSet(g, vs(g, "a,c,d")), DomainError);
}

TEST_CASE("order_ideal_membership") {
  const Graph g = mixed_graph();
  CHECK(order_ideal_membership(g, el(g, "2*c + d"), vs(g, "c,d")));
  CHECK_FALSE(order_ideal_membership(g, el(g, "b"), vs(g, "c,d")));
  CHECK(order_ideal_membership(g, Element(4), vs(g, "")));
}

TEST_CASE("phi_psi_roundtrip") {
  CHECK(phi_psi_roundtrip(WordProblem(mixed_graph())));
  CHECK(phi_psi_roundtrip(WordProblem(make_graph({"v"}, {}))));
  Config small;
  small.lattice_cap = 2;
  CHECK_THROWS_AS(phi_psi_roundtrip(WordProblem(mixed_graph(), small)), ResourceLimit);
}

TEST_CASE("quotient and restriction graphs") {
  const Graph g = mixed_graph();
  CHECK(quotient_graph(g, vs(g, "c,d")) ==
        make_graph({"a", "b"}, {{"a", "a"}, {"a", "a"}, {"b", "a"}}));
  CHECK(quotient_graph(g, vs(g, "")) == g);
  CHECK(quotient_graph(g, vs(g, "d")) ==
        make_graph({"a", "b", "c"},
                   {{"a", "a"}, {"a", "a"}, {"b", "a"}, {"b", "c"}, {"c", "c"}, {"c", "c"}}));
  CHECK_THROWS_AS(quotient_graph(g, vs(g, "c")), DomainError);

  CHECK(restriction_graph(g, vs(g, "c,d")) ==
        make_graph({"c", "d"}, {{"c", "c"}, {"c", "c"}, {"c", "d"}}));
  CHECK(restriction_graph(g, VertexSet::all(4)) == g);
  CHECK(restriction_graph(g, vs(g, "d")) == make_graph({"d"}, {}));
}

TEST_CASE("composition series") {
  const Graph g = mixed_graph();
  const CompositionSeries s = composition_series(g);
  CHECK(s.chain == std::vector<VertexSet>{vs(g, ""), vs(g, "a"), vs(g, "a,d"),
                                          VertexSet::all(4)});
  CHECK(validate_series(g, s.chain));

  const Graph loop = make_graph({"v"}, {{"v", "v"}});
  CHECK(composition_series(loop).chain.size() == 2);
  const Graph two = make_graph({"u", "v"}, {});
  CHECK(composition_series(two).chain ==
        std::vector<VertexSet>{vs(two, ""), vs(two, "u"), vs(two, "u,v")});
}

TEST_CASE("validate_series") {
  const Graph g = mixed_graph();
  CHECK(validate_series(g, {vs(g, ""), vs(g, "d"), vs(g, "c,d"), VertexSet::all(4)}));
  CHECK(validate_series(g, {vs(g, "d"), vs(g, "c,d"), VertexSet::all(4)}));
  std::string why;
  CHECK_FALSE(validate_series(g, {vs(g, ""), vs(g, "a,c,d"), VertexSet::all(4)}, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(validate_series(g, {vs(g, ""), VertexSet::all(4)}));
  CHECK_FALSE(validate_series(g, {vs(g, ""), vs(g, "d"), vs(g, "c,d")}));
}

TEST_CASE("classify_simple") {
  const SimpleClass sink = classify_simple(make_graph({"d"}, {}));
  CHECK(sink.kind == SimpleKind::sink);
  CHECK(sink.sink == Vertex{0});
  CHECK(classify_simple(make_graph({"c"}, {{"c", "c"}, {"c", "c"}})).kind ==
        SimpleKind::loops_with_exit);
  const SimpleClass loop = classify_simple(make_graph({"v"}, {{"v", "v"}}));
  CHECK(loop.kind == SimpleKind::cycle_no_exit);
  REQUIRE(loop.loop);
  CHECK(loop.loop->length() == 1);
  CHECK_THROWS_AS(classify_simple(mixed_graph()), DomainError);

  const Graph g = mixed_graph();
  const CompositionSeries s =
      composition_series(g);  // chain through {a}; rebuild the other one by hand
  (void)s;
  const std::vector<VertexSet> chain{vs(g, ""), vs(g, "d"), vs(g, "c,d"), VertexSet::all(4)};
  const SimpleKind expected[] = {SimpleKind::sink, SimpleKind::loops_with_exit,
                                 SimpleKind::loops_with_exit};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Graph q = subquotient_graph(g, chain[i - 1], chain[i]);
    CHECK(classify_simple(q).kind == expected[i - 1]);
  }
}

// ----------------------------------------------------------- properties

TEST_CASE("lattice agrees with brute force and is closed") {
  for (const Graph& g : corpus()) {
    const LatticeReport r = enumerate_hsat(g);
    CHECK(hsat_sets(g) == hsat_sets_serial(g));
    std::vector<VertexSet> brute;
    for (const VertexSet& h : brute_hereditary_sets(g))
      if (saturate(g, h) == h) brute.push_back(h);
    CHECK(brute.size() == r.sets.size());
    for (const VertexSet& h : brute) CHECK(r.index_of(h) < r.sets.size());
    CHECK(r.sets.front().empty());
    CHECK(r.sets.back() == VertexSet::all(g.vertex_count()));
    for (std::size_t i = 0; i < r.sets.size(); ++i)
      for (std::size_t j = 0; j < r.sets.size(); ++j) {
        CHECK(r.sets[r.meet[i][j]] == (r.sets[i] & r.sets[j]));
        CHECK(r.sets[r.join[i][j]] == saturate(g, r.sets[i] | r.sets[j]));
      }
  }
}

TEST_CASE("order ideals match saturated hereditary sets on the corpus") {
  for (const Graph& g : corpus()) {
    std::string why;
    CHECK_MESSAGE(phi_psi_roundtrip(WordProblem(g), &why), format_graph(g) << why);
  }
}

TEST_CASE("quotient monoids match modular congruence") {
  for (const Graph& g : corpus()) {
    const WordProblem wp(g);
    for (const VertexSet& h : enumerate_hsat(g).sets) {
      const QuotientComparison q = compare_quotient(wp, h, 3);
      CHECK(q.monoid_classes == q.quotient_classes);
      CHECK(q.bijective);
      CHECK_FALSE(q.undecided);
    }
  }
}

TEST_CASE("classification is exhaustive on cofinal graphs") {
  for (const Graph& g : connected_graphs(3, 4)) {
    if (!is_cofinal(g)) continue;
    const SimpleClass c = classify_simple(g);
    const WordProblem wp(g);
    const auto elems = elements_up_to(g.vertex_count(), 3);
    if (c.kind == SimpleKind::loops_with_exit) {
      for (const Element& x : elems) {
        if (x.is_zero()) continue;
        bool absorbs = false;
        for (const Element& y : elems)
          if (!y.is_zero() && wp.compare(x, x + y) == Verdict::equal) absorbs = true;
        CHECK(absorbs);
      }
      continue;
    }
    // Rank-one free: each element is a unique multiple of the witness.
    const Vertex w = c.kind == SimpleKind::sink ? *c.sink : c.loop->source();
    for (const Element& x : elems) {
      std::size_t matches = 0;
      for (long k = 0; k <= 12; ++k)
        if (wp.compare(x, Element::unit(g.vertex_count(), w) * Integer(k)) ==
            Verdict::equal)
          ++matches;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("produced composition series validate") {
  for (const Graph& g : corpus()) {
    const CompositionSeries s = composition_series(g);
    std::string why;
    CHECK_MESSAGE(validate_series(g, s.chain, &why), why);
    CHECK(s.steps.size() + 1 == s.chain.size());
  }
}
