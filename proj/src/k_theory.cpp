#include "graphmon/k_theory.hpp"

#include "graphmon/error.hpp"
#include "graphmon/path_counts.hpp"

namespace graphmon {

RelationMatrix relation_matrix(const Graph& g) {
  RelationMatrix out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.is_sink(v)) out.row_vertices.push_back(v);
  out.matrix = IntMatrix(out.row_vertices.size(), g.vertex_count());
  for (std::size_t r = 0; r < out.row_vertices.size(); ++r) {
    const Vertex v = out.row_vertices[r];
    out.matrix(r, v) += 1;
    for (EdgeIndex e : g.out_edges(v)) out.matrix(r, g.edge(e).range) -= 1;
  }
  return out;
}

// ------------------------------------------------------------ GroupElement

bool GroupElement::is_identity() const {
  for (const auto& x : free)
    if (sgn(x) != 0) return false;
  for (const auto& x : torsion)
    if (sgn(x) != 0) return false;
  return true;
}

std::strong_ordering GroupElement::compare(const std::vector<Integer>& a,
                                           const std::vector<Integer>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------- GroupPresentation

GroupPresentation::GroupPresentation(const IntMatrix& relations) {
  SmithForm snf = smith_normal_form(relations);
  transform_ = std::move(snf.v);
  rank_ = snf.rank;
  for (std::size_t j = 0; j < rank_; ++j) {
    const Integer& d = snf.d(j, j);
    if (d != 1) {
      torsion_cols_.push_back(j);
      torsion_.push_back(d);
    }
  }
  free_rank_ = relations.cols() - rank_;
}

GroupElement GroupPresentation::image_of_vector(
    const std::vector<Integer>& x) const {
  const std::size_t n = transform_.rows();
  if (x.size() != n) throw DomainError("vector does not match the group");
  std::vector<Integer> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * transform_(i, j);
  }
  GroupElement out;
  for (std::size_t j = rank_; j < n; ++j) out.free.push_back(y[j]);
  for (std::size_t t = 0; t < torsion_cols_.size(); ++t) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[torsion_cols_[t]].get_mpz_t(),
               torsion_[t].get_mpz_t());
    out.torsion.push_back(r);
  }
  return out;
}

GroupElement GroupPresentation::image(const Element& x) const {
  std::vector<Integer> v(x.universe());
  for (Vertex i = 0; i < x.universe(); ++i) v[i] = x[i];
  return image_of_vector(v);
}

GroupElement GroupPresentation::add(const GroupElement& a,
                                    const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free[i];
  for (std::size_t t = 0; t < out.torsion.size(); ++t) {
    out.torsion[t] += b.torsion[t];
    mpz_fdiv_r(out.torsion[t].get_mpz_t(), out.torsion[t].get_mpz_t(),
               torsion_[t].get_mpz_t());
  }
  return out;
}

bool GroupPresentation::spans(const std::vector<GroupElement>& elems) const {
  const std::size_t width = free_rank_ + torsion_.size();
  if (width == 0) return true;
  IntMatrix m(elems.size() + torsion_.size(), width);
  for (std::size_t r = 0; r < elems.size(); ++r) {
    for (std::size_t j = 0; j < free_rank_; ++j) m(r, j) = elems[r].free[j];
    for (std::size_t t = 0; t < torsion_.size(); ++t)
      m(r, free_rank_ + t) = elems[r].torsion[t];
  }
  for (std::size_t t = 0; t < torsion_.size(); ++t)
    m(elems.size() + t, free_rank_ + t) = torsion_[t];
  SmithForm snf = smith_normal_form(m);
  if (snf.rank != width) return false;
  for (std::size_t i = 0; i < width; ++i)
    if (snf.d(i, i) != 1) return false;
  return true;
}

std::string GroupPresentation::format(const GroupElement& x) const {
  std::string out = "(";
  bool first = true;
  for (const auto& f : x.free) {
    if (!first) out += ", ";
    out += f.get_str();
    first = false;
  }
  for (std::size_t t = 0; t < x.torsion.size(); ++t) {
    if (!first) out += ", ";
    out += x.torsion[t].get_str() + " mod " + torsion_[t].get_str();
    first = false;
  }
  return out + ")";
}

GroupPresentation grothendieck_group(const Graph& g) {
  return GroupPresentation(relation_matrix(g).matrix);
}

GroupPresentation subquotient_group(const Graph& g, const VertexSet& within,
                                    const VertexSet& killed) {
  std::vector<std::vector<Integer>> rows;
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (!within.contains(v) || killed.contains(v)) {
      std::vector<Integer> row(n);
      row[v] = 1;
      rows.push_back(std::move(row));
    } else if (!g.is_sink(v)) {
      std::vector<Integer> row(n);
      row[v] += 1;
      for (EdgeIndex e : g.out_edges(v)) row[g.edge(e).range] -= 1;
      rows.push_back(std::move(row));
    }
  }
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return GroupPresentation(m);
}

GroupElement group_image(const Graph& g, const Element& x) {
  if (x.universe() != g.vertex_count())
    throw DomainError("element does not belong to the graph");
  return grothendieck_group(g).image(x);
}

std::set<GroupElement> positive_cone_probe(const Graph& g,
                                           std::size_t size_bound) {
  const GroupPresentation k0 = grothendieck_group(g);
  std::set<GroupElement> out;
  for (const Element& x : elements_up_to(g.vertex_count(), size_bound))
    out.insert(k0.image(x));
  return out;
}

// -------------------------------------------------------------- filtration

FiltrationShape matricial_filtration(const Graph& g, std::size_t level) {
  FiltrationShape out;
  out.level = level;
  const auto counts = path_counts(g, level);
  for (std::size_t i = 0; i < level; ++i)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.is_sink(v)) out.blocks.push_back({v, counts[i][v], i});
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out.blocks.push_back({v, counts[level][v], level});
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
      if (std::size_t k = g.adjacency(v, w); k > 0)
        out.transitions.push_back({v, w, k});
  }
  return out;
}

}  // namespace graphmon
