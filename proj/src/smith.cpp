#include "graphmon/smith.hpp"

#include <optional>

#include "graphmon/error.hpp"

namespace graphmon {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Integer mag = abs(a(i, j));
      if (!best || mag < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(mag);
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& a = out.d;
  const std::size_t limit = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    for (;;) {
      a.swap_rows(t, pivot->row);
      out.u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      out.v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row(i, t, -q);
        out.u.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col(j, t, -q);
        out.v.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold any trailing entry the pivot does not divide
        // into row t and reduce again.
        std::optional<std::size_t> offender;
        for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              offender = i;
              break;
            }
        if (!offender) break;
        a.add_row(t, *offender, 1);
        out.u.add_row(t, *offender, 1);
      }
      // Remainders now sit in row/column t; pick the smallest of those.
      Pivot next{t, t};
      Integer best = abs(a(t, t));
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (sgn(a(i, t)) != 0 && abs(a(i, t)) < best) {
          best = abs(a(i, t));
          next = {i, t};
        }
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (sgn(a(t, j)) != 0 && abs(a(t, j)) < best) {
          best = abs(a(t, j));
          next = {t, j};
        }
      pivot = next;
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      out.u.negate_row(t);
    }
    out.rank = t + 1;
  }
  return out;
}

}  // namespace graphmon
