#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "graphmon/element.hpp"

namespace graphmon {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * m * V == D with U, V unimodular and D diagonal, its nonzero
/// diagonal entries positive and each dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

/// Pivots on the entry of smallest absolute value, scanning rows then
/// columns, until the trailing block is diagonal.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace graphmon
