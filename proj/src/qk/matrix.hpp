#pragma once

#include <cstddef>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer &at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix &other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += c * row[b]
  void add_row_multiple(std::size_t a, std::size_t b, const Integer &c);
  // col[a] += c * col[b]
  void add_col_multiple(std::size_t a, std::size_t b, const Integer &c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b);

// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix &a);

// Rank of a family of rational vectors (each of equal length).
std::size_t rational_rank(const std::vector<RationalVector> &vectors);

// Solves sum_i x_i * columns[i] = target exactly. Returns true and fills
// `solution` when the system is consistent and the columns are linearly
// independent; returns false when inconsistent. Throws when the columns are
// dependent (callers enumerate independent subsets only).
bool solve_independent_columns(const std::vector<RationalVector> &columns,
                               const RationalVector &target,
                               RationalVector &solution);

}  // namespace qk
