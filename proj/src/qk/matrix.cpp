#include "qk/matrix.hpp"

#include <algorithm>

#include "qk/error.hpp"

namespace qk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b,
                                 const Integer &c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b,
                                 const Integer &c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) throw_invalid("matrix shape mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

Integer determinant(const IntMatrix &a) {
  if (a.rows() != a.cols()) throw_invalid("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Integer(1);

  // Bareiss fraction-free elimination; all divisions are exact.
  IntMatrix m = a;
  Integer prev(1);
  int sign = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (m.at(t, t) == 0) {
      std::size_t pivot = t;
      while (pivot < n && m.at(pivot, t) == 0) ++pivot;
      if (pivot == n) return Integer(0);
      m.swap_rows(t, pivot);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer num = m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j);
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  Integer det = m.at(n - 1, n - 1);
  return sign > 0 ? det : Integer(-det);
}

std::size_t rational_rank(const std::vector<RationalVector> &vectors) {
  if (vectors.empty()) return 0;
  std::size_t dim = vectors[0].size();
  for (const auto &v : vectors) {
    if (v.size() != dim) throw_invalid("dimension mismatch in rank");
  }
  std::vector<RationalVector> rows = vectors;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < dim; ++j) {
        rows[i][j] -= f * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

bool solve_independent_columns(const std::vector<RationalVector> &columns,
                               const RationalVector &target,
                               RationalVector &solution) {
  std::size_t k = columns.size();
  std::size_t dim = target.size();
  for (const auto &c : columns) {
    if (c.size() != dim) throw_invalid("dimension mismatch in solve");
  }
  // Augmented system [columns | target], Gauss-Jordan over Q.
  std::vector<RationalVector> aug(dim, RationalVector(k + 1, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
    aug[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t pivot = row;
    while (pivot < dim && aug[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw_invalid("dependent columns in solve");
    std::swap(aug[row], aug[pivot]);
    Rational inv = aug[row][col];
    for (std::size_t j = col; j <= k; ++j) aug[row][j] /= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (std::size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  if (row < k) throw_invalid("dependent columns in solve");
  for (std::size_t i = row; i < dim; ++i) {
    if (aug[i][k] != 0) return false;  // inconsistent
  }
  solution.assign(k, Rational(0));
  for (std::size_t i = 0; i < row; ++i) {
    solution[pivot_col_of_row[i]] = aug[i][k];
  }
  return true;
}

}  // namespace qk
