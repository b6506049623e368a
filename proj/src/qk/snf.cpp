#include "qk/snf.hpp"

#include <cstdlib>

namespace qk {

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t,t);
// returns false when the block is zero.
bool find_pivot(const IntMatrix &m, std::size_t t, std::size_t &pi,
                std::size_t &pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      Integer a = abs(m.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix &a) {
  SnfResult result;
  result.d = a;
  result.u = IntMatrix::identity(a.rows());
  result.v = IntMatrix::identity(a.cols());
  IntMatrix &d = result.d;
  IntMatrix &u = result.u;
  IntMatrix &v = result.v;

  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot, then row t; repeat until both stay
      // clear (remainders may reintroduce entries with smaller pivots).
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t qi, qj;
        find_pivot(d, t, qi, qj);
        d.swap_rows(t, qi);
        u.swap_rows(t, qi);
        d.swap_cols(t, qj);
        v.swap_cols(t, qj);
        continue;
      }

      // Divisibility fix-up: fold a non-divisible entry into row t.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i) {
        for (std::size_t j = t + 1; j < d.cols() && fixed; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return result;
}

}  // namespace qk
