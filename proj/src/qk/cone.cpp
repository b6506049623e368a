#include "qk/cone.hpp"

#include <cstddef>

#include "qk/error.hpp"
#include "qk/matrix.hpp"

namespace qk {

namespace {

bool all_nonnegative(const RationalVector &v) {
  for (const auto &x : v) {
    if (x < 0) return false;
  }
  return true;
}

// Enumerates subsets of {0..n-1} of size exactly m in lexicographic order.
bool subset_solves(const std::vector<RationalVector> &generators,
                   const RationalVector &target, std::size_t m) {
  std::size_t n = generators.size();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    std::vector<RationalVector> cols;
    cols.reserve(m);
    for (std::size_t i : idx) cols.push_back(generators[i]);
    if (rational_rank(cols) == m) {
      RationalVector solution;
      if (solve_independent_columns(cols, target, solution) &&
          all_nonnegative(solution)) {
        return true;
      }
    }
    // next combination
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool cone_contains(const std::vector<RationalVector> &generators,
                   const RationalVector &target) {
  if (is_zero_vector(target)) return true;
  if (generators.empty()) return false;
  std::size_t dim = target.size();
  for (const auto &g : generators) {
    if (g.size() != dim) throw_invalid("dimension mismatch in cone test");
  }
  std::size_t cap = std::min(dim, generators.size());
  for (std::size_t m = 1; m <= cap; ++m) {
    if (subset_solves(generators, target, m)) return true;
  }
  return false;
}

bool linear_span_contains(const std::vector<RationalVector> &generators,
                          const RationalVector &target) {
  std::size_t dim = target.size();
  for (const auto &g : generators) {
    if (g.size() != dim) throw_invalid("dimension mismatch in span test");
  }
  if (is_zero_vector(target)) return true;
  std::size_t base = rational_rank(generators);
  std::vector<RationalVector> extended = generators;
  extended.push_back(target);
  return rational_rank(extended) == base;
}

}  // namespace qk
