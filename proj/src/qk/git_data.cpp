#include "qk/git_data.hpp"

#include <algorithm>

#include "qk/cone.hpp"
#include "qk/error.hpp"

namespace qk {

namespace {

constexpr std::size_t kMaxCoordinates = 16;

std::vector<RationalVector> columns_of(const GitData &g,
                                       const std::vector<int> &indices) {
  std::vector<RationalVector> cols;
  cols.reserve(indices.size());
  for (int j : indices) cols.push_back(g.weight_column(j));
  return cols;
}

// Subsets of {1..k} from an unsigned mask, ascending indices.
std::vector<int> mask_to_indices(std::size_t mask, std::size_t k) {
  std::vector<int> indices;
  for (std::size_t j = 0; j < k; ++j) {
    if (mask & (std::size_t(1) << j)) indices.push_back(static_cast<int>(j + 1));
  }
  return indices;
}

}  // namespace

GitData GitData::make(const IntMatrix &weights, const RationalVector &nu,
                      std::vector<std::string> labels) {
  if (weights.rows() == 0 || weights.cols() == 0) {
    throw_invalid("weight matrix must be nonempty");
  }
  if (weights.cols() > kMaxCoordinates) {
    throw_invalid("too many coordinates (desk-scale limit is 16)");
  }
  if (nu.size() != weights.rows()) {
    throw_invalid("polarization length must equal the torus rank");
  }
  if (is_zero_vector(nu)) throw_invalid("zero polarization");
  if (!labels.empty() && labels.size() != weights.cols()) {
    throw_invalid("label count must equal the number of coordinates");
  }

  GitData g;
  g.weights_ = weights;
  g.polarization_ = nu;
  g.labels_ = std::move(labels);

  for (std::size_t j = 0; j < g.k(); ++j) {
    bool zero = true;
    for (std::size_t a = 0; a < g.r(); ++a) {
      if (weights.at(a, j) != 0) zero = false;
    }
    if (zero) {
      throw_invalid("zero weight column " + std::to_string(j + 1) +
                    " (trivial factor)");
    }
  }

  std::vector<int> full(g.k());
  for (std::size_t j = 0; j < g.k(); ++j) full[j] = static_cast<int>(j + 1);
  if (!cone_contains(columns_of(g, full), nu)) {
    throw_invalid("empty semistable locus: polarization outside the weight cone");
  }

  // Wall detection: nu in the cone of a rank-deficient weight subset. It
  // suffices to scan the spans of independent subsets of size < r and cone
  // over all weights inside each span.
  std::size_t k = g.k();
  std::size_t r = g.r();
  std::vector<std::vector<int>> small_subsets{{}};
  for (std::size_t size = 1; size + 1 <= r && !g.strictly_semistable_;
       ++size) {
    std::vector<std::vector<int>> next;
    for (const auto &base : small_subsets) {
      int start = base.empty() ? 1 : base.back() + 1;
      for (int j = start; j <= static_cast<int>(k); ++j) {
        std::vector<int> subset = base;
        subset.push_back(j);
        auto cols = columns_of(g, subset);
        if (rational_rank(cols) != subset.size()) continue;
        std::vector<RationalVector> members;
        for (std::size_t m = 1; m <= k; ++m) {
          auto candidate = cols;
          candidate.push_back(g.weight_column(static_cast<int>(m)));
          if (rational_rank(candidate) == subset.size()) {
            members.push_back(g.weight_column(static_cast<int>(m)));
          }
        }
        if (cone_contains(members, nu)) {
          g.strictly_semistable_ = true;
          break;
        }
        next.push_back(std::move(subset));
      }
      if (g.strictly_semistable_) break;
    }
    small_subsets = std::move(next);
  }
  return g;
}

RationalVector GitData::weight_column(int j) const {
  if (j < 1 || static_cast<std::size_t>(j) > k()) {
    throw_invalid("coordinate index out of range");
  }
  RationalVector col(r());
  for (std::size_t a = 0; a < r(); ++a) {
    col[a] = Rational(weights_.at(a, j - 1));
  }
  return col;
}

Rational GitData::pairing(int j, const RationalVector &d) const {
  if (d.size() != r()) throw_invalid("degree vector length must equal rank");
  return dot(weight_column(j), d);
}

bool support_is_semistable(const GitData &g, const std::vector<int> &indices) {
  return cone_contains(columns_of(g, indices), g.polarization());
}

Support limit_support(const GitData &g, const RationalVector &d) {
  if (d.size() != g.r()) throw_invalid("degree vector length must equal rank");
  Support s;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (g.pairing(static_cast<int>(j), d) >= 0) {
      s.indices.push_back(static_cast<int>(j));
    }
  }
  s.semistable = support_is_semistable(g, s.indices);
  return s;
}

std::vector<std::vector<int>> minimal_semistable_supports(const GitData &g) {
  std::size_t k = g.k();
  std::vector<bool> semistable(std::size_t(1) << k, false);
  for (std::size_t mask = 0; mask < semistable.size(); ++mask) {
    semistable[mask] = support_is_semistable(g, mask_to_indices(mask, k));
  }
  std::vector<std::vector<int>> minimal;
  for (std::size_t mask = 1; mask < semistable.size(); ++mask) {
    if (!semistable[mask]) continue;
    bool is_minimal = true;
    for (std::size_t j = 0; j < k && is_minimal; ++j) {
      std::size_t bit = std::size_t(1) << j;
      if ((mask & bit) && semistable[mask ^ bit]) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(mask_to_indices(mask, k));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<std::vector<int>> unstable_primitive_sets(const GitData &g) {
  std::size_t k = g.k();
  std::size_t full = (std::size_t(1) << k) - 1;
  // unstable[mask] means: nu is not in the cone of the complement of mask.
  std::vector<bool> unstable(full + 1, false);
  for (std::size_t mask = 0; mask <= full; ++mask) {
    unstable[mask] =
        !support_is_semistable(g, mask_to_indices(full & ~mask, k));
  }
  std::vector<std::vector<int>> minimal;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (!unstable[mask]) continue;
    bool is_minimal = true;
    for (std::size_t j = 0; j < k && is_minimal; ++j) {
      std::size_t bit = std::size_t(1) << j;
      if ((mask & bit) && unstable[mask ^ bit]) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(mask_to_indices(mask, k));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool is_dm(const GitData &g) {
  for (const auto &support : minimal_semistable_supports(g)) {
    std::vector<RationalVector> cols;
    cols.reserve(support.size());
    for (int j : support) cols.push_back(g.weight_column(j));
    if (rational_rank(cols) < g.r()) return false;
  }
  return true;
}

}  // namespace qk
