#pragma once

#include <string>
#include <vector>

#include "qk/matrix.hpp"
#include "qk/rational.hpp"

namespace qk {

// A subset of the coordinates {1..k} (1-based, strictly increasing) together
// with its semistability flag: semistable iff the polarization lies in the
// cone of the member weights.
struct Support {
  std::vector<int> indices;
  bool semistable = false;

  bool operator==(const Support &other) const = default;
};

// Torus GIT datum: weight matrix (column j is the character mu_j by which the
// torus acts on the j-th coordinate) and a polarization vector nu.
class GitData {
 public:
  // Validates shape, nu != 0, nonzero columns, and that the full support is
  // semistable ("empty semistable locus" otherwise).
  static GitData make(const IntMatrix &weights, const RationalVector &nu,
                      std::vector<std::string> labels = {});

  std::size_t k() const { return weights_.cols(); }
  std::size_t r() const { return weights_.rows(); }
  const IntMatrix &weights() const { return weights_; }
  const RationalVector &polarization() const { return polarization_; }
  const std::vector<std::string> &labels() const { return labels_; }

  // Column j (1-based) as a rational vector in g^vee.
  RationalVector weight_column(int j) const;

  // <mu_j, d> for a rational degree vector d of length r.
  Rational pairing(int j, const RationalVector &d) const;

  // True when the polarization sits in the cone of a rank-deficient weight
  // subset (a wall), i.e. strictly semistable points may exist.
  bool strictly_semistable() const { return strictly_semistable_; }

 private:
  IntMatrix weights_;
  RationalVector polarization_;
  std::vector<std::string> labels_;
  bool strictly_semistable_ = false;
};

// Semistability of an index subset (1-based) of the coordinates.
bool support_is_semistable(const GitData &g, const std::vector<int> &indices);

// X^d = {j : <mu_j, d> >= 0}, flagged with its semistability.
Support limit_support(const GitData &g, const RationalVector &d);

// All inclusion-minimal semistable supports, sorted lexicographically.
std::vector<std::vector<int>> minimal_semistable_supports(const GitData &g);

// All inclusion-minimal S with nu outside the cone of the complementary
// weights, sorted lexicographically.
std::vector<std::vector<int>> unstable_primitive_sets(const GitData &g);

// True iff every minimal semistable support spans g^vee (all semistable
// stabilizers finite).
bool is_dm(const GitData &g);

}  // namespace qk
