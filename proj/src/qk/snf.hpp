#pragma once

#include "qk/matrix.hpp"

namespace qk {

// Smith normal form data: U * A * V = D with U, V unimodular and D diagonal
// with positive entries satisfying d1 | d2 | ...
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

// Deterministic elementary-operation SNF; pivot is the nonzero entry of
// minimal absolute value (ties by row, then column). Works for any integer
// matrix, including zero and non-square ones.
SnfResult snf(const IntMatrix &a);

}  // namespace qk
