#pragma once

#include <vector>

#include "qk/rational.hpp"

namespace qk {

// True iff target is a nonnegative rational combination of the generators.
// Caratheodory enumeration: a point of the cone lies in the cone of some
// linearly independent subset of size <= dim, so it suffices to test those
// subsets with an exact linear solve.
bool cone_contains(const std::vector<RationalVector> &generators,
                   const RationalVector &target);

// True iff target lies in the Q-linear span of the generators (rank test).
bool linear_span_contains(const std::vector<RationalVector> &generators,
                          const RationalVector &target);

}  // namespace qk
