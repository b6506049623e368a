#pragma once

#include "qk/git_data.hpp"

namespace qk::fixtures {

// C^k with all weights one: the projective space quotient P^{k-1}.
inline GitData proj_space(int k) {
  IntMatrix weights(1, k);
  for (int j = 0; j < k; ++j) weights.at(0, j) = 1;
  return GitData::make(weights, {Rational(1)});
}

// Weights (2,3): the weighted projective line P[2,3].
inline GitData wp23() {
  IntMatrix weights(1, 2);
  weights.at(0, 0) = 2;
  weights.at(0, 1) = 3;
  return GitData::make(weights, {Rational(1)});
}

// Weights (1,2): P[1,2].
inline GitData wp12() {
  IntMatrix weights(1, 2);
  weights.at(0, 0) = 1;
  weights.at(0, 1) = 2;
  return GitData::make(weights, {Rational(1)});
}

// Weights e1,e1,e2,e2 with nu=(1,1): P^1 x P^1.
inline GitData p1xp1() {
  IntMatrix weights(2, 4);
  weights.at(0, 0) = 1;
  weights.at(0, 1) = 1;
  weights.at(1, 2) = 1;
  weights.at(1, 3) = 1;
  return GitData::make(weights, {Rational(1), Rational(1)});
}

// Weights (1,1,-1): the total space of O(-1) over P^1.
inline GitData local_p1() {
  IntMatrix weights(1, 3);
  weights.at(0, 0) = 1;
  weights.at(0, 1) = 1;
  weights.at(0, 2) = -1;
  return GitData::make(weights, {Rational(1)});
}

// Weights (1,1,-2): the total space of O(-2) over P^1; the degree-one box
// operator has a two-step quantum side.
inline GitData local_p1_k2() {
  IntMatrix weights(1, 3);
  weights.at(0, 0) = 1;
  weights.at(0, 1) = 1;
  weights.at(0, 2) = -2;
  return GitData::make(weights, {Rational(1)});
}

// Weights e1 x4, e2 x4 with nu=(1,1): P^3 x P^3, an eight-coordinate datum.
inline GitData p3xp3() {
  IntMatrix weights(2, 8);
  for (int j = 0; j < 4; ++j) weights.at(0, j) = 1;
  for (int j = 4; j < 8; ++j) weights.at(1, j) = 1;
  return GitData::make(weights, {Rational(1), Rational(1)});
}

// Weights (1,0),(1,0),(0,1),(-1,1) with nu=(1,1): the first Hirzebruch
// surface. Its Stanley-Reisner ideal is not monomial, so the Groebner
// engine has real work to do.
inline GitData hirzebruch1() {
  IntMatrix weights(2, 4);
  weights.at(0, 0) = 1;
  weights.at(0, 1) = 1;
  weights.at(1, 2) = 1;
  weights.at(0, 3) = -1;
  weights.at(1, 3) = 1;
  return GitData::make(weights, {Rational(1), Rational(1)});
}

// Weights (1,0),(0,1),(1,1) with nu=(2,1): a rank-2 datum with a singleton
// unstable primitive set.
inline GitData rank2_chamber() {
  IntMatrix weights(2, 3);
  weights.at(0, 0) = 1;
  weights.at(1, 1) = 1;
  weights.at(0, 2) = 1;
  weights.at(1, 2) = 1;
  return GitData::make(weights, {Rational(2), Rational(1)});
}

}  // namespace qk::fixtures
