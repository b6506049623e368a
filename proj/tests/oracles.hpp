#pragma once

// Test-only oracles, independent of the library's implementation paths.

#include <vector>

#include "qk/rational.hpp"

namespace qk::oracles {

// Cone membership by Fourier-Motzkin elimination on {x >= 0, G x = target}.
// Exponential, exact; use only at oracle scale.
struct Constraint {
  RationalVector coeffs;  // sum coeffs[i] x_i <= rhs
  Rational rhs;
};

inline bool fm_feasible(std::vector<Constraint> constraints,
                        std::size_t nvars) {
  for (std::size_t v = nvars; v-- > 0;) {
    std::vector<Constraint> uppers, lowers, rest;
    for (auto &c : constraints) {
      if (c.coeffs[v] > 0) {
        uppers.push_back(c);
      } else if (c.coeffs[v] < 0) {
        lowers.push_back(c);
      } else {
        rest.push_back(c);
      }
    }
    for (const auto &up : uppers) {
      for (const auto &lo : lowers) {
        Constraint merged;
        merged.coeffs.assign(up.coeffs.size(), Rational(0));
        Rational a = up.coeffs[v];
        Rational c = -lo.coeffs[v];
        for (std::size_t i = 0; i < up.coeffs.size(); ++i) {
          merged.coeffs[i] = up.coeffs[i] * c + lo.coeffs[i] * a;
        }
        merged.coeffs[v] = 0;
        merged.rhs = up.rhs * c + lo.rhs * a;
        rest.push_back(std::move(merged));
      }
    }
    constraints = std::move(rest);
  }
  for (const auto &c : constraints) {
    if (c.rhs < 0) return false;
  }
  return true;
}

inline bool cone_contains_oracle(const std::vector<RationalVector> &generators,
                                 const RationalVector &target) {
  std::size_t n = generators.size();
  std::size_t dim = target.size();
  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    Constraint nonneg;
    nonneg.coeffs.assign(n, Rational(0));
    nonneg.coeffs[i] = -1;
    nonneg.rhs = 0;
    constraints.push_back(std::move(nonneg));
  }
  for (std::size_t row = 0; row < dim; ++row) {
    Constraint le, ge;
    le.coeffs.assign(n, Rational(0));
    ge.coeffs.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      le.coeffs[i] = generators[i][row];
      ge.coeffs[i] = -generators[i][row];
    }
    le.rhs = target[row];
    ge.rhs = -target[row];
    constraints.push_back(std::move(le));
    constraints.push_back(std::move(ge));
  }
  return fm_feasible(std::move(constraints), n);
}

}  // namespace qk::oracles
