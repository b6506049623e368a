#pragma once

#include <map>
#include <string>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

// Exponent multi-index; all monomials of one polynomial share a length.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial &m);

// Graded reverse lexicographic order: higher total degree wins; on equal
// degree the monomial with the *smaller* exponent at the last differing
// variable wins.
bool degrevlex_greater(const Monomial &a, const Monomial &b);

struct DegRevLexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return degrevlex_greater(a, b);
  }
};

// Sparse multivariate polynomial over Q with a fixed variable count.
// Terms are kept in descending degrevlex order, leading term first; zero
// coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, DegRevLexGreater>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational &c);
  static Poly variable(int nvars, int index);  // 0-based variable index
  // sum_i coeffs[i] * x_i
  static Poly linear_form(const RationalVector &coeffs);

  int nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Monomial &m, const Rational &c);

  Poly operator-() const;
  Poly operator+(const Poly &other) const;
  Poly operator-(const Poly &other) const;
  Poly operator*(const Poly &other) const;
  Poly scaled(const Rational &c) const;
  Poly pow(int e) const;

  bool operator==(const Poly &other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  // Substitutes variable i by images[i]; all images share a variable count.
  Poly substitute(const std::vector<Poly> &images) const;

  // Deterministic rendering, e.g. "108*u^5 - 1/2*u1*u2^2 + 3".
  std::string to_string(const std::vector<std::string> &var_names) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Default variable names: u for one variable, u1..ur otherwise (v1..vk via
// the prefix argument).
std::vector<std::string> default_var_names(int nvars, char prefix = 'u');

}  // namespace qk
