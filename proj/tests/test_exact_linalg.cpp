#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qk/cone.hpp"
#include "qk/error.hpp"
#include "qk/matrix.hpp"
#include "qk/snf.hpp"

using namespace qk;
using qk::oracles::cone_contains_oracle;

namespace {

RationalVector rv(std::initializer_list<long> values) {
  RationalVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("snf identity") {
  SnfResult s = snf(IntMatrix::identity(2));
  CHECK(s.u == IntMatrix::identity(2));
  CHECK(s.d == IntMatrix::identity(2));
  CHECK(s.v == IntMatrix::identity(2));
}

TEST_CASE("snf column vector (2,3)") {
  IntMatrix a(2, 1);
  a.at(0, 0) = 2;
  a.at(1, 0) = 3;
  SnfResult s = snf(a);
  CHECK(s.d.at(0, 0) == 1);  // gcd(2,3) = 1
  CHECK(s.d.at(1, 0) == 0);
  CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
}

TEST_CASE("snf diag(2,3) -> diag(1,6)") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(1, 1) = 3;
  SnfResult s = snf(a);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(0, 1) == 0);
  CHECK(s.d.at(1, 0) == 0);
  CHECK(s.d.at(1, 1) == 6);
  CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
}

TEST_CASE("snf of zero and non-square matrices") {
  IntMatrix zero(3, 2);
  SnfResult s = snf(zero);
  CHECK(s.d == zero);
  CHECK(mat_mul(mat_mul(s.u, zero), s.v) == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);

  IntMatrix wide(1, 3);
  wide.at(0, 0) = 4;
  wide.at(0, 1) = 6;
  wide.at(0, 2) = 9;
  SnfResult w = snf(wide);
  CHECK(w.d.at(0, 0) == 1);  // gcd(4,6,9)
  CHECK(mat_mul(mat_mul(w.u, wide), w.v) == w.d);
}

TEST_CASE("snf properties on 200 random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = size(rng), cols = size(rng);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    }
    SnfResult s = snf(a);
    CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) CHECK(s.d.at(i, j) == 0);
      }
    }
    for (std::size_t t = 0; t + 1 < std::min(rows, cols); ++t) {
      Integer d0 = s.d.at(t, t), d1 = s.d.at(t + 1, t + 1);
      CHECK(d0 >= 0);
      if (d0 == 0) {
        CHECK(d1 == 0);
      } else {
        CHECK(d1 % d0 == 0);
      }
    }
  }
}

TEST_CASE("cone membership examples") {
  CHECK(cone_contains({rv({1, 0}), rv({0, 1})}, rv({1, 1})));
  CHECK_FALSE(cone_contains({rv({1, 0}), rv({0, 1})}, rv({-1, 0})));
  CHECK(cone_contains({rv({2}), rv({3})}, rv({1})));
}

TEST_CASE("cone edge cases") {
  CHECK(cone_contains({}, rv({0, 0})));
  CHECK_FALSE(cone_contains({}, rv({1, 0})));
  CHECK(cone_contains({rv({1, 2}), rv({3, 4})}, rv({0, 0})));
  CHECK_THROWS_AS(cone_contains({rv({1})}, rv({1, 0})), Error);
}

TEST_CASE("cone membership agrees with the elimination oracle") {
  std::mt19937 rng(7177);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> dims(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t dim = dims(rng);
    std::size_t n = count(rng);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector g(dim);
      for (auto &x : g) x = Rational(entry(rng));
      gens.push_back(std::move(g));
    }
    RationalVector target(dim);
    for (auto &x : target) x = Rational(entry(rng));
    CHECK(cone_contains(gens, target) == cone_contains_oracle(gens, target));
  }
}

TEST_CASE("linear span membership") {
  CHECK(linear_span_contains({rv({1, 0})}, rv({2, 0})));
  CHECK_FALSE(linear_span_contains({rv({1, 0})}, rv({0, 1})));
  CHECK(linear_span_contains({rv({2}), rv({3})}, rv({5})));
  CHECK(linear_span_contains({}, rv({0, 0})));
  CHECK_FALSE(linear_span_contains({}, rv({1})));
  CHECK_THROWS_AS(linear_span_contains({rv({1})}, rv({1, 0})), Error);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_to_string(rational_from_string("4/6")) == "2/3");
  CHECK(rational_to_string(rational_from_string("-4/6")) == "-2/3");
  CHECK(rational_to_string(rational_from_string("7")) == "7");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("x"), Error);
  CHECK(fractional_part(make_rational(-3, 2)) == make_rational(1, 2));
  CHECK(fractional_part(Rational(2)) == 0);
}
