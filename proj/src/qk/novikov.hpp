#pragma once

#include <map>
#include <vector>

#include "qk/error.hpp"
#include "qk/git_data.hpp"
#include "qk/rational.hpp"

namespace qk {

// A degree d in H_2^G(X,Q) = g_Q with its cached energy <nu, d>.
struct NovikovDegree {
  RationalVector d;
  Rational energy;

  bool operator==(const NovikovDegree &other) const { return d == other.d; }
};

NovikovDegree make_degree(const GitData &g, const RationalVector &d);
NovikovDegree zero_degree(const GitData &g);

// True when every pairing <mu_j, d> is an integer.
bool degree_is_integral(const GitData &g, const NovikovDegree &d);

// Canonical order: by energy, then lexicographically on the vector.
struct DegreeLess {
  bool operator()(const NovikovDegree &a, const NovikovDegree &b) const {
    if (a.energy != b.energy) return a.energy < b.energy;
    return compare_lex(a.d, b.d) < 0;
  }
};

// Coefficient operations for NovikovSeries, specialized per coefficient type.
template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static bool is_zero(const Rational &c) { return c == 0; }
  static Rational add(const Rational &a, const Rational &b) { return a + b; }
  static Rational scale(const Rational &a, const Rational &s) { return a * s; }
  static Rational mul(const Rational &a, const Rational &b) { return a * b; }
};

// Energy-truncated formal sum over degrees with coefficients in C. Only
// degrees with 0 <= energy <= cutoff are representable; insertion outside
// that window is an error, except that products silently drop terms that
// exceed the cutoff.
template <typename C>
class NovikovSeries {
 public:
  using Terms = std::map<NovikovDegree, C, DegreeLess>;

  NovikovSeries(std::size_t rank, Rational cutoff)
      : rank_(rank), cutoff_(std::move(cutoff)) {
    if (cutoff_ < 0) throw_invalid("negative energy cutoff");
  }

  std::size_t rank() const { return rank_; }
  const Rational &cutoff() const { return cutoff_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const NovikovDegree &degree, const C &coeff) {
    if (degree.d.size() != rank_) throw_invalid("degree rank mismatch");
    if (degree.energy < 0) {
      throw_invalid("negative-energy degree in Novikov series");
    }
    if (degree.energy > cutoff_) {
      throw_invalid("degree exceeds the series energy cutoff");
    }
    if (CoeffOps<C>::is_zero(coeff)) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
      terms_.emplace(degree, coeff);
    } else {
      it->second = CoeffOps<C>::add(it->second, coeff);
      if (CoeffOps<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  const C *coefficient(const NovikovDegree &degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? nullptr : &it->second;
  }

  bool operator==(const NovikovSeries &other) const {
    return rank_ == other.rank_ && cutoff_ == other.cutoff_ &&
           terms_ == other.terms_;
  }

 private:
  std::size_t rank_;
  Rational cutoff_;
  Terms terms_;
};

template <typename C>
void check_compatible(const NovikovSeries<C> &a, const NovikovSeries<C> &b) {
  if (a.rank() != b.rank()) throw_invalid("Novikov series rank mismatch");
  if (a.cutoff() != b.cutoff()) {
    throw_invalid("Novikov series cutoff mismatch");
  }
}

template <typename C>
NovikovSeries<C> nov_add(const NovikovSeries<C> &a, const NovikovSeries<C> &b) {
  check_compatible(a, b);
  NovikovSeries<C> out = a;
  for (const auto &[degree, coeff] : b.terms()) out.add_term(degree, coeff);
  return out;
}

template <typename C>
NovikovSeries<C> nov_scale(const NovikovSeries<C> &a, const Rational &s) {
  NovikovSeries<C> out(a.rank(), a.cutoff());
  if (s == 0) return out;
  for (const auto &[degree, coeff] : a.terms()) {
    out.add_term(degree, CoeffOps<C>::scale(coeff, s));
  }
  return out;
}

// Convolution; product terms past the cutoff are discarded.
template <typename C>
NovikovSeries<C> nov_mul(const NovikovSeries<C> &a, const NovikovSeries<C> &b) {
  check_compatible(a, b);
  NovikovSeries<C> out(a.rank(), a.cutoff());
  for (const auto &[da, ca] : a.terms()) {
    for (const auto &[db, cb] : b.terms()) {
      NovikovDegree degree;
      degree.d.resize(a.rank());
      for (std::size_t i = 0; i < a.rank(); ++i) {
        degree.d[i] = da.d[i] + db.d[i];
      }
      degree.energy = da.energy + db.energy;
      if (degree.energy > a.cutoff()) continue;
      out.add_term(degree, CoeffOps<C>::mul(ca, cb));
    }
  }
  return out;
}

// Degree shift by q^shift; terms past the cutoff are discarded.
template <typename C>
NovikovSeries<C> nov_shift(const NovikovSeries<C> &a,
                           const NovikovDegree &shift) {
  if (shift.energy < 0) throw_invalid("negative-energy degree shift");
  NovikovSeries<C> out(a.rank(), a.cutoff());
  for (const auto &[degree, coeff] : a.terms()) {
    NovikovDegree moved;
    moved.d.resize(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      moved.d[i] = degree.d[i] + shift.d[i];
    }
    moved.energy = degree.energy + shift.energy;
    if (moved.energy > a.cutoff()) continue;
    out.add_term(moved, coeff);
  }
  return out;
}

// Restriction to terms of energy <= bound (bound <= cutoff keeps semantics).
template <typename C>
NovikovSeries<C> nov_truncate(const NovikovSeries<C> &a,
                              const Rational &bound) {
  NovikovSeries<C> out(a.rank(), bound);
  for (const auto &[degree, coeff] : a.terms()) {
    if (degree.energy <= bound) out.add_term(degree, coeff);
  }
  return out;
}

// Restriction to terms of energy >= floor, keeping the cutoff.
template <typename C>
NovikovSeries<C> nov_restrict_min_energy(const NovikovSeries<C> &a,
                                         const Rational &floor) {
  NovikovSeries<C> out(a.rank(), a.cutoff());
  for (const auto &[degree, coeff] : a.terms()) {
    if (degree.energy >= floor) out.add_term(degree, coeff);
  }
  return out;
}

struct DegreeEnumeration {
  std::vector<NovikovDegree> degrees;
  bool empty_warning = false;     // no degree qualified
  bool boundary_touched = false;  // some kept degree sits on the box boundary
};

// All d = (integer vector)/denominator with the integer vector inside the
// box and 0 <= <nu,d> <= e_max, sorted by (energy, lex).
DegreeEnumeration enumerate_degrees(const GitData &g, const Rational &e_max,
                                    const std::vector<std::pair<long, long>> &box,
                                    long denominator);

}  // namespace qk
