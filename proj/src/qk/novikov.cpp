#include "qk/novikov.hpp"

#include <algorithm>

namespace qk {

NovikovDegree make_degree(const GitData &g, const RationalVector &d) {
  if (d.size() != g.r()) throw_invalid("degree vector length must equal rank");
  NovikovDegree degree;
  degree.d = d;
  degree.energy = dot(g.polarization(), d);
  return degree;
}

NovikovDegree zero_degree(const GitData &g) {
  return make_degree(g, RationalVector(g.r(), Rational(0)));
}

bool degree_is_integral(const GitData &g, const NovikovDegree &d) {
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (!is_integer(g.pairing(static_cast<int>(j), d.d))) return false;
  }
  return true;
}

DegreeEnumeration enumerate_degrees(const GitData &g, const Rational &e_max,
                                    const std::vector<std::pair<long, long>> &box,
                                    long denominator) {
  if (denominator < 1) throw_invalid("denominator must be positive");
  if (e_max < 0) throw_invalid("negative energy bound");
  if (box.size() != g.r()) {
    throw_invalid("box must supply one bound pair per torus rank");
  }
  double cells = 1.0;
  for (const auto &[lo, hi] : box) {
    if (lo > hi) throw_invalid("box bounds out of order");
    cells *= static_cast<double>(hi - lo + 1);
    if (cells > 4e6) throw_invalid("enumeration box too large");
  }

  DegreeEnumeration result;
  std::size_t r = g.r();
  std::vector<long> v(r);
  for (std::size_t a = 0; a < r; ++a) v[a] = box[a].first;
  for (;;) {
    RationalVector d(r);
    for (std::size_t a = 0; a < r; ++a) {
      d[a] = make_rational(v[a], denominator);
    }
    NovikovDegree degree = make_degree(g, d);
    if (degree.energy >= 0 && degree.energy <= e_max) {
      // The box truncates iff a qualifying degree sits just outside it.
      if (!result.boundary_touched) {
        for (std::size_t a = 0; a < r; ++a) {
          for (int dir : {-1, +1}) {
            long w = v[a] + dir;
            if (w >= box[a].first && w <= box[a].second) continue;
            RationalVector nd = d;
            nd[a] = make_rational(w, denominator);
            Rational energy = dot(g.polarization(), nd);
            if (energy >= 0 && energy <= e_max) {
              result.boundary_touched = true;
            }
          }
        }
      }
      result.degrees.push_back(std::move(degree));
    }

    std::size_t pos = 0;
    while (pos < r && v[pos] == box[pos].second) {
      v[pos] = box[pos].first;
      ++pos;
    }
    if (pos == r) break;
    ++v[pos];
  }

  std::sort(result.degrees.begin(), result.degrees.end(),
            [](const NovikovDegree &a, const NovikovDegree &b) {
              return DegreeLess{}(a, b);
            });
  result.empty_warning = result.degrees.empty();
  return result;
}

}  // namespace qk
