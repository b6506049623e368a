#include "qk/inertia.hpp"

#include <algorithm>

#include "qk/error.hpp"
#include "qk/snf.hpp"

namespace qk {

namespace {

// Representative of x mod 1 in [0,1).
Rational mod_one(const Rational &x) { return fractional_part(x); }

long order_of(const RationalVector &xi) {
  Integer l(1);
  for (const auto &x : xi) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (!l.fits_slong_p()) throw_invalid("sector order out of range");
  return l.get_si();
}

// All xi in g_Q/g_Z with <mu_j, xi> integral for every j in the support.
// Finite exactly when the support weights span g^vee.
std::vector<RationalVector> stabilizer_elements(const GitData &g,
                                                const std::vector<int> &support) {
  std::size_t r = g.r();
  std::size_t m = support.size();
  // Rows of A are the weights mu_j, j in support: condition A xi in Z^m.
  IntMatrix a(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      a.at(i, c) = g.weights().at(c, support[i] - 1);
    }
  }
  SnfResult s = snf(a);
  // With U A V = D and eta = V^{-1} xi: A xi integral iff D eta integral,
  // so eta_i ranges over (1/d_i) Z / Z. Any zero d_i (rank < r) gives an
  // infinite family.
  std::vector<long> diag(r, 0);
  for (std::size_t t = 0; t < std::min(m, r); ++t) {
    Integer d = s.d.at(t, t);
    if (!d.fits_slong_p()) throw_invalid("stabilizer order out of range");
    diag[t] = d.get_si();
  }
  for (std::size_t t = 0; t < r; ++t) {
    if (diag[t] == 0) {
      throw_precondition(
          "not Deligne-Mumford: infinite stabilizer on a semistable support");
    }
  }

  std::vector<RationalVector> elements;
  std::vector<long> counter(r, 0);
  for (;;) {
    RationalVector eta(r);
    for (std::size_t t = 0; t < r; ++t) {
      eta[t] = make_rational(counter[t], diag[t]);
    }
    // xi = V eta, reduced mod 1.
    RationalVector xi(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        xi[i] += Rational(s.v.at(i, j)) * eta[j];
      }
      xi[i] = mod_one(xi[i]);
    }
    elements.push_back(std::move(xi));

    std::size_t pos = 0;
    while (pos < r && counter[pos] == diag[pos] - 1) counter[pos++] = 0;
    if (pos == r) break;
    ++counter[pos];
  }
  return elements;
}

}  // namespace

Rational age(const GitData &g, const RationalVector &xi) {
  if (xi.size() != g.r()) throw_invalid("sector vector length must equal rank");
  Rational total = 0;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    total += fractional_part(g.pairing(static_cast<int>(j), xi));
  }
  return total;
}

std::vector<Sector> enumerate_sectors(const GitData &g) {
  std::vector<Sector> sectors;
  for (const auto &support : minimal_semistable_supports(g)) {
    for (RationalVector &xi : stabilizer_elements(g, support)) {
      Sector sector;
      sector.xi = std::move(xi);
      bool duplicate = false;
      for (const Sector &existing : sectors) {
        if (existing.xi == sector.xi) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      for (std::size_t j = 1; j <= g.k(); ++j) {
        if (is_integer(g.pairing(static_cast<int>(j), sector.xi))) {
          sector.fixed_support.indices.push_back(static_cast<int>(j));
        }
      }
      sector.fixed_support.semistable =
          support_is_semistable(g, sector.fixed_support.indices);
      sector.age = age(g, sector.xi);
      sector.order = order_of(sector.xi);
      sectors.push_back(std::move(sector));
    }
  }
  std::sort(sectors.begin(), sectors.end(),
            [](const Sector &a, const Sector &b) {
              if (a.order != b.order) return a.order < b.order;
              return compare_lex(a.xi, b.xi) < 0;
            });
  return sectors;
}

GitData sector_datum(const GitData &g, const Sector &s) {
  const auto &indices = s.fixed_support.indices;
  if (indices.empty()) {
    throw_precondition("sector has empty fixed support");
  }
  IntMatrix weights(g.r(), indices.size());
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < indices.size(); ++c) {
    for (std::size_t a = 0; a < g.r(); ++a) {
      weights.at(a, c) = g.weights().at(a, indices[c] - 1);
    }
    if (!g.labels().empty()) labels.push_back(g.labels()[indices[c] - 1]);
  }
  return GitData::make(weights, g.polarization(), std::move(labels));
}

PresentationPtr sector_ring(const GitData &g, const Sector &s) {
  return build_presentation(sector_datum(g, s));
}

}  // namespace qk
