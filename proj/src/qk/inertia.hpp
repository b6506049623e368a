#pragma once

#include "qk/git_data.hpp"
#include "qk/ring.hpp"

namespace qk {

// One inertia sector of the quotient: a torsion element xi of g_Q/g_Z (each
// entry in [0,1)), the coordinates it fixes, its age grading and its order.
struct Sector {
  RationalVector xi;
  Support fixed_support;
  Rational age;
  long order = 1;

  bool operator==(const Sector &other) const { return xi == other.xi; }
};

// sum_j frac(<mu_j, xi>) over all coordinates, frac in [0,1).
Rational age(const GitData &g, const RationalVector &xi);

// Enumerates the finite stabilizer groups of all minimal semistable supports
// via Smith normal form and returns the deduplicated sectors, each with its
// maximal semistable fixed support, sorted by (order, lex xi). Errors when
// the datum is not Deligne-Mumford (some stabilizer is infinite).
std::vector<Sector> enumerate_sectors(const GitData &g);

// The presentation of the sector's fixed locus: the GIT datum restricted to
// the columns fixed by xi, with the same polarization.
PresentationPtr sector_ring(const GitData &g, const Sector &s);

// The restricted datum itself (exposed for sector serialization).
GitData sector_datum(const GitData &g, const Sector &s);

}  // namespace qk
