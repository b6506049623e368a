#pragma once

#include <optional>
#include <vector>

#include "qk/poly.hpp"

namespace qk {

// Full normal form of p against the (not necessarily Groebner) family basis:
// every term is reduced until no leading monomial of the basis divides any
// remaining monomial. Unique for a Groebner basis.
Poly reduce_full(const Poly &p, const std::vector<Poly> &basis);

// Reduced monic Groebner basis in degrevlex, by Buchberger with the normal
// pair strategy (pairs ordered by lcm degree, then insertion order).
std::vector<Poly> buchberger(const std::vector<Poly> &generators);

// Monomials outside the leading-term ideal of a Groebner basis, sorted in
// ascending degrevlex. Empty optional when the quotient ring is infinite
// dimensional.
std::optional<std::vector<Monomial>> standard_monomials(
    const std::vector<Poly> &groebner_basis, int nvars);

}  // namespace qk
