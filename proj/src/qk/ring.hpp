#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qk/git_data.hpp"
#include "qk/groebner.hpp"
#include "qk/poly.hpp"

namespace qk {

// One Stanley-Reisner generator together with the unstable set and curve
// degree that produced it.
struct SrGenerator {
  std::vector<int> unstable_set;   // 1-based coordinate indices
  RationalVector degree;           // canonical effective degree, length r
  std::vector<long> exponents;     // exponent of mu_j per member of the set
  Poly generator;                  // prod_{j in S} mu_j^{e_j}
};

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

// A class of the quotient ring, stored as the unique degrevlex normal form
// against the presentation's Groebner basis.
struct RingElement {
  PresentationPtr presentation;
  Poly value;

  bool is_zero() const { return value.is_zero(); }
  bool operator==(const RingElement &other) const {
    return value == other.value;
  }
};

// Presentation of the quotient cohomology as Sym(g^vee) modulo the
// Stanley-Reisner ideal of the unstable primitive sets.
class RingPresentation
    : public std::enable_shared_from_this<RingPresentation> {
 public:
  const GitData &git() const { return git_; }
  int nvars() const { return static_cast<int>(git_.r()); }
  const std::vector<SrGenerator> &sr_generators() const { return sr_; }
  const std::vector<Poly> &groebner_basis() const { return basis_; }

  // Monomial basis of the quotient as a vector space; empty optional when
  // infinite dimensional.
  const std::optional<std::vector<Monomial>> &standard_basis() const {
    return standard_;
  }
  bool finite_dimensional() const { return standard_.has_value(); }
  std::size_t dimension() const;

  const std::vector<std::string> &warnings() const { return warnings_; }

  RingElement normal_form(const Poly &p) const;
  RingElement unit() const;
  RingElement zero() const;

  // Image of mu_j under the presentation (1-based), in normal form.
  RingElement divisor_class(int j) const;

  // Least n >= 1 with divisor_class(j)^n == 0; requires finite dimension.
  int nilpotency_degree(int j) const;

  PresentationPtr shared() const { return shared_from_this(); }

  friend PresentationPtr build_presentation(const GitData &g);

 private:
  RingPresentation() = default;

  GitData git_;
  std::vector<SrGenerator> sr_;
  std::vector<Poly> basis_;
  std::optional<std::vector<Monomial>> standard_;
  std::vector<std::string> warnings_;
};

// Builds the presentation: one generator per unstable primitive set S, with
// exponents read off the canonical effective degree isolating S (pairings
// normalized to coprime positive integers), then a reduced Groebner basis.
PresentationPtr build_presentation(const GitData &g);

// The classical Kirwan map: the presentation realizes the surjection from
// Sym(g^vee), so this is normal_form.
RingElement kirwan_classical(const Poly &p, const RingPresentation &pres);

// p(v + phi), exact expansion; phi must have length nvars.
Poly translate(const Poly &p, const RationalVector &phi);

// p(v + zeta*phi) as a polynomial in zeta with Poly coefficients, indexed by
// the zeta exponent.
std::vector<std::pair<int, Poly>> translate_zeta(const Poly &p,
                                                 const RationalVector &phi);

}  // namespace qk
