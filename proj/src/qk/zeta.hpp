#pragma once

#include <map>

#include "qk/novikov.hpp"
#include "qk/ring.hpp"

namespace qk {

// Laurent polynomial in the equivariant parameter zeta with quotient-ring
// coefficients (each stored in normal form). Finiteness comes from the
// nilpotency of the divisor classes, so no truncation in zeta is needed.
class ZetaElement {
 public:
  ZetaElement() = default;
  explicit ZetaElement(PresentationPtr pres) : pres_(std::move(pres)) {}

  static ZetaElement unit(PresentationPtr pres);

  const PresentationPtr &presentation() const { return pres_; }
  const std::map<int, Poly> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int zeta_exp, const Poly &value);

  ZetaElement operator+(const ZetaElement &other) const;
  ZetaElement operator-(const ZetaElement &other) const;
  ZetaElement operator*(const ZetaElement &other) const;
  ZetaElement scaled(const Rational &c) const;

  // Multiplication by (ring_part + m*zeta).
  ZetaElement times_linear(const RingElement &ring_part, const Rational &m) const;

  // Multiplication by the exact inverse of (ring_part + m*zeta), m != 0;
  // the expansion terminates by nilpotency of ring_part.
  ZetaElement times_inverse_linear(const RingElement &ring_part,
                                   const Rational &m) const;

  // zeta -> -zeta.
  ZetaElement zeta_negated() const;

  // Largest zeta exponent present; requires a nonzero element.
  int max_zeta_exponent() const;

  bool operator==(const ZetaElement &other) const {
    return terms_ == other.terms_;
  }

 private:
  PresentationPtr pres_;
  std::map<int, Poly> terms_;
};

template <>
struct CoeffOps<ZetaElement> {
  static bool is_zero(const ZetaElement &c) { return c.is_zero(); }
  static ZetaElement add(const ZetaElement &a, const ZetaElement &b) {
    return a + b;
  }
  static ZetaElement scale(const ZetaElement &a, const Rational &s) {
    return a.scaled(s);
  }
  static ZetaElement mul(const ZetaElement &a, const ZetaElement &b) {
    return a * b;
  }
};

}  // namespace qk
