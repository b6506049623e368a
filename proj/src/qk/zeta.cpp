#include "qk/zeta.hpp"

#include "qk/error.hpp"

namespace qk {

namespace {

const RingPresentation &pres_of(const ZetaElement &a, const ZetaElement &b) {
  const PresentationPtr &pa = a.presentation();
  const PresentationPtr &pb = b.presentation();
  if (pa && pb && pa != pb) {
    throw_invalid("zeta elements belong to different presentations");
  }
  const PresentationPtr &p = pa ? pa : pb;
  if (!p) throw_invalid("zeta element without presentation");
  return *p;
}

}  // namespace

ZetaElement ZetaElement::unit(PresentationPtr pres) {
  ZetaElement e(pres);
  e.add_term(0, pres->unit().value);
  return e;
}

void ZetaElement::add_term(int zeta_exp, const Poly &value) {
  if (value.is_zero()) return;
  auto it = terms_.find(zeta_exp);
  if (it == terms_.end()) {
    terms_.emplace(zeta_exp, value);
  } else {
    it->second = it->second + value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZetaElement ZetaElement::operator+(const ZetaElement &other) const {
  ZetaElement out(pres_ ? pres_ : other.pres_);
  out.terms_ = terms_;
  for (const auto &[e, p] : other.terms_) out.add_term(e, p);
  return out;
}

ZetaElement ZetaElement::operator-(const ZetaElement &other) const {
  ZetaElement out(pres_ ? pres_ : other.pres_);
  out.terms_ = terms_;
  for (const auto &[e, p] : other.terms_) out.add_term(e, -p);
  return out;
}

ZetaElement ZetaElement::operator*(const ZetaElement &other) const {
  const RingPresentation &pres = pres_of(*this, other);
  ZetaElement out(pres.shared());
  for (const auto &[ea, pa] : terms_) {
    for (const auto &[eb, pb] : other.terms_) {
      out.add_term(ea + eb, pres.normal_form(pa * pb).value);
    }
  }
  return out;
}

ZetaElement ZetaElement::scaled(const Rational &c) const {
  ZetaElement out(pres_);
  if (c == 0) return out;
  for (const auto &[e, p] : terms_) out.add_term(e, p.scaled(c));
  return out;
}

ZetaElement ZetaElement::times_linear(const RingElement &ring_part,
                                      const Rational &m) const {
  const PresentationPtr &pres = pres_ ? pres_ : ring_part.presentation;
  if (!pres) throw_invalid("zeta element without presentation");
  ZetaElement out(pres);
  for (const auto &[e, p] : terms_) {
    out.add_term(e, pres->normal_form(p * ring_part.value).value);
    out.add_term(e + 1, p.scaled(m));
  }
  return out;
}

ZetaElement ZetaElement::times_inverse_linear(const RingElement &ring_part,
                                              const Rational &m) const {
  if (m == 0) throw_invalid("non-invertible zeta factor");
  const PresentationPtr &pres = pres_ ? pres_ : ring_part.presentation;
  if (!pres) throw_invalid("zeta element without presentation");
  if (!pres->finite_dimensional()) {
    throw_precondition(
        "inverse expansion requires a finite-dimensional quotient ring");
  }
  // (a + m z)^{-1} = sum_{i>=0} (-1)^i a^i m^{-(i+1)} z^{-(i+1)}, finite by
  // nilpotency of a.
  ZetaElement inverse(pres);
  Poly power = pres->unit().value;
  Rational mp = m;
  int sign = 1;
  int guard = 0;
  while (!power.is_zero()) {
    inverse.add_term(-(guard + 1),
                     power.scaled(Rational(sign) / mp));
    power = pres->normal_form(power * ring_part.value).value;
    mp *= m;
    sign = -sign;
    if (++guard > 1024) throw_precondition("ring coefficient not nilpotent");
  }
  return (*this) * inverse;
}

ZetaElement ZetaElement::zeta_negated() const {
  ZetaElement out(pres_);
  for (const auto &[e, p] : terms_) {
    out.add_term(e, (e % 2 == 0) ? p : -p);
  }
  return out;
}

int ZetaElement::max_zeta_exponent() const {
  if (terms_.empty()) throw_invalid("zeta exponent of zero element");
  return terms_.rbegin()->first;
}

}  // namespace qk
