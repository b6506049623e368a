#include "qk/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qk/error.hpp"

namespace qk {

namespace {

// Search radius for the canonical-degree enumeration, throttled so the box
// stays enumerable at higher torus rank.
long degree_search_radius(std::size_t rank) {
  if (rank <= 3) return 16;
  if (rank == 4) return 6;
  return 3;
}

struct DegreeCandidate {
  int complement_zeros;   // more is better (tighter face)
  Rational energy;        // smaller is better
  long exponent_sum;      // smaller is better
  RationalVector degree;  // lex tie-break
  std::vector<long> exponents;

  bool better_than(const DegreeCandidate &other) const {
    if (complement_zeros != other.complement_zeros) {
      return complement_zeros > other.complement_zeros;
    }
    if (energy != other.energy) return energy < other.energy;
    if (exponent_sum != other.exponent_sum) {
      return exponent_sum < other.exponent_sum;
    }
    return compare_lex(degree, other.degree) < 0;
  }
};

// The canonical effective degree for an unstable primitive set S: an integral
// direction with positive pairing on S and nonpositive pairing off S,
// normalized so the pairings on S are coprime positive integers. Preference:
// most pairings vanishing off S, then least energy, least exponent sum, lex.
DegreeCandidate canonical_degree(const GitData &g, const std::vector<int> &s) {
  std::size_t r = g.r();
  std::size_t k = g.k();
  std::vector<bool> in_s(k + 1, false);
  for (int j : s) in_s[j] = true;
  std::vector<std::vector<Integer>> cols(k + 1);
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t a = 0; a < r; ++a) {
      cols[j].push_back(g.weights().at(a, j - 1));
    }
  }

  const long radius = degree_search_radius(r);
  std::optional<DegreeCandidate> best;
  std::vector<long> v(r, -radius);
  for (;;) {
    bool feasible = false;
    for (std::size_t a = 0; a < r; ++a) feasible |= (v[a] != 0);
    int complement_zeros = 0;
    Integer gcd_pairings(0);
    std::vector<Integer> s_pairings;
    for (std::size_t j = 1; j <= k && feasible; ++j) {
      Integer c(0);
      for (std::size_t a = 0; a < r; ++a) c += cols[j][a] * v[a];
      if (in_s[j]) {
        if (c <= 0) feasible = false;
        s_pairings.push_back(c);
        mpz_gcd(gcd_pairings.get_mpz_t(), gcd_pairings.get_mpz_t(),
                c.get_mpz_t());
      } else {
        if (c > 0) feasible = false;
        if (c == 0) ++complement_zeros;
      }
    }
    if (feasible) {
      RationalVector d(r);
      for (std::size_t a = 0; a < r; ++a) d[a] = Rational(v[a]);
      Rational energy = dot(g.polarization(), d);
      if (energy > 0) {
        Rational scale = Rational(gcd_pairings);
        DegreeCandidate cand;
        cand.complement_zeros = complement_zeros;
        cand.energy = energy / scale;
        cand.degree.resize(r);
        for (std::size_t a = 0; a < r; ++a) cand.degree[a] = d[a] / scale;
        cand.exponent_sum = 0;
        for (const Integer &c : s_pairings) {
          long e = to_long(Rational(c) / scale);
          cand.exponents.push_back(e);
          cand.exponent_sum += e;
        }
        if (!best || cand.better_than(*best)) best = cand;
      }
    }

    std::size_t pos = 0;
    while (pos < r && v[pos] == radius) v[pos++] = -radius;
    if (pos == r) break;
    ++v[pos];
  }
  if (!best) {
    throw_precondition(
        "no effective degree isolates the unstable primitive set");
  }
  return *best;
}

}  // namespace

std::size_t RingPresentation::dimension() const {
  if (!standard_) throw_precondition("quotient ring is infinite dimensional");
  return standard_->size();
}

RingElement RingPresentation::normal_form(const Poly &p) const {
  if (p.nvars() != nvars()) {
    throw_invalid("polynomial variable count does not match the torus rank");
  }
  return RingElement{shared(), reduce_full(p, basis_)};
}

RingElement RingPresentation::unit() const {
  return normal_form(Poly::constant(nvars(), Rational(1)));
}

RingElement RingPresentation::zero() const {
  return RingElement{shared(), Poly(nvars())};
}

RingElement RingPresentation::divisor_class(int j) const {
  return normal_form(Poly::linear_form(git_.weight_column(j)));
}

int RingPresentation::nilpotency_degree(int j) const {
  if (!standard_) throw_precondition("quotient ring is infinite dimensional");
  int bound = 1;
  for (const Monomial &m : *standard_) {
    bound = std::max(bound, monomial_degree(m) + 1);
  }
  Poly d = Poly::linear_form(git_.weight_column(j));
  Poly acc = Poly::constant(nvars(), Rational(1));
  for (int n = 1; n <= bound + 1; ++n) {
    acc = reduce_full(acc * d, basis_);
    if (acc.is_zero()) return n;
  }
  throw_precondition("divisor class is not nilpotent");
}

PresentationPtr build_presentation(const GitData &g) {
  auto pres = std::shared_ptr<RingPresentation>(new RingPresentation());
  pres->git_ = g;

  if (!is_dm(g)) {
    pres->warnings_.push_back(
        "not Deligne-Mumford: some semistable stabilizer is positive "
        "dimensional");
  }
  if (g.strictly_semistable()) {
    pres->warnings_.push_back(
        "polarization lies on a wall: strictly semistable points may exist");
  }

  for (const auto &s : unstable_primitive_sets(g)) {
    DegreeCandidate cand = canonical_degree(g, s);
    SrGenerator gen;
    gen.unstable_set = s;
    gen.degree = cand.degree;
    gen.exponents = cand.exponents;
    Poly product = Poly::constant(pres->nvars(), Rational(1));
    for (std::size_t i = 0; i < s.size(); ++i) {
      Poly form = Poly::linear_form(g.weight_column(s[i]));
      product = product * form.pow(static_cast<int>(cand.exponents[i]));
    }
    gen.generator = product;
    pres->sr_.push_back(std::move(gen));
  }

  std::vector<Poly> ideal;
  for (const auto &gen : pres->sr_) ideal.push_back(gen.generator);
  pres->basis_ = buchberger(ideal);
  pres->standard_ = standard_monomials(pres->basis_, pres->nvars());
  if (!pres->standard_) {
    pres->warnings_.push_back("quotient ring is infinite dimensional");
  }
  return pres;
}

RingElement kirwan_classical(const Poly &p, const RingPresentation &pres) {
  return pres.normal_form(p);
}

Poly translate(const Poly &p, const RationalVector &phi) {
  if (static_cast<std::size_t>(p.nvars()) != phi.size()) {
    throw_invalid("translation vector length mismatch");
  }
  std::vector<Poly> images;
  for (int i = 0; i < p.nvars(); ++i) {
    images.push_back(Poly::variable(p.nvars(), i) +
                     Poly::constant(p.nvars(), phi[i]));
  }
  return p.substitute(images);
}

std::vector<std::pair<int, Poly>> translate_zeta(const Poly &p,
                                                 const RationalVector &phi) {
  if (static_cast<std::size_t>(p.nvars()) != phi.size()) {
    throw_invalid("translation vector length mismatch");
  }
  // Work in nvars+1 variables with zeta last, then split by zeta exponent.
  int n = p.nvars();
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly zeta_part = Poly::variable(n + 1, n).scaled(phi[i]);
    images.push_back(Poly::variable(n + 1, i) + zeta_part);
  }
  Poly expanded = p.substitute(images);
  std::map<int, Poly> split;
  for (const auto &[m, c] : expanded.terms()) {
    int ze = m[n];
    Monomial base(m.begin(), m.end() - 1);
    auto [it, inserted] = split.try_emplace(ze, Poly(n));
    it->second.add_term(base, c);
  }
  return {split.begin(), split.end()};
}

}  // namespace qk
