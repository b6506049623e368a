#include "qk/groebner.hpp"

#include <algorithm>
#include <set>

#include "qk/error.hpp"

namespace qk {

namespace {

bool divides(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_quotient(const Monomial &b, const Monomial &a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial monomial_lcm(const Monomial &a, const Monomial &b) {
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Poly monomial_poly(int nvars, const Monomial &m, const Rational &c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Poly s_polynomial(const Poly &f, const Poly &g) {
  const auto &[lmf, lcf] = *f.terms().begin();
  const auto &[lmg, lcg] = *g.terms().begin();
  Monomial l = monomial_lcm(lmf, lmg);
  Poly a = monomial_poly(f.nvars(), monomial_quotient(l, lmf), Rational(1) / lcf);
  Poly b = monomial_poly(g.nvars(), monomial_quotient(l, lmg), Rational(1) / lcg);
  return a * f - b * g;
}

}  // namespace

Poly reduce_full(const Poly &p, const std::vector<Poly> &basis) {
  Poly rest = p;
  Poly result(p.nvars());
  while (!rest.is_zero()) {
    const auto &[mono, coeff] = *rest.terms().begin();
    bool reduced = false;
    for (const Poly &g : basis) {
      if (g.is_zero()) continue;
      const auto &[lm, lc] = *g.terms().begin();
      if (divides(lm, mono)) {
        Poly factor =
            monomial_poly(p.nvars(), monomial_quotient(mono, lm), coeff / lc);
        rest = rest - factor * g;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.add_term(mono, coeff);
      Poly lead = monomial_poly(p.nvars(), mono, coeff);
      rest = rest - lead;
    }
  }
  return result;
}

std::vector<Poly> buchberger(const std::vector<Poly> &generators) {
  std::vector<Poly> basis;
  for (const Poly &g : generators) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) return {};

  struct Pair {
    int lcm_degree;
    std::size_t i, j;
    bool operator<(const Pair &other) const {
      if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
      if (i != other.i) return i < other.i;
      return j < other.j;
    }
  };
  std::set<Pair> pairs;
  auto push_pairs_with = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial l = monomial_lcm(basis[i].terms().begin()->first,
                                basis[n].terms().begin()->first);
      pairs.insert(Pair{monomial_degree(l), i, n});
    }
  };
  for (std::size_t n = 1; n < basis.size(); ++n) push_pairs_with(n);

  while (!pairs.empty()) {
    Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial &lmi = basis[pair.i].terms().begin()->first;
    const Monomial &lmj = basis[pair.j].terms().begin()->first;
    // Buchberger's coprimality criterion.
    Monomial l = monomial_lcm(lmi, lmj);
    if (monomial_degree(l) == monomial_degree(lmi) + monomial_degree(lmj)) {
      continue;
    }
    Poly s = reduce_full(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(s);
    push_pairs_with(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's, then inter-reduce tails and normalize to monic.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial &lm = basis[i].terms().begin()->first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial &other = basis[j].terms().begin()->first;
      if (divides(other, lm) && (other != lm || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Poly r = reduce_full(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.scaled(Rational(1) / r.terms().begin()->second));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly &a, const Poly &b) {
    return degrevlex_greater(b.terms().begin()->first,
                             a.terms().begin()->first);
  });
  return reduced;
}

std::optional<std::vector<Monomial>> standard_monomials(
    const std::vector<Poly> &groebner_basis, int nvars) {
  std::vector<Monomial> leading;
  for (const Poly &g : groebner_basis) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return std::vector<Monomial>{};  // unit ideal
    leading.push_back(g.terms().begin()->first);
  }
  // Finite dimensional iff every variable has a pure power among the leading
  // monomials.
  std::vector<int> bound(nvars, -1);
  for (const Monomial &lm : leading) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (lm[i] > 0) {
        if (support >= 0) pure = false;
        support = i;
      }
    }
    if (pure && support >= 0) {
      if (bound[support] < 0 || lm[support] < bound[support]) {
        bound[support] = lm[support];
      }
    }
  }
  for (int i = 0; i < nvars; ++i) {
    if (bound[i] < 0) return std::nullopt;
  }

  std::vector<Monomial> standard;
  Monomial current(nvars, 0);
  for (;;) {
    bool in_lt_ideal = false;
    for (const Monomial &lm : leading) {
      if (divides(lm, current)) {
        in_lt_ideal = true;
        break;
      }
    }
    if (!in_lt_ideal) standard.push_back(current);
    int pos = 0;
    while (pos < nvars) {
      if (current[pos] + 1 < bound[pos]) {
        ++current[pos];
        break;
      }
      current[pos] = 0;
      ++pos;
    }
    if (pos == nvars) break;
  }
  std::sort(standard.begin(), standard.end(),
            [](const Monomial &a, const Monomial &b) {
              return degrevlex_greater(b, a);
            });
  return standard;
}

}  // namespace qk
