#include "qk/poly.hpp"

#include <sstream>

#include "qk/error.hpp"

namespace qk {

int monomial_degree(const Monomial &m) {
  int deg = 0;
  for (int e : m) deg += e;
  return deg;
}

bool degrevlex_greater(const Monomial &a, const Monomial &b) {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly Poly::constant(int nvars, const Rational &c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw_invalid("variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

Poly Poly::linear_form(const RationalVector &coeffs) {
  Poly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

void Poly::add_term(const Monomial &m, const Rational &c) {
  if (static_cast<int>(m.size()) != nvars_) {
    throw_invalid("monomial length does not match variable count");
  }
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto &[m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly Poly::operator+(const Poly &other) const {
  if (nvars_ != other.nvars_) throw_invalid("variable-count mismatch");
  Poly p = *this;
  for (const auto &[m, c] : other.terms_) p.add_term(m, c);
  return p;
}

Poly Poly::operator-(const Poly &other) const { return *this + (-other); }

Poly Poly::operator*(const Poly &other) const {
  if (nvars_ != other.nvars_) throw_invalid("variable-count mismatch");
  Poly p(nvars_);
  for (const auto &[ma, ca] : terms_) {
    for (const auto &[mb, cb] : other.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Poly Poly::scaled(const Rational &c) const {
  Poly p(nvars_);
  if (c == 0) return p;
  for (const auto &[m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw_invalid("negative polynomial power");
  Poly acc = Poly::constant(nvars_, Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

Poly Poly::substitute(const std::vector<Poly> &images) const {
  if (static_cast<int>(images.size()) != nvars_) {
    throw_invalid("substitution image count mismatch");
  }
  int out_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto &img : images) {
    if (img.nvars() != out_vars) throw_invalid("substitution images disagree");
  }
  Poly result(out_vars);
  for (const auto &[m, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    }
    result = result + term;
  }
  return result;
}

std::string Poly::to_string(const std::vector<std::string> &var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = monomial_degree(m) > 0;
    if (!has_vars || mag != 1) out << rational_to_string(mag);
    bool star = !has_vars || mag != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (star) out << "*";
      star = true;
      out << var_names.at(i);
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

std::vector<std::string> default_var_names(int nvars, char prefix) {
  std::vector<std::string> names;
  if (nvars == 1) {
    names.emplace_back(1, prefix);
    return names;
  }
  for (int i = 1; i <= nvars; ++i) {
    names.push_back(std::string(1, prefix) + std::to_string(i));
  }
  return names;
}

}  // namespace qk
