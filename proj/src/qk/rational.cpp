#include "qk/rational.hpp"

#include <cctype>

#include "qk/error.hpp"

namespace qk {

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0) throw_invalid("rational with zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(const std::string &text) {
  if (text.empty()) throw_invalid("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      throw_invalid("malformed rational literal: " + text);
    }
  }
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw_invalid("malformed rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw_invalid("rational with zero denominator: " + text);
  }
  mpq_canonicalize(raw);
  Rational value(raw);
  mpq_clear(raw);
  return value;
}

std::string rational_to_string(const Rational &value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational &value) { return value.get_den() == 1; }

Integer rational_floor(const Rational &value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return q;
}

Rational fractional_part(const Rational &value) {
  return value - Rational(rational_floor(value));
}

long to_long(const Rational &value) {
  if (!is_integer(value)) throw_invalid("expected integral rational");
  if (!value.get_num().fits_slong_p()) throw_invalid("integer out of range");
  return value.get_num().get_si();
}

Rational dot(const RationalVector &a, const RationalVector &b) {
  if (a.size() != b.size()) throw_invalid("dimension mismatch in dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool is_zero_vector(const RationalVector &v) {
  for (const auto &x : v) {
    if (x != 0) return false;
  }
  return true;
}

int compare_lex(const RationalVector &a, const RationalVector &b) {
  if (a.size() != b.size()) throw_invalid("dimension mismatch in comparison");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace qk
