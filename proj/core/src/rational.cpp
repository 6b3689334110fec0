#include "alpert/rational.hpp"

#include <ostream>

namespace alpert {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.value_;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class double_factorial(long k) {
  if (k == -1) return 1;
  if (k < -1 || k % 2 == 0)
    throw std::invalid_argument("double_factorial: argument must be -1 or odd positive");
  mpz_class out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational out(1);
  Rational factor = a;
  for (unsigned i = 0; i < k; ++i) {
    out *= factor;
    factor += Rational(1);
  }
  return out;
}

Rational pow2(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  Rational out(1);
  Rational b = e < 0 ? Rational(1) / base : base;
  for (int i = 0, n = e < 0 ? -e : e; i < n; ++i) out *= b;
  return out;
}

}  // namespace alpert
