#ifndef ALPERT_RATIONAL_HPP
#define ALPERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace alpert {

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Division by zero throws instead of trapping.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
  Rational(const mpz_class& num, const mpz_class& den) { assign(num, den); }
  explicit Rational(const mpz_class& n) : value_(n) {}
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  static Rational from_strings(const std::string& num, const std::string& den) {
    return Rational(mpz_class(num), mpz_class(den));
  }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  long to_long() const {
    if (!is_integer() || !value_.get_num().fits_slong_p())
      throw std::domain_error("Rational::to_long: not a small integer");
    return value_.get_num().get_si();
  }
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  Rational abs() const { return is_negative() ? -*this : *this; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void assign(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  mpq_class value_;
};

mpz_class factorial(unsigned n);

/// (-1)!! = 1; k!! = k (k-2)!! for odd positive k. Even or < -1 rejected.
mpz_class double_factorial(long k);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

/// 2^e for any integer e, exact.
Rational pow2(int e);

Rational rational_pow(const Rational& base, int e);

}  // namespace alpert

#endif  // ALPERT_RATIONAL_HPP
