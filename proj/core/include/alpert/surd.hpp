#ifndef ALPERT_SURD_HPP
#define ALPERT_SURD_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "alpert/rational.hpp"

namespace alpert {

/// Thrown when rationalizing a quotient whose denominator mixes more
/// distinct prime radicals than the configured limit allows.
struct RadicalLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite sum  sum_m q_m sqrt(m)  over squarefree positive radicands m with
/// nonzero rational coefficients q_m. The purely rational part is the m = 1
/// term. Square roots of distinct squarefree integers are linearly
/// independent over the rationals, so the canonical term map decides
/// equality exactly.
class SurdValue {
 public:
  static constexpr int kDefaultRadicalLimit = 8;

  SurdValue() = default;
  SurdValue(long n) { add_term(1, Rational(n)); }  // NOLINT(google-explicit-constructor)
  SurdValue(const Rational& q) { add_term(1, q); }  // NOLINT(google-explicit-constructor)

  /// q * sqrt(m) with m > 0 not necessarily squarefree; the largest square
  /// factor of m is extracted into the coefficient.
  static SurdValue radical(const Rational& q, std::int64_t m);
  static SurdValue sqrt_integer(std::int64_t m) { return radical(Rational(1), m); }
  /// sqrt of a nonnegative rational, as sqrt(p)*sqrt(q)/q for p/q.
  static SurdValue sqrt_rational(const Rational& q);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("SurdValue: not rational");
    return terms_.begin()->second;
  }
  Rational coefficient(std::int64_t radicand) const {
    auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SurdValue& operator+=(const SurdValue& o);
  SurdValue& operator-=(const SurdValue& o);
  SurdValue& operator*=(const SurdValue& o) { *this = *this * o; return *this; }
  SurdValue& operator*=(const Rational& q);
  SurdValue& operator/=(const Rational& q);

  friend SurdValue operator+(SurdValue a, const SurdValue& b) { return a += b; }
  friend SurdValue operator-(SurdValue a, const SurdValue& b) { return a -= b; }
  friend SurdValue operator*(const SurdValue& a, const SurdValue& b);
  friend SurdValue operator*(SurdValue a, const Rational& q) { return a *= q; }
  friend SurdValue operator*(const Rational& q, SurdValue a) { return a *= q; }
  friend SurdValue operator-(const SurdValue& a);
  friend bool operator==(const SurdValue& a, const SurdValue& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SurdValue& a, const SurdValue& b) { return !(a == b); }

  /// Exact reciprocal by iterated conjugation, one prime radical at a time.
  SurdValue inverse(int radical_limit = kDefaultRadicalLimit) const;
  friend SurdValue operator/(const SurdValue& a, const SurdValue& b) {
    return a * b.inverse();
  }
  static SurdValue divide(const SurdValue& a, const SurdValue& b, int radical_limit) {
    return a * b.inverse(radical_limit);
  }

  /// -1, 0, or 1; zero is structural, otherwise decided by refining a
  /// high-precision float enclosure until the sign is certain.
  int sign() const;
  friend bool operator<(const SurdValue& a, const SurdValue& b) { return (a - b).sign() < 0; }
  friend bool operator>(const SurdValue& a, const SurdValue& b) { return (a - b).sign() > 0; }

  double to_double() const;
  mpf_class to_mpf(mp_bitcnt_t precision_bits) const;

  /// Decimal string with the requested significant digits, round half to
  /// even. Exact for rational values; irrational values are refined until
  /// the rounding is certain.
  std::string to_decimal(int significant_digits) const;

  friend std::ostream& operator<<(std::ostream& os, const SurdValue& v);

 private:
  void add_term(std::int64_t radicand, const Rational& coeff);

  std::map<std::int64_t, Rational> terms_;
};

/// Largest-square extraction: v = square * squarefree; returns the squarefree
/// part and stores the extracted square root in `root`.
std::int64_t squarefree_part(std::int64_t v, std::int64_t& root);

}  // namespace alpert

#endif  // ALPERT_SURD_HPP
