#include "alpert/surd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace alpert {

namespace {

// Square part of a big integer: strip small primes, then the remainder must
// itself be a perfect square for the radical to stay representable.
bool split_square(const mpz_class& n, mpz_class& root, std::int64_t& squarefree) {
  mpz_class rest = n;
  mpz_class r = 1;
  std::int64_t sf = 1;
  for (std::int64_t p = 2; p <= 1000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) r *= p;
    if (e % 2 == 1) sf *= p;
  }
  if (rest > 1) {
    if (!mpz_perfect_square_p(rest.get_mpz_t())) return false;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    r *= s;
  }
  root = r;
  squarefree = sf;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::int64_t squarefree_part(std::int64_t v, std::int64_t& root) {
  if (v <= 0) throw std::domain_error("squarefree_part: radicand must be positive");
  std::int64_t r = 1, rest = v;
  for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      r *= p;
    }
  }
  root = r;
  return rest;
}

void SurdValue::add_term(std::int64_t radicand, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SurdValue SurdValue::radical(const Rational& q, std::int64_t m) {
  std::int64_t root = 1;
  std::int64_t sf = squarefree_part(m, root);
  SurdValue out;
  out.add_term(sf, q * Rational(root));
  return out;
}

SurdValue SurdValue::sqrt_rational(const Rational& q) {
  if (q.is_negative()) throw std::domain_error("SurdValue::sqrt_rational: negative argument");
  if (q.is_zero()) return SurdValue();
  mpz_class num_root, den_root;
  std::int64_t num_sf = 1, den_sf = 1;
  if (!split_square(q.numerator(), num_root, num_sf) ||
      !split_square(q.denominator(), den_root, den_sf))
    throw std::domain_error("SurdValue::sqrt_rational: square part not extractable");
  // sqrt(p/q) = sqrt(p) sqrt(q) / q, with each square part pulled out.
  Rational coeff(num_root * den_root, q.denominator());
  SurdValue out;
  std::int64_t root = 1;
  out.add_term(squarefree_part(num_sf * den_sf, root), coeff * Rational(root));
  return out;
}

SurdValue& SurdValue::operator+=(const SurdValue& o) {
  for (const auto& [rad, coeff] : o.terms_) add_term(rad, coeff);
  return *this;
}

SurdValue& SurdValue::operator-=(const SurdValue& o) {
  for (const auto& [rad, coeff] : o.terms_) add_term(rad, -coeff);
  return *this;
}

SurdValue& SurdValue::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [rad, coeff] : terms_) coeff *= q;
  return *this;
}

SurdValue& SurdValue::operator/=(const Rational& q) {
  if (q.is_zero()) throw std::domain_error("SurdValue: division by zero rational");
  for (auto& [rad, coeff] : terms_) coeff /= q;
  return *this;
}

SurdValue operator*(const SurdValue& a, const SurdValue& b) {
  SurdValue out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)) with g = gcd: both factors
      // squarefree, so the cofactors are coprime and the product stays
      // squarefree. No factoring needed.
      std::int64_t g = std::gcd(ra, rb);
      out.add_term((ra / g) * (rb / g), ca * cb * Rational(g));
    }
  }
  return out;
}

SurdValue operator-(const SurdValue& a) {
  SurdValue out;
  for (const auto& [rad, coeff] : a.terms_) out.terms_.emplace(rad, -coeff);
  return out;
}

SurdValue SurdValue::inverse(int radical_limit) const {
  if (is_zero()) throw std::domain_error("SurdValue: division by zero");
  std::set<std::int64_t> primes;
  for (const auto& [rad, coeff] : terms_)
    for (std::int64_t p : prime_factors(rad)) primes.insert(p);
  if (static_cast<int>(primes.size()) > radical_limit)
    throw RadicalLimitError("SurdValue: denominator exceeds radical limit of " +
                            std::to_string(radical_limit));
  SurdValue num(Rational(1));
  SurdValue den = *this;
  for (std::int64_t p : primes) {
    SurdValue conj;
    bool any = false;
    for (const auto& [rad, coeff] : den.terms_) {
      bool flips = rad % p == 0;
      any = any || flips;
      conj.add_term(rad, flips ? -coeff : coeff);
    }
    if (!any) continue;
    num = num * conj;
    den = den * conj;  // clears every sqrt(p) factor from the denominator
  }
  if (!den.is_rational())
    throw std::logic_error("SurdValue::inverse: conjugation left radicals behind");
  return num * (Rational(1) / den.rational_value());
}

mpf_class SurdValue::to_mpf(mp_bitcnt_t precision_bits) const {
  mpf_class acc(0, precision_bits);
  for (const auto& [rad, coeff] : terms_) {
    mpf_class term(coeff.raw(), precision_bits);
    if (rad != 1) {
      mpf_class root(0, precision_bits);
      mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(rad));
      term *= root;
    }
    acc += term;
  }
  return acc;
}

double SurdValue::to_double() const { return to_mpf(128).get_d(); }

int SurdValue::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second.sign();
  for (mp_bitcnt_t prec = 128; prec <= 65536; prec *= 2) {
    mpf_class value = to_mpf(prec);
    // Conservative rounding-error envelope for the enclosure.
    mpf_class bound(0, prec);
    for (const auto& [rad, coeff] : terms_) {
      mpf_class mag(coeff.raw(), prec);
      mpf_abs(mag.get_mpf_t(), mag.get_mpf_t());
      if (rad != 1) {
        mpf_class root(0, prec);
        mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(rad));
        mag *= root;
      }
      bound += mag;
    }
    mpf_class eps(0, prec);
    mpf_set_ui(eps.get_mpf_t(), static_cast<unsigned long>(terms_.size() + 4));
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 4);
    bound *= eps;
    if (value > bound) return 1;
    if (value < -bound) return -1;
  }
  throw std::runtime_error("SurdValue::sign: enclosure failed to separate from zero");
}

namespace {

std::string format_digits(const std::string& digits, long exp10, bool negative) {
  // exp10 = decimal exponent with an implied leading point: value =
  // 0.digits * 10^exp10.
  std::string out = negative ? "-" : "";
  long d = static_cast<long>(digits.size());
  if (exp10 >= 0 && exp10 <= d + 4 && exp10 <= 21) {
    if (exp10 >= d) {
      out += digits + std::string(static_cast<size_t>(exp10 - d), '0');
    } else {
      out += digits.substr(0, static_cast<size_t>(exp10));
      if (exp10 == 0) out += "0";
      out += "." + digits.substr(static_cast<size_t>(exp10));
    }
  } else if (exp10 < 0 && exp10 > -5) {
    out += "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
  } else {
    std::string fraction = digits.substr(1);
    while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
    out += digits.substr(0, 1);
    if (!fraction.empty()) out += "." + fraction;
    out += "e" + std::to_string(exp10 - 1);
  }
  return out;
}

std::string trim_trailing_zeros(std::string s) {
  if (s.find('.') == std::string::npos || s.find('e') != std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string SurdValue::to_decimal(int significant_digits) const {
  if (significant_digits < 1 || significant_digits > 50)
    throw std::invalid_argument("to_decimal: digits must be in [1, 50]");
  if (is_zero()) return "0";
  const int d = significant_digits;

  if (is_rational()) {
    // Exact decimal rounding with a genuine half-to-even tie rule.
    Rational q = rational_value();
    bool neg = q.is_negative();
    mpz_class p = abs(q.numerator());
    mpz_class den = q.denominator();
    long exp10 = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
    auto scaled = [&](long e) {
      // floor(p * 10^(d-e) / den) with remainder, handling both directions.
      mpz_class num = p, dd = den, pow;
      long k = d - e;
      mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
      if (k >= 0) num *= pow; else dd *= pow;
      mpz_class quo, rem;
      mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), dd.get_mpz_t());
      return std::make_tuple(quo, rem, dd);
    };
    auto [quo, rem, dd] = scaled(exp10);
    std::string qs = quo.get_str();
    // sizeinbase is only an estimate: renormalize until the quotient has
    // exactly d significant digits (a zero quotient has none).
    while (quo == 0 || static_cast<long>(qs.size()) != d) {
      exp10 += quo != 0 && static_cast<long>(qs.size()) > d ? 1 : -1;
      std::tie(quo, rem, dd) = scaled(exp10);
      qs = quo.get_str();
    }
    mpz_class twice = 2 * rem;
    if (twice > dd || (twice == dd && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
    qs = quo.get_str();
    if (static_cast<long>(qs.size()) > d) {  // 999.. rolled over
      qs = qs.substr(0, static_cast<size_t>(d));
      ++exp10;
    }
    return trim_trailing_zeros(format_digits(qs, exp10, neg));
  }

  // Irrational: refine until the rounding digit is certain. Ties cannot
  // occur, so this terminates.
  for (mp_bitcnt_t prec = 256; prec <= 65536; prec *= 2) {
    mpf_class v = to_mpf(prec);
    bool neg = sgn(v) < 0;
    mpf_abs(v.get_mpf_t(), v.get_mpf_t());
    mp_exp_t exp10 = 0;
    std::string digits = v.get_str(exp10, 10, static_cast<size_t>(d + 6));
    if (static_cast<int>(digits.size()) < d + 6)
      digits += std::string(static_cast<size_t>(d + 6) - digits.size(), '0');
    std::string head = digits.substr(0, static_cast<size_t>(d));
    std::string tail = digits.substr(static_cast<size_t>(d));
    long tail_val = std::stol(tail);
    const long half = 500000;  // tail has 6 guard digits
    if (tail_val >= half + 4) {
      mpz_class h(head);
      h += 1;
      head = h.get_str();
      if (static_cast<int>(head.size()) > d) {
        head = head.substr(0, static_cast<size_t>(d));
        ++exp10;
      }
      return trim_trailing_zeros(format_digits(head, exp10, neg));
    }
    if (tail_val <= half - 4) {
      return trim_trailing_zeros(format_digits(head, exp10, neg));
    }
    // Too close to the boundary at this precision; refine.
  }
  throw std::runtime_error("SurdValue::to_decimal: rounding did not stabilize");
}

std::ostream& operator<<(std::ostream& os, const SurdValue& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [rad, coeff] : v.terms()) {
    if (!first) os << (coeff.is_negative() ? " - " : " + ");
    else if (coeff.is_negative()) os << "-";
    first = false;
    Rational mag = coeff.abs();
    if (rad == 1) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << "sqrt(" << rad << ")";
    }
  }
  return os;
}

}  // namespace alpert
