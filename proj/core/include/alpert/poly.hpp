#ifndef ALPERT_POLY_HPP
#define ALPERT_POLY_HPP

#include <vector>

#include "alpert/rational.hpp"
#include "alpert/surd.hpp"

namespace alpert {

/// Dense univariate polynomial, coefficients ascending by degree, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  const std::vector<T>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  T coefficient(int k) const {
    return (k < 0 || k >= static_cast<int>(coeffs_.size())) ? T(0) : coeffs_[static_cast<size_t>(k)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  template <typename S>
  Polynomial& scale(const S& s) {
    for (auto& c : coeffs_) c = c * s;
    trim();
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// p(a t + b), exact binomial expansion.
  Polynomial compose_affine(const Rational& a, const Rational& b) const {
    Polynomial out;
    Polynomial arg(std::vector<T>{T(0) + b, T(0) + a});
    Polynomial power = Polynomial::constant(T(1));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      Polynomial term = power;
      term.scale(coeffs_[k]);
      out += term;
      if (k + 1 < coeffs_.size()) power = power * arg;
    }
    return out;
  }

  template <typename X>
  auto evaluate(const X& x) const {
    using R = decltype(coeffs_[0] * x);
    R acc = R(0);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + R(0 + coeffs_[k]);
    return acc;
  }

  /// Integral over [0, 1].
  T integral_unit() const {
    T acc(0);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      T term = coeffs_[k];
      term = term * Rational(1, static_cast<long>(k) + 1);
      acc += term;
    }
    return acc;
  }

  /// Integral over [-1, 1]; odd powers drop out.
  T integral_symmetric() const {
    T acc(0);
    for (size_t k = 0; k < coeffs_.size(); k += 2) {
      T term = coeffs_[k];
      term = term * Rational(2, static_cast<long>(k) + 1);
      acc += term;
    }
    return acc;
  }

  /// Integral over [a, b] at rational endpoints.
  T integral(const Rational& a, const Rational& b) const {
    T acc(0);
    Rational pa = a, pb = b;  // running powers a^{k+1}, b^{k+1}
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      T term = coeffs_[k];
      term = term * ((pb - pa) / Rational(static_cast<long>(k) + 1));
      acc += term;
      pa *= a;
      pb *= b;
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_coeff(const Rational& c) { return c.is_zero(); }
  static bool is_zero_coeff(const SurdValue& c) { return c.is_zero(); }

  std::vector<T> coeffs_;
};

using PolyExact = Polynomial<Rational>;
using PolySurd = Polynomial<SurdValue>;

inline PolySurd to_surd_poly(const PolyExact& p) {
  std::vector<SurdValue> coeffs;
  coeffs.reserve(static_cast<size_t>(p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k) coeffs.emplace_back(p.coefficient(k));
  return PolySurd(std::move(coeffs));
}

}  // namespace alpert

#endif  // ALPERT_POLY_HPP
