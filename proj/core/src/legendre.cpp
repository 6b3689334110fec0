#include "alpert/legendre.hpp"

#include <mutex>
#include <stdexcept>

namespace alpert {

namespace {

const PolyExact& monic_cached(int n) {
  static std::mutex mutex;
  static std::vector<PolyExact> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) {
    cache.push_back(PolyExact::constant(Rational(1)));
    cache.push_back(PolyExact::identity());
  }
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size()) - 1;  // next index is m + 1
    PolyExact t_pm = PolyExact::identity() * cache[static_cast<size_t>(m)];
    PolyExact prev = cache[static_cast<size_t>(m - 1)];
    prev.scale(Rational(static_cast<long>(m) * m, (2L * m + 1) * (2L * m - 1)));
    cache.push_back(t_pm - prev);
  }
  return cache[static_cast<size_t>(n)];
}

}  // namespace

PolyExact monic_legendre(int n) {
  if (n < 0) throw std::invalid_argument("monic_legendre: negative degree");
  return monic_cached(n);
}

SurdValue orthonormal_scale(int n) {
  if (n < 0) throw std::invalid_argument("orthonormal_scale: negative degree");
  // sqrt(2n+1) (2n-1)!! / (sqrt(2) n!) = [(2n-1)!!/n!] * sqrt(2(2n+1)) / 2
  Rational prefactor(double_factorial(2L * n - 1), 2 * factorial(static_cast<unsigned>(n)));
  return SurdValue::radical(prefactor, 2L * (2 * n + 1));
}

PolySurd orthonormal_legendre(int n) {
  PolySurd p = to_surd_poly(monic_legendre(n));
  p.scale(orthonormal_scale(n));
  return p;
}

PolySurd orthonormal_on_unit(int n) {
  return orthonormal_legendre(n).compose_affine(Rational(2), Rational(-1));
}

std::vector<SurdValue> eval_scaling_vector(int n, const Rational& t) {
  if (n < 0) throw std::invalid_argument("eval_scaling_vector: negative order");
  std::vector<SurdValue> out(static_cast<size_t>(n) + 1, SurdValue());
  if (t < Rational(0) || t >= Rational(1)) return out;  // half-open support
  Rational u = Rational(2) * t - Rational(1);
  for (int j = 0; j <= n; ++j)
    out[static_cast<size_t>(j)] = orthonormal_legendre(j).evaluate(u);
  return out;
}

SurdValue integrate_shifted_product(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("integrate_shifted_product: negative index");
  if (j > i) return SurdValue();
  PolySurd product = orthonormal_legendre(i) * orthonormal_on_unit(j);
  SurdValue integral = product.integral_unit();
  return integral * Rational(2);
}

SurdValue legendre_inner_product(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("legendre_inner_product: negative index");
  PolySurd product = orthonormal_legendre(i) * orthonormal_legendre(j);
  return product.integral_symmetric();
}

}  // namespace alpert
