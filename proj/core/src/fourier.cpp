#include "alpert/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alpert {

namespace {

constexpr double kPi = std::numbers::pi;

// Spherical j_k(a) by its power series; accurate for small a where the
// closed forms cancel.
double spherical_series(int k, double a) {
  double term = 1.0;
  for (int m = 1; m <= k; ++m) term *= a / (2 * m + 1);  // a^k / (2k+1)!!
  double sum = term;
  double a2 = a * a / 2.0;
  for (int m = 1; m <= 60; ++m) {
    term *= -a2 / (m * (2.0 * k + 2.0 * m + 1.0));
    double prev = sum;
    sum += term;
    if (sum == prev) break;
  }
  return sum;
}

// Spherical j_0..j_n; selects series, upward, or downward Miller recurrence.
std::vector<double> spherical_vector(int n, double a) {
  std::vector<double> j(static_cast<size_t>(n) + 1, 0.0);
  if (a < 0.5) {
    for (int k = 0; k <= n; ++k) j[static_cast<size_t>(k)] = spherical_series(k, a);
    return j;
  }
  double j0 = std::sin(a) / a;
  double j1 = std::sin(a) / (a * a) - std::cos(a) / a;
  j[0] = j0;
  if (n >= 1) j[1] = j1;
  if (n <= 1) return j;
  if (static_cast<double>(n) <= a) {
    for (int k = 1; k < n; ++k)
      j[static_cast<size_t>(k) + 1] = (2.0 * k + 1.0) / a * j[static_cast<size_t>(k)] - j[static_cast<size_t>(k) - 1];
    return j;
  }
  // Downward Miller recurrence, normalized against the larger closed form.
  int start = n + 24 + static_cast<int>(a);
  double upper = 0.0, current = 1e-30;
  std::vector<double> trial(static_cast<size_t>(n) + 1, 0.0);
  for (int k = start; k >= 0; --k) {
    double lower = (2.0 * k + 3.0) / a * current - upper;
    upper = current;
    current = lower;
    if (k <= n) trial[static_cast<size_t>(k)] = current;
    if (std::fabs(current) > 1e250) {
      current *= 1e-250;
      upper *= 1e-250;
      for (auto& v : trial) v *= 1e-250;
    }
  }
  double scale = std::fabs(j0) >= std::fabs(j1) ? j0 / trial[0]
                                                : j1 / trial[1];
  for (int k = 0; k <= n; ++k) j[static_cast<size_t>(k)] = trial[static_cast<size_t>(k)] * scale;
  return j;
}

ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& v) {
  ComplexVector out(m.size(), {0.0, 0.0});
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  size_t n = a.size();
  ComplexMatrix out(n, ComplexVector(n, {0.0, 0.0}));
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k < n; ++k)
      for (size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double inf_norm(const ComplexVector& v) {
  double out = 0.0;
  for (const auto& z : v) out = std::max(out, std::abs(z));
  return out;
}

}  // namespace

BesselHalfVector bessel_half_vector(int n, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("bessel_half_vector: requires a > 0");
  if (n < 0) throw std::invalid_argument("bessel_half_vector: negative order");
  BesselHalfVector out;
  out.order_count = n + 1;
  out.argument = a;
  std::vector<double> j = spherical_vector(n, a);
  double factor = std::sqrt(2.0 * a / kPi);
  out.values.resize(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.values[static_cast<size_t>(k)] = factor * j[static_cast<size_t>(k)];
  return out;
}

double bessel_half_minus(double a) { return std::sqrt(2.0 / (kPi * a)) * std::cos(a); }

mpf_class spherical_bessel_reference(int k, double a, mp_bitcnt_t prec) {
  mpf_class x(a, prec);
  mpf_class term(1, prec);
  for (int m = 1; m <= k; ++m) term *= x / (2 * m + 1);
  mpf_class sum = term;
  mpf_class x2 = x * x / 2;
  for (int m = 1; m <= 400; ++m) {
    term *= -x2 / mpf_class(static_cast<unsigned long>(m) * (2ul * static_cast<unsigned long>(k) + 2ul * static_cast<unsigned long>(m) + 1ul), prec);
    mpf_class prev = sum;
    sum += term;
    mpf_class mag(0, prec), smag(0, prec);
    mpf_abs(mag.get_mpf_t(), term.get_mpf_t());
    mpf_abs(smag.get_mpf_t(), sum.get_mpf_t());
    mpf_class cutoff = smag;
    mpf_div_2exp(cutoff.get_mpf_t(), cutoff.get_mpf_t(), prec + 16);
    if (m > 4 && mag < cutoff) break;
  }
  return sum;
}

ComplexVector scaling_fourier_vector(int n, double a) {
  if (a == 0.0) throw std::invalid_argument("scaling_fourier_vector: a must be nonzero");
  double mag = std::fabs(a);
  BesselHalfVector bessel = bessel_half_vector(n, mag / 2.0);
  ComplexVector out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double value = std::sqrt(2.0 * k + 1.0) * std::sqrt(2.0 * kPi) *
                   bessel.values[static_cast<size_t>(k)] / std::sqrt(mag);
    out[static_cast<size_t>(k)] = i_power(k) * value;
    if (a < 0.0 && k % 2 == 1) out[static_cast<size_t>(k)] = -out[static_cast<size_t>(k)];
  }
  return out;
}

ComplexVector scaling_transform_vector(int n, double a) {
  ComplexVector v = scaling_fourier_vector(n, 2.0 * a);
  for (auto& z : v) z = std::conj(z);
  return v;
}

TwoScaleSymbol two_scale_symbol(const CoeffMatrixPair& coeff, double a) {
  int n = coeff.order;
  TwoScaleSymbol symbol;
  symbol.order = n;
  symbol.argument = a;
  std::vector<std::vector<double>> c1 = coeff.C1.to_double();
  std::vector<std::vector<double>> cm1 = coeff.Cm1.to_double();
  std::complex<double> plus = std::exp(std::complex<double>(0.0, a / 2.0));
  std::complex<double> minus = std::conj(plus);
  symbol.matrix.assign(static_cast<size_t>(n) + 1, ComplexVector(static_cast<size_t>(n) + 1));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      symbol.matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          0.5 * (cm1[static_cast<size_t>(r)][static_cast<size_t>(c)] * plus +
                 c1[static_cast<size_t>(r)][static_cast<size_t>(c)] * minus);
  return symbol;
}

double verify_two_scale(const CoeffMatrixPair& coeff, std::span<const double> samples) {
  int n = coeff.order;
  double worst = 0.0;
  for (double a : samples) {
    ComplexVector lhs = scaling_transform_vector(n, a);
    ComplexVector rhs = mat_vec(two_scale_symbol(coeff, a).matrix, scaling_transform_vector(n, a / 2.0));
    for (size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
    worst = std::max(worst, inf_norm(lhs));
  }
  return worst;
}

double verify_addition_formula(const CoeffMatrixPair& coeff, std::span<const double> samples) {
  int n = coeff.order;
  std::vector<std::vector<double>> c1 = coeff.C1.to_double();
  double worst = 0.0;
  for (double a : samples) {
    BesselHalfVector full = bessel_half_vector(n, a);
    BesselHalfVector half = bessel_half_vector(n, a / 2.0);
    std::complex<double> plus = std::exp(std::complex<double>(0.0, a / 2.0));
    std::complex<double> minus = std::conj(plus);
    double root_a = std::sqrt(a);
    double root_half = std::sqrt(a / 2.0);

    // Componentwise complex identity for every row.
    for (int row = 0; row <= n; ++row) {
      std::complex<double> lhs = i_power(row) * std::sqrt(2.0 * row + 1.0) *
                                 full.values[static_cast<size_t>(row)] / root_a;
      std::complex<double> rhs{0.0, 0.0};
      for (int k = 0; k <= row; ++k) {
        std::complex<double> bracket = ((row + k) % 2 == 0 ? 1.0 : -1.0) * minus + plus;
        rhs += 0.5 * c1[static_cast<size_t>(row)][static_cast<size_t>(k)] * bracket * i_power(k) *
               std::sqrt(2.0 * k + 1.0) * half.values[static_cast<size_t>(k)] / root_half;
      }
      worst = std::max(worst, std::abs(lhs - rhs));
    }

    // Real parity-split forms.
    double cos_half = std::cos(a / 2.0);
    double sin_half = std::sin(a / 2.0);
    for (int row = 0; row <= n; ++row) {
      int half_index = row / 2;
      double sign = half_index % 2 == 0 ? 1.0 : -1.0;
      double lhs = sign * std::sqrt(2.0 * row + 1.0) * full.values[static_cast<size_t>(row)] / root_a;
      double even_sum = 0.0, odd_sum = 0.0;
      for (int k = 0; k <= row; k += 2)
        even_sum += (k / 2 % 2 == 0 ? 1.0 : -1.0) * c1[static_cast<size_t>(row)][static_cast<size_t>(k)] *
                    std::sqrt(2.0 * k + 1.0) * half.values[static_cast<size_t>(k)] / root_half;
      for (int k = 1; k <= row; k += 2)
        odd_sum += (k / 2 % 2 == 0 ? 1.0 : -1.0) * c1[static_cast<size_t>(row)][static_cast<size_t>(k)] *
                   std::sqrt(2.0 * k + 1.0) * half.values[static_cast<size_t>(k)] / root_half;
      double rhs = row % 2 == 0 ? cos_half * even_sum - sin_half * odd_sum
                                : sin_half * even_sum + cos_half * odd_sum;
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  }
  return worst;
}

double verify_derivative_relation(const CoeffMatrixPair& coeff, std::span<const double> samples) {
  int n = coeff.order;
  std::vector<std::vector<double>> c1 = coeff.C1.to_double();
  std::vector<std::vector<double>> cm1 = coeff.Cm1.to_double();
  size_t dim = static_cast<size_t>(n) + 1;

  // G = diag((-i)^k sqrt(2k+1)); H = G L G^{-1} is tridiagonal imaginary.
  ComplexVector g(dim);
  for (int k = 0; k <= n; ++k) g[static_cast<size_t>(k)] = std::conj(i_power(k)) * std::sqrt(2.0 * k + 1.0);
  ComplexMatrix h(dim, ComplexVector(dim, {0.0, 0.0}));
  for (int k = 0; k <= n; ++k) {
    if (k + 1 <= n) h[static_cast<size_t>(k)][static_cast<size_t>(k) + 1] =
        -g[static_cast<size_t>(k)] / g[static_cast<size_t>(k) + 1];
    if (k - 1 >= 0) h[static_cast<size_t>(k)][static_cast<size_t>(k) - 1] =
        g[static_cast<size_t>(k)] / g[static_cast<size_t>(k) - 1];
  }

  auto hat_vector = [&](double b) {
    BesselHalfVector bessel = bessel_half_vector(n, b);
    ComplexVector out(dim);
    for (int k = 0; k <= n; ++k)
      out[static_cast<size_t>(k)] = g[static_cast<size_t>(k)] * bessel.values[static_cast<size_t>(k)];
    return out;
  };
  auto boundary = [&](double b) {
    ComplexVector out(dim, {0.0, 0.0});
    BesselHalfVector bessel = bessel_half_vector(n + 1, b);
    out[0] = g[0] * bessel_half_minus(b);
    out[dim - 1] -= g[dim - 1] * bessel.values[static_cast<size_t>(n) + 1];
    return out;
  };

  double worst = 0.0;
  for (double a : samples) {
    std::complex<double> plus = std::exp(std::complex<double>(0.0, a / 2.0));
    std::complex<double> minus = std::conj(plus);
    ComplexMatrix t(dim, ComplexVector(dim, {0.0, 0.0}));
    ComplexMatrix t_prime(dim, ComplexVector(dim, {0.0, 0.0}));
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        t[r][c] = 0.5 * (cm1[r][c] * plus + c1[r][c] * minus);
        t_prime[r][c] = std::complex<double>(0.0, 0.25) * (cm1[r][c] * plus - c1[r][c] * minus);
      }
    ComplexVector hat_half = hat_vector(a / 2.0);
    ComplexVector lhs = mat_vec(t_prime, hat_half);

    ComplexMatrix ht = mat_mul(h, t);
    ComplexMatrix th = mat_mul(t, h);
    ComplexVector rhs(dim, {0.0, 0.0});
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c)
        rhs[r] += (0.5 * ht[r][c] - 0.25 * th[r][c]) * hat_half[c];
    ComplexVector bd_full = boundary(a);
    ComplexVector bd_half = boundary(a / 2.0);
    ComplexVector t_bd = mat_vec(t, bd_half);
    for (size_t r = 0; r < dim; ++r)
      rhs[r] += bd_full[r] / (2.0 * std::numbers::sqrt2) - 0.25 * t_bd[r];

    for (size_t r = 0; r < dim; ++r) lhs[r] -= rhs[r];
    worst = std::max(worst, inf_norm(lhs));
  }
  return worst;
}

double verify_symbol_qmf(const CoeffMatrixPair& coeff, std::span<const double> samples) {
  int n = coeff.order;
  size_t dim = static_cast<size_t>(n) + 1;
  double worst = 0.0;
  for (double a : samples) {
    ComplexMatrix t0 = two_scale_symbol(coeff, a).matrix;
    ComplexMatrix t1 = two_scale_symbol(coeff, a + kPi).matrix;
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        std::complex<double> acc{0.0, 0.0};
        for (size_t k = 0; k < dim; ++k)
          acc += t0[r][k] * std::conj(t0[c][k]) + t1[r][k] * std::conj(t1[c][k]);
        if (r == c) acc -= 1.0;
        worst = std::max(worst, std::abs(acc));
      }
  }
  return worst;
}

std::vector<double> default_sample_grid() {
  std::vector<double> out;
  out.reserve(100);
  double lo = 1e-3, hi = 20.0;
  for (int i = 0; i < 100; ++i) {
    double t = static_cast<double>(i + 1) / 100.0;
    out.push_back(lo * std::pow(hi / lo, t));
  }
  return out;
}

}  // namespace alpert
