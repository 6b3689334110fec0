#ifndef ALPERT_FOURIER_HPP
#define ALPERT_FOURIER_HPP

#include <complex>
#include <span>
#include <vector>

#include "alpert/refinement.hpp"

namespace alpert {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;
using ComplexVector = std::vector<std::complex<double>>;

/// J_{k+1/2}(a) for k = 0..n. Closed forms seed k = 0, 1; upward recurrence
/// when the orders stay below the argument, downward (Miller) otherwise;
/// direct series for small arguments.
struct BesselHalfVector {
  int order_count = 0;
  double argument = 0.0;
  std::vector<double> values;
};
BesselHalfVector bessel_half_vector(int n, double a);

/// J_{-1/2}(a) = sqrt(2/(pi a)) cos a.
double bessel_half_minus(double a);

/// Multiprecision series reference for the spherical function j_k(a) =
/// sqrt(pi/(2a)) J_{k+1/2}(a).
mpf_class spherical_bessel_reference(int k, double a, mp_bitcnt_t precision_bits);

/// Component k: sqrt(2k+1) sqrt(2 pi) i^k J_{k+1/2}(a/2) / sqrt(a); the
/// e^{+iat} transform convention.
ComplexVector scaling_fourier_vector(int n, double a);

/// The e^{-iat} transform of the scaling vector on [-1, 1] (the conjugate
/// convention, at the doubled argument scale).
ComplexVector scaling_transform_vector(int n, double a);

/// T_n(a) = (Cm1 e^{ia/2} + C1 e^{-ia/2}) / 2.
struct TwoScaleSymbol {
  int order = 0;
  double argument = 0.0;
  ComplexMatrix matrix;
};
TwoScaleSymbol two_scale_symbol(const CoeffMatrixPair& coeff, double a);

/// Max over samples of the two-scale residual || P~(a) - T(a) P~(a/2) ||_inf.
double verify_two_scale(const CoeffMatrixPair& coeff, std::span<const double> samples);

/// Max residual of the row-wise Bessel addition formula, both as the complex
/// component identity and as the two real parity-split forms.
double verify_addition_formula(const CoeffMatrixPair& coeff, std::span<const double> samples);

/// Max residual of the derivative identity for the two-scale symbol, with
/// T'(a) computed analytically.
double verify_derivative_relation(const CoeffMatrixPair& coeff, std::span<const double> samples);

/// Max residual of T(a) T(a)^H + T(a+pi) T(a+pi)^H = I.
double verify_symbol_qmf(const CoeffMatrixPair& coeff, std::span<const double> samples);

/// 100 logarithmically spaced points in (1e-3, 20].
std::vector<double> default_sample_grid();

}  // namespace alpert

#endif  // ALPERT_FOURIER_HPP
