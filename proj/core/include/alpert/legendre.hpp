#ifndef ALPERT_LEGENDRE_HPP
#define ALPERT_LEGENDRE_HPP

#include <vector>

#include "alpert/poly.hpp"

namespace alpert {

/// Monic Legendre polynomial p_n on [-1, 1] from the three-term recurrence
/// p_{n+1} = t p_n - n^2 / ((2n+1)(2n-1)) p_{n-1}.
PolyExact monic_legendre(int n);

/// Multiplier turning p_n into the orthonormal polynomial on [-1, 1].
SurdValue orthonormal_scale(int n);

/// Orthonormal Legendre polynomial with positive leading coefficient.
PolySurd orthonormal_legendre(int n);

/// Orthonormal Legendre rescaled to the unit interval: p_hat_n(2t - 1).
PolySurd orthonormal_on_unit(int n);

/// Scaling vector (phi_0(t), ..., phi_n(t)); phi_j(t) = p_hat_j(2t-1) on
/// [0, 1) and zero elsewhere, including at t = 1.
std::vector<SurdValue> eval_scaling_vector(int n, const Rational& t);

/// Refinement coefficient by direct integration: the projection of p_hat_i
/// onto the translate p_hat_j(2t-1), i.e. 2 * int_0^1 p_hat_i(t)
/// p_hat_j(2t-1) dt. This is the independent oracle the closed forms are
/// validated against. Zero for j > i.
SurdValue integrate_shifted_product(int i, int j);

/// int_{-1}^{1} p_hat_i p_hat_j dt, exact.
SurdValue legendre_inner_product(int i, int j);

}  // namespace alpert

#endif  // ALPERT_LEGENDRE_HPP
