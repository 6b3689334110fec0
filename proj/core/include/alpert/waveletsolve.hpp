#ifndef ALPERT_WAVELETSOLVE_HPP
#define ALPERT_WAVELETSOLVE_HPP

#include <string>
#include <vector>

#include "alpert/poly.hpp"
#include "alpert/refinement.hpp"

namespace alpert {

/// Raised when the orthogonality constraints do not leave a one-dimensional
/// solution space for a wavelet row.
struct NullspaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wavelet matrix pair. D1 is upper triangular with positive diagonal and
/// (D1)_{n,n} = 1; Dm1 follows from (Dm1)_{i,j} = (-1)^{i+j+1} (D1)_{i,j}.
/// Rows that fell back to the high-precision float solve are listed in
/// inexact_rows and exact is false.
struct WaveletMatrixPair {
  int order = 0;
  SurdMatrix D1, Dm1;
  bool exact = true;
  std::vector<int> inexact_rows;
};

/// Row-by-row inductive solve: row n is (0,...,0,1); each earlier row is the
/// unit-norm positive-diagonal generator of the nullspace of the
/// orthogonality constraints against opposite-parity rows of C1 and
/// same-parity later rows of D1. Order 0 is the antisymmetric special case
/// D1 = (-1), Dm1 = (1).
WaveletMatrixPair solve_wavelet_pair(const CoeffMatrixPair& coeff);

/// Exact checks of both orthogonality identities plus orthogonality of the
/// stacked two-scale block matrix [[Cm1, C1], [Dm1, D1]] (times 1/sqrt(2)).
bool verify_wavelet_orthogonality(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet);

/// For each parity p, the opposite-parity split of C1 and D1 rows is a full
/// orthonormal system of n+1 vectors. Exact.
bool verify_parity_basis(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet);

struct LemmaEvenReport {
  bool zero_pattern_holds = true;       // (D1^n)_{n-2j, n} = 0 for j >= 1
  bool trailing_agreement_holds = true;  // rows n-2j match the order n-1 solve
  std::vector<int> matched_rows;
  std::string correspondence;
};

/// Builds orders n and n-1 and records the index correspondence that
/// actually holds between them.
LemmaEvenReport verify_lemma_even(int n);

/// Closed form of row n-3 (columns n-3..n) as produced by the solve.
std::vector<SurdValue> wavelet_row_nm3_closed_form(int n);

/// Psi_n((t+1)/2) = Dm1 P_n(2t+1) + D1 P_n(2t-1) for -1 <= t <= 1 (closed
/// support at this evaluation level), zero vector outside.
std::vector<SurdValue> eval_wavelet_vector(const WaveletMatrixPair& wavelet, const Rational& t);

/// Piecewise-polynomial form of the wavelets on [0, 1): rows of Dm1 drive
/// the left half, rows of D1 the right half.
struct WaveletPieces {
  std::vector<PolySurd> left;   // on [0, 1/2)
  std::vector<PolySurd> right;  // on [1/2, 1)
};
WaveletPieces wavelet_pieces(const WaveletMatrixPair& wavelet);

/// Exact moment int_0^1 x^m psi_row(x) dx.
SurdValue wavelet_moment(const WaveletPieces& pieces, int row, int m);

}  // namespace alpert

#endif  // ALPERT_WAVELETSOLVE_HPP
