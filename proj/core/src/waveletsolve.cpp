#include "alpert/waveletsolve.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "alpert/legendre.hpp"

namespace alpert {

namespace {

constexpr int kSolveRadicalLimit = SurdValue::kDefaultRadicalLimit;

// Reduced row echelon form with pivoting by enclosure magnitude; returns the
// one-dimensional nullspace generator (free variable set to 1). Throws
// NullspaceError when the rank is not cols-1 and RadicalLimitError when a
// pivot inverse is too wide to rationalize.
std::vector<SurdValue> nullspace_vector_exact(std::vector<std::vector<SurdValue>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_cols;
  int pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int best = -1;
    double best_mag = 0.0;
    for (int r = pivot_row; r < rows; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) continue;
      double mag = std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(c)].to_double());
      if (best < 0 || mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best < 0) continue;
    std::swap(a[static_cast<size_t>(pivot_row)], a[static_cast<size_t>(best)]);
    SurdValue inv = a[static_cast<size_t>(pivot_row)][static_cast<size_t>(c)].inverse(kSolveRadicalLimit);
    for (int cc = c; cc < cols; ++cc)
      a[static_cast<size_t>(pivot_row)][static_cast<size_t>(cc)] =
          a[static_cast<size_t>(pivot_row)][static_cast<size_t>(cc)] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      SurdValue f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int cc = c; cc < cols; ++cc)
        a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
            f * a[static_cast<size_t>(pivot_row)][static_cast<size_t>(cc)];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  if (pivot_row != cols - 1)
    throw NullspaceError("wavelet solve: nullspace dimension is not one (rank " +
                         std::to_string(pivot_row) + " of " + std::to_string(cols) + " columns)");
  int free_col = 0;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    while (free_col < cols && is_pivot[static_cast<size_t>(free_col)]) ++free_col;
  }
  std::vector<SurdValue> x(static_cast<size_t>(cols));
  x[static_cast<size_t>(free_col)] = SurdValue(Rational(1));
  for (size_t r = 0; r < pivot_cols.size(); ++r)
    x[static_cast<size_t>(pivot_cols[r])] = -a[r][static_cast<size_t>(free_col)];
  return x;
}

// 256-bit float fallback for a row whose exact elimination is not
// representable; the returned entries are binary rationals.
std::vector<SurdValue> nullspace_vector_float(const std::vector<std::vector<SurdValue>>& exact_a) {
  constexpr mp_bitcnt_t kPrec = 256;
  int rows = static_cast<int>(exact_a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(exact_a[0].size());
  std::vector<std::vector<mpf_class>> a(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a[static_cast<size_t>(r)].push_back(exact_a[static_cast<size_t>(r)][static_cast<size_t>(c)].to_mpf(kPrec));
  std::vector<int> pivot_cols;
  int pivot_row = 0;
  mpf_class tiny(1e-40, kPrec);
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int best = -1;
    mpf_class best_mag(0, kPrec);
    for (int r = pivot_row; r < rows; ++r) {
      mpf_class mag(0, kPrec);
      mpf_abs(mag.get_mpf_t(), a[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpf_t());
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best < 0 || best_mag < tiny) continue;
    std::swap(a[static_cast<size_t>(pivot_row)], a[static_cast<size_t>(best)]);
    mpf_class inv = 1 / a[static_cast<size_t>(pivot_row)][static_cast<size_t>(c)];
    for (int cc = c; cc < cols; ++cc) a[static_cast<size_t>(pivot_row)][static_cast<size_t>(cc)] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      mpf_class f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
      for (int cc = c; cc < cols; ++cc)
        a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * a[static_cast<size_t>(pivot_row)][static_cast<size_t>(cc)];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  if (pivot_row != cols - 1)
    throw NullspaceError("wavelet solve (float fallback): nullspace dimension is not one");
  int free_col = 0;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    while (free_col < cols && is_pivot[static_cast<size_t>(free_col)]) ++free_col;
  }
  std::vector<mpf_class> x(static_cast<size_t>(cols), mpf_class(0, kPrec));
  x[static_cast<size_t>(free_col)] = 1;
  for (size_t r = 0; r < pivot_cols.size(); ++r)
    x[static_cast<size_t>(pivot_cols[r])] = -a[r][static_cast<size_t>(free_col)];
  mpf_class norm2(0, kPrec);
  for (const mpf_class& v : x) norm2 += v * v;
  mpf_class norm(0, kPrec);
  mpf_sqrt(norm.get_mpf_t(), norm2.get_mpf_t());
  if (sgn(x[0]) < 0) norm = -norm;  // make the diagonal entry positive
  std::vector<SurdValue> out;
  for (mpf_class& v : x) {
    v /= norm;
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), v.get_mpf_t());
    out.emplace_back(Rational(q));
  }
  return out;
}

}  // namespace

WaveletMatrixPair solve_wavelet_pair(const CoeffMatrixPair& coeff) {
  int n = coeff.order;
  WaveletMatrixPair out;
  out.order = n;
  out.D1 = SurdMatrix(n + 1, n + 1);
  out.Dm1 = SurdMatrix(n + 1, n + 1);

  if (n == 0) {
    // Haar: the antisymmetric solution, diagonal sign fixed by convention.
    out.D1(0, 0) = SurdValue(Rational(-1));
    out.Dm1(0, 0) = SurdValue(Rational(1));
    return out;
  }

  out.D1(n, n) = SurdValue(Rational(1));
  for (int r = n - 1; r >= 0; --r) {
    int unknowns = n - r + 1;  // columns r..n of row r
    std::vector<std::vector<SurdValue>> constraints;
    // Opposite-parity rows of C1; rows below r give vacuous constraints.
    for (int i = r + 1; i <= n; i += 2) {
      std::vector<SurdValue> row(static_cast<size_t>(unknowns));
      for (int c = r; c <= n; ++c)
        if (c <= i) row[static_cast<size_t>(c - r)] = coeff.C1(i, c);
      constraints.push_back(std::move(row));
    }
    // Same-parity rows of D1 already computed below.
    for (int s = r + 2; s <= n; s += 2) {
      std::vector<SurdValue> row(static_cast<size_t>(unknowns));
      for (int c = r; c <= n; ++c) row[static_cast<size_t>(c - r)] = out.D1(s, c);
      constraints.push_back(std::move(row));
    }

    std::vector<SurdValue> x;
    bool fell_back = false;
    try {
      x = nullspace_vector_exact(constraints);
      SurdValue norm2;
      for (const SurdValue& v : x) norm2 += v * v;
      if (!norm2.is_rational())
        throw RadicalLimitError("row norm is not rational");
      SurdValue inv_norm = SurdValue::sqrt_rational(Rational(1) / norm2.rational_value());
      for (SurdValue& v : x) v = v * inv_norm;
      if (x[0].is_zero())
        throw NullspaceError("wavelet solve: zero diagonal entry in row " + std::to_string(r));
      if (x[0].sign() < 0)
        for (SurdValue& v : x) v = -v;
    } catch (const RadicalLimitError&) {
      x = nullspace_vector_float(constraints);
      fell_back = true;
    }
    if (fell_back) {
      out.exact = false;
      out.inexact_rows.push_back(r);
    }
    for (int c = r; c <= n; ++c) out.D1(r, c) = x[static_cast<size_t>(c - r)];
  }

  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const SurdValue& v = out.D1(i, j);
      out.Dm1(i, j) = (i + j) % 2 == 0 ? -v : v;
    }
  return out;
}

bool verify_wavelet_orthogonality(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet) {
  if (coeff.order != wavelet.order)
    throw std::invalid_argument("verify_wavelet_orthogonality: order mismatch");
  int n = coeff.order;
  SurdMatrix cross = coeff.Cm1 * wavelet.Dm1.transpose() + coeff.C1 * wavelet.D1.transpose();
  SurdMatrix zero(n + 1, n + 1);
  if (!(cross == zero)) return false;
  SurdMatrix gram = wavelet.Dm1 * wavelet.Dm1.transpose() + wavelet.D1 * wavelet.D1.transpose();
  SurdMatrix two_identity = SurdMatrix::identity(n + 1);
  two_identity.scale(Rational(2));
  if (!(gram == two_identity)) return false;
  // Stacked one-level block matrix; the 1/sqrt(2) squares away.
  int m = 2 * (n + 1);
  SurdMatrix stacked(m, m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      stacked(i, j) = coeff.Cm1(i, j);
      stacked(i, n + 1 + j) = coeff.C1(i, j);
      stacked(n + 1 + i, j) = wavelet.Dm1(i, j);
      stacked(n + 1 + i, n + 1 + j) = wavelet.D1(i, j);
    }
  SurdMatrix big = stacked * stacked.transpose();
  SurdMatrix two_big = SurdMatrix::identity(m);
  two_big.scale(Rational(2));
  return big == two_big;
}

bool verify_parity_basis(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet) {
  int n = coeff.order;
  for (int parity = 0; parity <= 1; ++parity) {
    std::vector<std::vector<SurdValue>> rows;
    for (int i = parity; i <= n; i += 2) {
      std::vector<SurdValue> row;
      for (int c = 0; c <= n; ++c) row.push_back(coeff.C1(i, c));
      rows.push_back(std::move(row));
    }
    for (int r = 1 - parity; r <= n; r += 2) {
      std::vector<SurdValue> row;
      for (int c = 0; c <= n; ++c) row.push_back(wavelet.D1(r, c));
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != n + 1) return false;
    for (size_t a = 0; a < rows.size(); ++a)
      for (size_t b = a; b < rows.size(); ++b) {
        SurdValue dot;
        for (int c = 0; c <= n; ++c) dot += rows[a][static_cast<size_t>(c)] * rows[b][static_cast<size_t>(c)];
        if (a == b ? !(dot == SurdValue(Rational(1))) : !dot.is_zero()) return false;
      }
  }
  return true;
}

LemmaEvenReport verify_lemma_even(int n) {
  if (n < 2) throw std::invalid_argument("verify_lemma_even: requires n >= 2");
  LemmaEvenReport report;
  WaveletMatrixPair current = solve_wavelet_pair(build_refinement_pair(n));
  WaveletMatrixPair previous = solve_wavelet_pair(build_refinement_pair(n - 1));
  for (int j = 1; n - 2 * j >= 0; ++j) {
    int row = n - 2 * j;
    if (!current.D1(row, n).is_zero()) report.zero_pattern_holds = false;
    bool match = true;
    for (int c = 0; c <= n - 1; ++c)
      if (!(current.D1(row, c) == previous.D1(row, c))) match = false;
    if (match) report.matched_rows.push_back(row);
    else report.trailing_agreement_holds = false;
  }
  report.correspondence =
      "rows n-2j (j>=1) of order n equal the same absolute rows of order n-1 "
      "on columns 0..n-1, with entry (n-2j, n) = 0";
  return report;
}

std::vector<SurdValue> wavelet_row_nm3_closed_form(int n) {
  if (n < 3) throw std::invalid_argument("wavelet_row_nm3_closed_form: requires n >= 3");
  Rational d1(4L * (n - 1) * (n - 2));
  Rational d2(4L * n * (n - 1));
  return {
      SurdValue(Rational(3) / d1),
      SurdValue::radical(Rational(-3) / d1, (2L * n - 3) * (2L * n - 5)),
      SurdValue::radical(Rational(2L * n + 1) / d2, (2L * n - 1) * (2L * n - 5)),
      SurdValue::radical(Rational(1) / d2, (2L * n + 1) * (2L * n - 5)),
  };
}

std::vector<SurdValue> eval_wavelet_vector(const WaveletMatrixPair& wavelet, const Rational& t) {
  int n = wavelet.order;
  std::vector<SurdValue> out(static_cast<size_t>(n) + 1);
  if (t < Rational(-1) || t > Rational(1)) return out;
  // P_n on the closed interval [-1, 1] at this evaluation level.
  auto basis_at = [&](const Rational& u) {
    std::vector<SurdValue> values(static_cast<size_t>(n) + 1);
    if (u < Rational(-1) || u > Rational(1)) return values;
    for (int j = 0; j <= n; ++j) values[static_cast<size_t>(j)] = orthonormal_legendre(j).evaluate(u);
    return values;
  };
  std::vector<SurdValue> left = basis_at(Rational(2) * t + Rational(1));
  std::vector<SurdValue> right = basis_at(Rational(2) * t - Rational(1));
  for (int i = 0; i <= n; ++i) {
    SurdValue acc;
    for (int j = 0; j <= n; ++j) {
      if (!left[static_cast<size_t>(j)].is_zero()) acc += wavelet.Dm1(i, j) * left[static_cast<size_t>(j)];
      if (!right[static_cast<size_t>(j)].is_zero()) acc += wavelet.D1(i, j) * right[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

WaveletPieces wavelet_pieces(const WaveletMatrixPair& wavelet) {
  int n = wavelet.order;
  WaveletPieces pieces;
  for (int i = 0; i <= n; ++i) {
    PolySurd left, right;
    for (int j = 0; j <= n; ++j) {
      PolySurd basis_left = orthonormal_legendre(j).compose_affine(Rational(4), Rational(-1));
      PolySurd basis_right = orthonormal_legendre(j).compose_affine(Rational(4), Rational(-3));
      basis_left.scale(wavelet.Dm1(i, j));
      basis_right.scale(wavelet.D1(i, j));
      left += basis_left;
      right += basis_right;
    }
    pieces.left.push_back(std::move(left));
    pieces.right.push_back(std::move(right));
  }
  return pieces;
}

SurdValue wavelet_moment(const WaveletPieces& pieces, int row, int m) {
  std::vector<SurdValue> monomial(static_cast<size_t>(m) + 1);
  monomial[static_cast<size_t>(m)] = SurdValue(Rational(1));
  PolySurd x_power{std::vector<SurdValue>(monomial)};
  PolySurd left = pieces.left[static_cast<size_t>(row)] * x_power;
  PolySurd right = pieces.right[static_cast<size_t>(row)] * x_power;
  return left.integral(Rational(0), Rational(1, 2)) + right.integral(Rational(1, 2), Rational(1));
}

}  // namespace alpert
