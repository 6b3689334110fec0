#include <doctest.h>

#include "alpert/waveletsolve.hpp"

using namespace alpert;

namespace {

SurdValue rad(long num, long den, long m) { return SurdValue::radical(Rational(num, den), m); }

WaveletMatrixPair solve(int n) { return solve_wavelet_pair(build_refinement_pair(n)); }

}  // namespace

TEST_CASE("order zero is the Haar special case") {
  WaveletMatrixPair w = solve(0);
  CHECK(w.D1(0, 0) == SurdValue(Rational(-1)));
  CHECK(w.Dm1(0, 0) == SurdValue(Rational(1)));
  CHECK(verify_wavelet_orthogonality(build_refinement_pair(0), w));
}

TEST_CASE("order one matches the printed matrix") {
  WaveletMatrixPair w = solve(1);
  CHECK(w.D1(0, 0) == SurdValue(Rational(1, 2)));
  CHECK(w.D1(0, 1) == rad(-1, 2, 3));
  CHECK(w.D1(1, 0).is_zero());
  CHECK(w.D1(1, 1) == SurdValue(Rational(1)));
  CHECK(w.Dm1(0, 0) == SurdValue(Rational(-1, 2)));
  CHECK(w.Dm1(0, 1) == rad(-1, 2, 3));
  CHECK(w.Dm1(1, 1) == SurdValue(Rational(-1)));
  CHECK(w.exact);
}

TEST_CASE("upper triangular with positive unit-norm rows") {
  for (int n = 1; n <= 8; ++n) {
    WaveletMatrixPair w = solve(n);
    CHECK(w.exact);
    CHECK(w.D1(n, n) == SurdValue(Rational(1)));
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < i; ++j) CHECK(w.D1(i, j).is_zero());
      CHECK(w.D1(i, i).sign() == 1);
      SurdValue norm;
      for (int j = i; j <= n; ++j) norm += w.D1(i, j) * w.D1(i, j);
      CHECK(norm == SurdValue(Rational(1)));
    }
  }
}

TEST_CASE("closed-form rows near the bottom") {
  for (int n = 2; n <= 10; ++n) {
    WaveletMatrixPair w = solve(n);
    CHECK(w.D1(n - 1, n - 1) == SurdValue(Rational(1, 2L * n)));
    CHECK(w.D1(n - 1, n) == rad(-1, 2L * n, (2L * n + 1) * (2L * n - 1)));
    CHECK(w.D1(n - 2, n - 2) == SurdValue(Rational(1, 2L * n - 2)));
    CHECK(w.D1(n - 2, n - 1) == rad(-1, 2L * n - 2, (2L * n - 1) * (2L * n - 3)));
    CHECK(w.D1(n - 2, n).is_zero());
  }
  // explicit values at n = 4: row 3 is (1/8, -3 sqrt(7)/8)
  WaveletMatrixPair w4 = solve(4);
  CHECK(w4.D1(3, 3) == SurdValue(Rational(1, 8)));
  CHECK(w4.D1(3, 4) == rad(-3, 8, 7));
  // n = 5: row 3 is (1/8, -3 sqrt(7)/8, 0)
  WaveletMatrixPair w5 = solve(5);
  CHECK(w5.D1(3, 3) == SurdValue(Rational(1, 8)));
  CHECK(w5.D1(3, 4) == rad(-1, 8, 63));
  CHECK(w5.D1(3, 5).is_zero());
}

TEST_CASE("closed form of row n-3") {
  std::vector<SurdValue> row3 = wavelet_row_nm3_closed_form(3);
  CHECK(row3[0] == SurdValue(Rational(3, 8)));
  CHECK(row3[1] == rad(-3, 8, 3));
  CHECK(row3[2] == rad(7, 24, 5));
  CHECK(row3[3] == rad(1, 24, 7));
  for (int n = 3; n <= 10; ++n) {
    std::vector<SurdValue> row = wavelet_row_nm3_closed_form(n);
    SurdValue norm;
    for (const SurdValue& v : row) norm += v * v;
    CHECK(norm == SurdValue(Rational(1)));
    WaveletMatrixPair w = solve(n);
    for (int c = 0; c < 4; ++c) CHECK(w.D1(n - 3, n - 3 + c) == row[static_cast<size_t>(c)]);
  }
}

TEST_CASE("orthogonality identities and stacked block matrix") {
  for (int n = 0; n <= 8; ++n) {
    CoeffMatrixPair c = build_refinement_pair(n);
    WaveletMatrixPair w = solve_wavelet_pair(c);
    CHECK(verify_wavelet_orthogonality(c, w));
  }
}

TEST_CASE("parity-split rows form complete orthonormal systems") {
  for (int n = 0; n <= 8; ++n) {
    CoeffMatrixPair c = build_refinement_pair(n);
    CHECK(verify_parity_basis(c, solve_wavelet_pair(c)));
  }
}

TEST_CASE("alternating-row zero pattern and order agreement") {
  LemmaEvenReport r3 = verify_lemma_even(3);
  CHECK(r3.zero_pattern_holds);
  CHECK(r3.trailing_agreement_holds);
  WaveletMatrixPair w3 = solve(3);
  CHECK(w3.D1(1, 3).is_zero());
  WaveletMatrixPair w2 = solve(2);
  CHECK(w2.D1(0, 2).is_zero());
  LemmaEvenReport r4 = verify_lemma_even(4);
  CHECK(r4.zero_pattern_holds);
  CHECK(r4.trailing_agreement_holds);
  CHECK(r4.matched_rows == std::vector<int>{2, 0});
  for (int n = 5; n <= 9; ++n) {
    LemmaEvenReport report = verify_lemma_even(n);
    CHECK(report.zero_pattern_holds);
    CHECK(report.trailing_agreement_holds);
  }
}

TEST_CASE("deterministic solve") {
  WaveletMatrixPair first = solve(6);
  WaveletMatrixPair second = solve(6);
  CHECK(first.D1 == second.D1);
  CHECK(first.Dm1 == second.Dm1);
}

TEST_CASE("vanishing moments") {
  for (int n = 0; n <= 8; ++n) {
    WaveletPieces pieces = wavelet_pieces(solve(n));
    for (int row = 0; row <= n; ++row)
      for (int m = 0; m <= n; ++m) CHECK(wavelet_moment(pieces, row, m).is_zero());
  }
  // degree n+1 moments do not all vanish
  WaveletPieces pieces = wavelet_pieces(solve(3));
  bool any_nonzero = false;
  for (int row = 0; row <= 3; ++row)
    if (!wavelet_moment(pieces, row, 4).is_zero()) any_nonzero = true;
  CHECK(any_nonzero);
}

TEST_CASE("wavelet vector evaluation") {
  WaveletMatrixPair w0 = solve(0);
  std::vector<SurdValue> haar = eval_wavelet_vector(w0, Rational(-1, 2));
  CHECK(haar[0] == SurdValue::radical(Rational(1, 2), 2));
  std::vector<SurdValue> outside = eval_wavelet_vector(w0, Rational(3, 2));
  CHECK(outside[0].is_zero());
  WaveletMatrixPair w1 = solve(1);
  std::vector<SurdValue> join = eval_wavelet_vector(w1, Rational(0));
  CHECK(join.size() == 2);
  // both halves contribute at the join
  std::vector<SurdValue> left_only = eval_wavelet_vector(w1, Rational(-1, 2));
  std::vector<SurdValue> right_only = eval_wavelet_vector(w1, Rational(1, 2));
  CHECK(!(left_only[0] == join[0]));
  CHECK(!(right_only[0] == join[0]));
}

TEST_CASE("rejects mismatched orders") {
  CoeffMatrixPair c2 = build_refinement_pair(2);
  WaveletMatrixPair w3 = solve(3);
  CHECK_THROWS_AS(verify_wavelet_orthogonality(c2, w3), std::invalid_argument);
}

TEST_CASE("radical-budget overflow falls back to the float solve") {
  // A constraint row whose pivot radicand mixes nine primes cannot be
  // rationalized within the default budget; the row must come back as a
  // flagged high-precision approximation instead of an error.
  CoeffMatrixPair synthetic;
  synthetic.order = 1;
  synthetic.C1 = SurdMatrix(2, 2);
  synthetic.Cm1 = SurdMatrix(2, 2);
  synthetic.C1(0, 0) = SurdValue(Rational(1));
  synthetic.C1(1, 0) = SurdValue::sqrt_integer(2L * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23);
  synthetic.C1(1, 1) = SurdValue(Rational(1, 3));
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= i; ++j)
      synthetic.Cm1(i, j) = (i + j) % 2 == 0 ? synthetic.C1(i, j) : -synthetic.C1(i, j);
  WaveletMatrixPair w = solve_wavelet_pair(synthetic);
  CHECK(!w.exact);
  CHECK(w.inexact_rows == std::vector<int>{0});
  // the fallback row still solves the constraint and has unit norm, well
  // inside the 1e-30 tolerance granted to flagged rows
  SurdValue residual = synthetic.C1(1, 0) * w.D1(0, 0) + synthetic.C1(1, 1) * w.D1(0, 1);
  SurdValue norm = w.D1(0, 0) * w.D1(0, 0) + w.D1(0, 1) * w.D1(0, 1) - SurdValue(Rational(1));
  auto magnitude_below = [](const SurdValue& v, double bound) {
    mpf_class value = v.to_mpf(512);
    mpf_abs(value.get_mpf_t(), value.get_mpf_t());
    return value < mpf_class(bound, 512);
  };
  CHECK(magnitude_below(residual, 1e-30));
  CHECK(magnitude_below(norm, 1e-30));
  CHECK(w.D1(0, 0).sign() == 1);
}
