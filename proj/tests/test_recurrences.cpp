#include <doctest.h>

#include <random>

#include "alpert/recurrences.hpp"

using namespace alpert;

TEST_CASE("generalized eigenvalue identity in the row direction") {
  // window order 10 validates the identity for all 0 <= j <= i <= 9
  CoeffMatrixPair pair = build_refinement_pair(10);
  CHECK(check_gen_eig_i(pair).empty());
  // spot check: at j = 0 both sides vanish termwise
  ShiftOperator a = row_operator_a(), b = row_operator_b();
  SurdValue lhs = a.apply(pair.C1, 2, 0);
  SurdValue rhs = b.apply(pair.C1, 2, 0) * Rational(0);
  CHECK(rhs.is_zero());
  CHECK(lhs == rhs);
}

TEST_CASE("generalized eigenvalue identity in the column direction") {
  CoeffMatrixPair pair = build_refinement_pair(10);
  CHECK(check_gen_eig_j(pair).empty());
}

TEST_CASE("mixed two-direction recurrence") {
  CoeffMatrixPair pair = build_refinement_pair(10);
  CHECK(check_mixed_recurrence(pair).empty());
}

TEST_CASE("checks flag corrupted matrices") {
  CoeffMatrixPair bad = build_refinement_pair(6);
  bad.C1(3, 2) = bad.C1(3, 2) + SurdValue(Rational(1, 1000));
  CHECK(!check_gen_eig_i(bad).empty());
  CHECK(!check_gen_eig_j(bad).empty());
  CHECK(!check_mixed_recurrence(bad).empty());
}

TEST_CASE("operator linearity") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(-5, 5);
  auto random_matrix = [&]() {
    SurdMatrix m(5, 5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c)
        m(r, c) = SurdValue::radical(Rational(num(rng), 3), 1 + (r + 2 * c) % 5);
    return m;
  };
  for (const ShiftOperator& op : {row_operator_a(), col_operator_a(), mixed_operator_col(),
                                  bessel_operator_col()}) {
    SurdMatrix x = random_matrix(), y = random_matrix();
    SurdMatrix sum = x + y;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(op.apply(sum, i, j) == op.apply(x, i, j) + op.apply(y, i, j));
  }
}

TEST_CASE("Bessel difference equation range probe") {
  BesselDifferenceReport report = check_bessel_difference(build_refinement_pair(10));
  CHECK(report.printed_range_holds);      // vacuously: the upper wedge is zeros
  CHECK(report.transposed_range_holds);   // the substantive range
  CHECK(report.diagonal_holds);
  CHECK(report.column_zero_even_rows_hold);
  CHECK(!report.column_zero_odd_rows_hold);
  CHECK(!report.origin_holds);
  CHECK(report.validated_range == "0<j<=i<n");
  CHECK(report.lower_wedge_violations.empty());
}

TEST_CASE("regeneration from seeds matches the direct build") {
  for (int n = 0; n <= 10; ++n) {
    CoeffMatrixPair regenerated = regenerate_via_recurrence(n);
    CoeffMatrixPair direct = build_refinement_pair(n);
    CHECK(regenerated.C1 == direct.C1);
    CHECK(regenerated.Cm1 == direct.Cm1);
  }
}
