#include <doctest.h>

#include "alpert/legendre.hpp"
#include "alpert/refinement.hpp"

using namespace alpert;

namespace {

SurdValue rad(long num, long den, long m) { return SurdValue::radical(Rational(num, den), m); }

// The four matrices displayed in closed form.
SurdMatrix golden_c1(int n) {
  SurdMatrix m(n + 1, n + 1);
  m(0, 0) = SurdValue(Rational(1));
  if (n >= 1) {
    m(1, 0) = rad(1, 2, 3);
    m(1, 1) = SurdValue(Rational(1, 2));
  }
  if (n >= 2) {
    m(2, 1) = rad(1, 4, 15);
    m(2, 2) = SurdValue(Rational(1, 4));
  }
  if (n >= 3) {
    m(3, 0) = rad(-1, 8, 7);
    m(3, 1) = rad(1, 8, 21);
    m(3, 2) = rad(1, 8, 35);
    m(3, 3) = SurdValue(Rational(1, 8));
  }
  return m;
}

}  // namespace

TEST_CASE("printed matrices reproduced exactly") {
  for (int n = 0; n <= 3; ++n) {
    CoeffMatrixPair pair = build_refinement_pair(n);
    CHECK(pair.C1 == golden_c1(n));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        SurdValue expected = pair.C1(i, j);
        if ((i + j) % 2 == 1) expected = -expected;
        CHECK(pair.Cm1(i, j) == expected);
      }
  }
}

TEST_CASE("individual entry examples") {
  CHECK(entry_half_argument(1, 0) == rad(1, 2, 3));
  CHECK(entry_half_argument(4, 4) == SurdValue(Rational(1, 16)));
  CHECK(entry_half_argument(3, 1) == rad(1, 8, 21));
  CHECK(entry_doubled_argument(2, 1) == rad(1, 4, 15));
  CHECK(entry_doubled_argument(3, 3) == SurdValue(Rational(1, 8)));
  CHECK(entry_doubled_argument(5, 2) == integrate_shifted_product(5, 2));
  CHECK(entry_parity_form(2, 2) == SurdValue(Rational(1, 4)));
  CHECK(entry_parity_form(3, 0) == rad(-1, 8, 7));
  CHECK(entry_parity_form(6, 3) == entry_half_argument(6, 3));
  CHECK_THROWS_AS(entry_half_argument(2, 3), std::invalid_argument);
}

TEST_CASE("four-path agreement") {
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= i; ++j) {
      SurdValue oracle = integrate_shifted_product(i, j);
      CHECK(entry_half_argument(i, j) == oracle);
      CHECK(entry_doubled_argument(i, j) == oracle);
      CHECK(entry_parity_form(i, j) == oracle);
    }
}

TEST_CASE("near-diagonal closed forms") {
  for (int i = 1; i <= 12; ++i) {
    CHECK(entry_diagonal(i) == entry_half_argument(i, i));
    CHECK(entry_subdiagonal(i) == entry_half_argument(i, i - 1));
  }
  for (int i = 2; i <= 12; ++i)
    CHECK(entry_subsubdiagonal(i) == entry_half_argument(i, i - 2));
  // the printed sub-subdiagonal radicand (2i+1)(2i-1) does not match
  for (int i = 3; i <= 8; ++i) {
    SurdValue printed = SurdValue::radical(pow2(-i) * Rational(i - 2), (2L * i + 1) * (2L * i - 1));
    CHECK(!(printed == entry_half_argument(i, i - 2)));
  }
}

TEST_CASE("first column closed form") {
  CHECK(entry_first_column(0) == SurdValue(Rational(1)));
  CHECK(entry_first_column(1) == rad(1, 2, 3));
  CHECK(entry_first_column(2).is_zero());
  CHECK(entry_first_column(3) == rad(-1, 8, 7));
  for (int i = 0; i <= 12; ++i)
    CHECK(entry_first_column(i) == integrate_shifted_product(i, 0));
  // parity zeros
  for (int i = 2; i <= 12; i += 2) CHECK(entry_first_column(i).is_zero());
}

TEST_CASE("embedding: entries depend only on the index pair") {
  CoeffMatrixPair small = build_refinement_pair(3);
  CoeffMatrixPair large = build_refinement_pair(7);
  CHECK(large.C1.leading_block(4) == small.C1);
  CHECK(large.Cm1.leading_block(4) == small.Cm1);
}

TEST_CASE("orthogonality relations") {
  for (int n = 0; n <= 8; ++n) CHECK(verify_orthogonality(build_refinement_pair(n)));
}

TEST_CASE("pointwise refinement identity") {
  for (int n = 0; n <= 4; ++n) {
    PointwiseReport report = verify_refinement_pointwise(build_refinement_pair(n), 9);
    CHECK(report.all_exact);
    CHECK(report.failed_rows.empty());
  }
  // a deliberately corrupted pair fails
  CoeffMatrixPair bad = build_refinement_pair(2);
  bad.C1(2, 1) = SurdValue(Rational(1, 3));
  CHECK(!verify_refinement_pointwise(bad, 5).all_exact);
  CHECK(!verify_orthogonality(bad));
}

TEST_CASE("threaded build is deterministic") {
  CoeffMatrixPair serial = build_refinement_pair(6, BuildPath::TwoF1Half, 1);
  CoeffMatrixPair parallel = build_refinement_pair(6, BuildPath::TwoF1Half, 4);
  CHECK(serial.C1 == parallel.C1);
  CHECK(serial.Cm1 == parallel.Cm1);
  CoeffMatrixPair oracle = build_refinement_pair(5, BuildPath::Oracle, 3);
  CHECK(oracle.C1 == build_refinement_pair(5).C1);
}

TEST_CASE("path selector round trip") {
  for (BuildPath path : {BuildPath::TwoF1Half, BuildPath::TwoF1Two, BuildPath::FourF3,
                         BuildPath::Oracle})
    CHECK(build_path_from_string(to_string(path)) == path);
  CHECK_THROWS_AS(build_path_from_string("no-such-path"), std::invalid_argument);
}
