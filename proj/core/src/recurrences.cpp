#include "alpert/recurrences.hpp"

#include <stdexcept>

namespace alpert {

namespace {

// q / sqrt(m) as an exact surd: q sqrt(m) / m.
SurdValue over_sqrt(const Rational& q, long m) {
  return SurdValue::radical(q / Rational(m), m);
}

Rational jj(long k) { return Rational(k * (k + 1)); }

}  // namespace

ShiftOperator row_operator_a() {
  return ShiftOperator(
      "row_a",
      {{+1, 0, [](int i, int) {
          return over_sqrt(Rational(static_cast<long>(i) * (i + 1) * (i + 2)),
                           (2L * i + 3) * (2L * i + 1));
        }},
       {-1, 0, [](int i, int) {
          return over_sqrt(Rational(static_cast<long>(i - 1) * i * (i + 1)),
                           (2L * i + 1) * (2L * i - 1));
        }}});
}

ShiftOperator row_operator_b() {
  return ShiftOperator(
      "row_b",
      {{+1, 0, [](int i, int) {
          return over_sqrt(Rational(i), (2L * i + 3) * (2L * i + 1));
        }},
       {0, 0, [](int, int) { return SurdValue(Rational(1)); }},
       {-1, 0, [](int i, int) {
          return over_sqrt(Rational(i + 1), (2L * i + 1) * (2L * i - 1));
        }}});
}

ShiftOperator col_operator_a() {
  return ShiftOperator(
      "col_a",
      {{0, +1, [](int, int j) {
          return over_sqrt(Rational(static_cast<long>(j) * (j + 1) * (j + 2)),
                           (2L * j + 3) * (2L * j + 1));
        }},
       {0, 0, [](int, int j) { return SurdValue(Rational(3) * jj(j)); }},
       {0, -1, [](int, int j) {
          return over_sqrt(Rational(static_cast<long>(j - 1) * j * (j + 1)),
                           (2L * j + 1) * (2L * j - 1));
        }}});
}

ShiftOperator col_operator_b() {
  return ShiftOperator(
      "col_b",
      {{0, +1, [](int, int j) {
          return over_sqrt(Rational(j), (2L * j + 3) * (2L * j + 1));
        }},
       {0, 0, [](int, int) { return SurdValue(Rational(1)); }},
       {0, -1, [](int, int j) {
          return over_sqrt(Rational(j + 1), (2L * j + 1) * (2L * j - 1));
        }}});
}

ShiftOperator mixed_operator_col() {
  return ShiftOperator(
      "mixed_col",
      {{0, -1, [](int, int j) {
          return over_sqrt(Rational(j), (2L * j + 1) * (2L * j - 1));
        }},
       {0, 0, [](int, int) { return SurdValue(Rational(1)); }},
       {0, +1, [](int, int j) {
          return over_sqrt(Rational(j + 1), (2L * j + 3) * (2L * j + 1));
        }}});
}

ShiftOperator mixed_operator_row() {
  return ShiftOperator(
      "mixed_row",
      {{-1, 0, [](int i, int) {
          return over_sqrt(Rational(2L * i), (2L * i + 1) * (2L * i - 1));
        }},
       {+1, 0, [](int i, int) {
          return over_sqrt(Rational(2L * (i + 1)), (2L * i + 3) * (2L * i + 1));
        }}});
}

ShiftOperator bessel_operator_row() {
  // sqrt((2i+1)/(2i-1)) E- + sqrt((2i+1)/(2i+3)) E+
  return ShiftOperator(
      "bessel_row",
      {{-1, 0, [](int i, int) {
          return over_sqrt(Rational(1), (2L * i + 1) * (2L * i - 1)) * Rational(2L * i + 1);
        }},
       {+1, 0, [](int i, int) {
          return over_sqrt(Rational(1), (2L * i + 1) * (2L * i + 3)) * Rational(2L * i + 1);
        }}});
}

ShiftOperator bessel_operator_col() {
  return ShiftOperator(
      "bessel_col",
      {{0, -1, [](int, int j) {
          return over_sqrt(Rational(1), (2L * j - 1) * (2L * j + 1)) * Rational(2L * j - 1, 2);
        }},
       {0, +1, [](int, int j) {
          return over_sqrt(Rational(1), (2L * j + 3) * (2L * j + 1)) * Rational(2L * j + 3, 2);
        }},
       {0, 0, [](int, int) { return SurdValue(Rational(1)); }}});
}

std::vector<Violation> check_gen_eig_i(const CoeffMatrixPair& pair) {
  ShiftOperator a = row_operator_a(), b = row_operator_b();
  std::vector<Violation> out;
  for (int i = 0; i + 1 <= pair.order; ++i)
    for (int j = 0; j <= i; ++j) {
      SurdValue lhs = a.apply(pair.C1, i, j);
      SurdValue rhs = b.apply(pair.C1, i, j) * jj(j);
      if (!(lhs == rhs)) out.push_back({"geneigi", i, j, lhs, rhs});
    }
  return out;
}

std::vector<Violation> check_gen_eig_j(const CoeffMatrixPair& pair) {
  ShiftOperator a = col_operator_a(), b = col_operator_b();
  std::vector<Violation> out;
  for (int i = 1; i <= pair.order; ++i)
    for (int j = 1; j <= i; ++j) {
      SurdValue lhs = a.apply(pair.C1, i, j);
      SurdValue rhs = b.apply(pair.C1, i, j) * jj(i);
      if (!(lhs == rhs)) out.push_back({"geneigj", i, j, lhs, rhs});
    }
  return out;
}

std::vector<Violation> check_mixed_recurrence(const CoeffMatrixPair& pair) {
  ShiftOperator a = mixed_operator_col(), b = mixed_operator_row();
  std::vector<Violation> out;
  for (int i = 0; i + 1 <= pair.order; ++i)
    for (int j = 0; j <= i; ++j) {
      SurdValue lhs = a.apply(pair.C1, i, j);
      SurdValue rhs = b.apply(pair.C1, i, j);
      if (!(lhs == rhs)) out.push_back({"recurij", i, j, lhs, rhs});
    }
  return out;
}

BesselDifferenceReport check_bessel_difference(const CoeffMatrixPair& pair) {
  ShiftOperator k_op = bessel_operator_row(), j_op = bessel_operator_col();
  BesselDifferenceReport report;
  int top = pair.order - 1;  // both forward taps must stay inside the matrix
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      SurdValue lhs = k_op.apply(pair.C1, i, j);
      SurdValue rhs = j_op.apply(pair.C1, i, j);
      bool holds = lhs == rhs;
      if (holds) continue;
      if (i > 0 && j > i) report.printed_range_holds = false;
      if (j > 0 && i > j) {
        report.transposed_range_holds = false;
        report.lower_wedge_violations.push_back({"pdde", i, j, lhs, rhs});
      }
      if (j == i && i > 0) report.diagonal_holds = false;
      if (j == 0 && i == 0) report.origin_holds = false;
      if (j == 0 && i > 0) {
        if (i % 2 == 0) report.column_zero_even_rows_hold = false;
        else report.column_zero_odd_rows_hold = false;
      }
    }
  std::string range = report.transposed_range_holds ? "0<j<i<n" : "none";
  if (report.transposed_range_holds && report.diagonal_holds) range = "0<j<=i<n";
  report.validated_range = range;
  return report;
}

CoeffMatrixPair regenerate_via_recurrence(int n) {
  if (n < 0) throw std::invalid_argument("regenerate_via_recurrence: negative order");
  CoeffMatrixPair pair;
  pair.order = n;
  pair.C1 = SurdMatrix(n + 1, n + 1);
  pair.Cm1 = SurdMatrix(n + 1, n + 1);

  // Column 0 comes from the closed form; the i-direction recurrence there
  // would divide by j(j+1) = 0.
  for (int i = 0; i <= n; ++i) pair.C1(i, 0) = entry_first_column(i);

  for (int j = 1; j <= n; ++j) {
    pair.C1(j, j) = entry_diagonal(j);
    if (j + 1 <= n) pair.C1(j + 1, j) = entry_subdiagonal(j + 1);
    for (int i = j + 1; i + 1 <= n; ++i) {
      // i (i+j+2)(i+1-j) / sqrt((2i+3)(2i+1)) * x_{i+1} =
      //   j(j+1) x_i + (i+1)(j(j+1) - i(i-1)) / sqrt((2i+1)(2i-1)) * x_{i-1}
      SurdValue lead = over_sqrt(
          Rational(static_cast<long>(i) * (i + j + 2) * (i + 1 - j)),
          (2L * i + 3) * (2L * i + 1));
      SurdValue rhs = pair.C1(i, j) * jj(j);
      Rational tail_factor = Rational(i + 1) * (jj(j) - Rational(static_cast<long>(i) * (i - 1)));
      if (!tail_factor.is_zero())
        rhs += over_sqrt(tail_factor, (2L * i + 1) * (2L * i - 1)) * pair.C1(i - 1, j);
      pair.C1(i + 1, j) = rhs * lead.inverse();
    }
  }

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      const SurdValue& v = pair.C1(i, j);
      pair.Cm1(i, j) = (i + j) % 2 == 0 ? v : -v;
    }
  return pair;
}

}  // namespace alpert
