#ifndef ALPERT_RECURRENCES_HPP
#define ALPERT_RECURRENCES_HPP

#include <functional>
#include <string>
#include <vector>

#include "alpert/refinement.hpp"

namespace alpert {

struct Violation {
  std::string equation;
  int i = 0, j = 0;
  SurdValue lhs, rhs;
};

/// Linear combination of index-shifted matrix entries. Taps whose shifted
/// index falls outside the matrix read the structural zero and are skipped,
/// so their (possibly undefined) coefficients are never evaluated.
class ShiftOperator {
 public:
  struct Tap {
    int di = 0, dj = 0;
    std::function<SurdValue(int i, int j)> coefficient;
  };

  ShiftOperator(std::string name, std::vector<Tap> taps)
      : name_(std::move(name)), taps_(std::move(taps)) {}

  const std::string& name() const { return name_; }

  SurdValue apply(const SurdMatrix& m, int i, int j) const {
    SurdValue acc;
    for (const Tap& tap : taps_) {
      int r = i + tap.di, c = j + tap.dj;
      if (r < 0 || c < 0 || r >= m.rows() || c >= m.cols()) continue;
      const SurdValue& entry = m(r, c);
      if (entry.is_zero()) continue;
      acc += tap.coefficient(i, j) * entry;
    }
    return acc;
  }

 private:
  std::string name_;
  std::vector<Tap> taps_;
};

// The generalized-eigenvalue operator pairs in the row direction (i) and the
// column direction (j), the mixed two-direction recurrence, and the
// Bessel-derived difference operators.
ShiftOperator row_operator_a();
ShiftOperator row_operator_b();
ShiftOperator col_operator_a();
ShiftOperator col_operator_b();
ShiftOperator mixed_operator_col();
ShiftOperator mixed_operator_row();
ShiftOperator bessel_operator_row();
ShiftOperator bessel_operator_col();

/// A_i x = j(j+1) B_i x over 0 <= j <= i <= order-1 (the forward tap needs
/// row i+1, so validate on a pair built one or two orders above the target).
std::vector<Violation> check_gen_eig_i(const CoeffMatrixPair& pair);

/// A^_j x = i(i+1) B^_j x over 0 < j <= i <= order.
std::vector<Violation> check_gen_eig_j(const CoeffMatrixPair& pair);

/// A~_j x = B~_i x over 0 <= j <= i <= order-1.
std::vector<Violation> check_mixed_recurrence(const CoeffMatrixPair& pair);

struct BesselDifferenceReport {
  bool printed_range_holds = true;     // 0 < i < j < order (upper wedge)
  bool transposed_range_holds = true;  // 0 < j < i < order (lower wedge)
  bool diagonal_holds = true;          // j = i >= 1
  bool origin_holds = true;            // (0, 0)
  bool column_zero_even_rows_hold = true;  // j = 0, even i >= 2
  bool column_zero_odd_rows_hold = true;   // j = 0, odd i
  std::string validated_range;
  std::vector<Violation> lower_wedge_violations;
};

/// Probes K_i x = J_j x over the whole index square and reports which ranges
/// actually hold rather than trusting the stated one.
BesselDifferenceReport check_bessel_difference(const CoeffMatrixPair& pair);

/// Rebuilds the pair from closed-form seeds: first column from the closed
/// form, every other column marched up in i by the three-term recurrence.
CoeffMatrixPair regenerate_via_recurrence(int n);

}  // namespace alpert

#endif  // ALPERT_RECURRENCES_HPP
