#ifndef ALPERT_REFINEMENT_HPP
#define ALPERT_REFINEMENT_HPP

#include <string>
#include <vector>

#include "alpert/matrix.hpp"

namespace alpert {

/// Which closed form fills the lower triangle. All paths agree exactly; the
/// oracle integrates the defining projection directly.
enum class BuildPath { TwoF1Half, TwoF1Two, FourF3, Oracle };

std::string to_string(BuildPath path);
BuildPath build_path_from_string(const std::string& name);

/// The refinement matrix pair. C1 is lower triangular with positive
/// diagonal; Cm1 follows from the parity symmetry (Cm1)_{i,j} =
/// (-1)^{i+j} (C1)_{i,j}.
struct CoeffMatrixPair {
  int order = 0;
  SurdMatrix C1, Cm1;
};

/// Half-argument 2F1 form of entry (i, j), 0 <= j <= i.
SurdValue entry_half_argument(int i, int j);

/// Argument-2 2F1 form with negative integer denominator parameter.
SurdValue entry_doubled_argument(int i, int j);

/// Parity-dispatched balanced 4F3 form (separate shapes for even and odd
/// rows and columns).
SurdValue entry_parity_form(int i, int j);

/// First column in closed form: zero for even i > 0, alternating radical
/// values for odd i.
SurdValue entry_first_column(int i);

/// Closed forms near the diagonal.
SurdValue entry_diagonal(int i);      // 2^{-i}
SurdValue entry_subdiagonal(int i);   // sqrt((2i+1)(2i-1)) / 2^i
SurdValue entry_subsubdiagonal(int i);  // (i-2) sqrt((2i+1)(2i-3)) / 2^i, oracle-resolved

CoeffMatrixPair build_refinement_pair(int n, BuildPath path = BuildPath::TwoF1Half,
                                      int threads = 1);

struct PointwiseReport {
  bool all_exact = true;
  int samples = 0;
  std::vector<int> failed_rows;
};

/// Checks the refinement identity for every row at uniformly spaced rational
/// points of [-1, 1], exactly.
PointwiseReport verify_refinement_pointwise(const CoeffMatrixPair& pair, int sample_count);

/// Exact orthogonality: C_{-1} C_{-1}^T + C_1 C_1^T = 2I, same-parity rows
/// of C_1 orthogonal, every row of unit Euclidean norm.
bool verify_orthogonality(const CoeffMatrixPair& pair);

}  // namespace alpert

#endif  // ALPERT_REFINEMENT_HPP
