#ifndef ALPERT_HYPERGEOM_HPP
#define ALPERT_HYPERGEOM_HPP

#include <vector>

#include "alpert/rational.hpp"

namespace alpert {

/// A terminating pFq series at a rational argument. At least one numerator
/// parameter must be a nonpositive integer; the termination length is the
/// smallest such -parameter. Denominator parameters may be nonpositive
/// integers only when they sit beyond the truncation, so no zero factor is
/// ever touched.
class HypTerminatingSpec {
 public:
  HypTerminatingSpec(std::vector<Rational> numerator_params,
                     std::vector<Rational> denominator_params, Rational argument);

  const std::vector<Rational>& numerator_params() const { return num_; }
  const std::vector<Rational>& denominator_params() const { return den_; }
  const Rational& argument() const { return arg_; }
  unsigned termination_length() const { return length_; }

  /// Balanced (Saalschutzian) at unit argument: denominator parameter sum
  /// exceeds the numerator parameter sum by exactly one.
  bool is_balanced() const;

 private:
  std::vector<Rational> num_, den_;
  Rational arg_;
  unsigned length_ = 0;
};

/// Exact sum of the terminating series by a running term-ratio update.
Rational hyp_eval(const HypTerminatingSpec& spec);

/// 2F1(-j, j+1; k+2; 1) against its closed product form, both exact.
bool verify_chu_vandermonde(int j, int k);

/// 3F2(-j, j+1, 2m+1; 1, 2m+2; 1) against its closed product form.
bool verify_saalschutz(int j, int m);

}  // namespace alpert

#endif  // ALPERT_HYPERGEOM_HPP
