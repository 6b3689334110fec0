#include "alpert/hypergeom.hpp"

#include <limits>
#include <stdexcept>

namespace alpert {

namespace {

bool nonpositive_integer(const Rational& r) {
  return r.is_integer() && !(r > Rational(0));
}

}  // namespace

HypTerminatingSpec::HypTerminatingSpec(std::vector<Rational> numerator_params,
                                       std::vector<Rational> denominator_params,
                                       Rational argument)
    : num_(std::move(numerator_params)), den_(std::move(denominator_params)),
      arg_(std::move(argument)) {
  bool terminating = false;
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const Rational& a : num_) {
    if (nonpositive_integer(a)) {
      terminating = true;
      best = std::min(best, static_cast<unsigned>((-a).to_long()));
    }
  }
  if (!terminating)
    throw std::invalid_argument("HypTerminatingSpec: no nonpositive integer numerator parameter");
  length_ = best;
  for (const Rational& b : den_) {
    // (b)_k must stay nonzero for k = 0..N, so a nonpositive integer b needs
    // -b >= N.
    if (nonpositive_integer(b) && (-b).to_long() < static_cast<long>(length_))
      throw std::invalid_argument(
          "HypTerminatingSpec: denominator parameter hits zero inside the summation range");
  }
}

bool HypTerminatingSpec::is_balanced() const {
  if (arg_ != Rational(1)) return false;
  Rational num_sum(0), den_sum(0);
  for (const Rational& a : num_) num_sum += a;
  for (const Rational& b : den_) den_sum += b;
  return den_sum - num_sum == Rational(1);
}

Rational hyp_eval(const HypTerminatingSpec& spec) {
  Rational sum(1);
  Rational term(1);
  for (unsigned i = 0; i < spec.termination_length(); ++i) {
    Rational ratio = spec.argument() / Rational(static_cast<long>(i) + 1);
    for (const Rational& a : spec.numerator_params()) ratio *= a + Rational(static_cast<long>(i));
    for (const Rational& b : spec.denominator_params()) {
      Rational factor = b + Rational(static_cast<long>(i));
      if (factor.is_zero())
        throw std::domain_error("hyp_eval: zero denominator factor inside the summation range");
      ratio /= factor;
    }
    term *= ratio;
    sum += term;
  }
  return sum;
}

bool verify_chu_vandermonde(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("verify_chu_vandermonde: negative index");
  HypTerminatingSpec spec({Rational(-j), Rational(j + 1)}, {Rational(k + 2)}, Rational(1));
  Rational lhs = hyp_eval(spec);
  Rational rhs = pochhammer(Rational(k - j + 1), static_cast<unsigned>(j)) /
                 pochhammer(Rational(k + 2), static_cast<unsigned>(j));
  return lhs == rhs;
}

bool verify_saalschutz(int j, int m) {
  if (j < 0 || m < 0) throw std::invalid_argument("verify_saalschutz: negative index");
  HypTerminatingSpec spec({Rational(-j), Rational(j + 1), Rational(2 * m + 1)},
                          {Rational(1), Rational(2 * m + 2)}, Rational(1));
  Rational lhs = hyp_eval(spec);
  Rational rhs = pochhammer(Rational(-j), static_cast<unsigned>(j)) *
                 pochhammer(Rational(2 * m - j + 1), static_cast<unsigned>(j)) /
                 (pochhammer(Rational(1), static_cast<unsigned>(j)) *
                  pochhammer(Rational(2 * m + 2), static_cast<unsigned>(j)));
  return lhs == rhs;
}

}  // namespace alpert
