#include <doctest.h>

#include <random>

#include "alpert/surd.hpp"

using namespace alpert;

namespace {

SurdValue sqrt_i(long m) { return SurdValue::sqrt_integer(m); }

std::mt19937 rng(20240817);

SurdValue random_surd() {
  static const long radicands[] = {1, 2, 3, 5, 6, 7};
  std::uniform_int_distribution<int> term_count(0, 3);
  std::uniform_int_distribution<long> numerator(-6, 6);
  std::uniform_int_distribution<long> denominator(1, 5);
  std::uniform_int_distribution<size_t> pick(0, 5);
  SurdValue out;
  int count = term_count(rng);
  for (int t = 0; t < count; ++t)
    out += SurdValue::radical(Rational(numerator(rng), denominator(rng)), radicands[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("canonical radicand handling") {
  CHECK(SurdValue::radical(Rational(1), 12) == SurdValue::radical(Rational(2), 3));
  CHECK(SurdValue::radical(Rational(1), 49) == SurdValue(Rational(7)));
  CHECK(sqrt_i(3) * sqrt_i(3) == SurdValue(Rational(3)));
  CHECK(sqrt_i(15) * sqrt_i(35) == SurdValue::radical(Rational(5), 21));
  CHECK((SurdValue::radical(Rational(2), 3) + SurdValue::radical(Rational(-2), 3)).is_zero());
  // canonicalization is idempotent: rebuilding from the stored terms is a no-op
  SurdValue v = SurdValue::radical(Rational(3, 7), 18) + SurdValue(Rational(2));
  SurdValue rebuilt;
  for (const auto& [rad, coeff] : v.terms()) rebuilt += SurdValue::radical(coeff, rad);
  CHECK(rebuilt == v);
}

TEST_CASE("zero iff empty term map") {
  CHECK(SurdValue().is_zero());
  CHECK(SurdValue().terms().empty());
  SurdValue x = sqrt_i(2) + SurdValue(Rational(5));
  CHECK(!(x - x + SurdValue()).terms().size());
}

TEST_CASE("division rationalizes by conjugation") {
  SurdValue one(Rational(1));
  CHECK(one / sqrt_i(3) == SurdValue::radical(Rational(1, 3), 3));
  SurdValue x = SurdValue(Rational(1)) + sqrt_i(3);
  CHECK(x / x == one);
  CHECK(one / x == SurdValue(Rational(-1, 2)) + SurdValue::radical(Rational(1, 2), 3));
  SurdValue mixed = SurdValue(Rational(2)) + sqrt_i(2) + sqrt_i(6);
  CHECK(mixed * mixed.inverse() == one);
  CHECK_THROWS_AS(SurdValue().inverse(), std::domain_error);
}

TEST_CASE("radical limit guards the conjugation blowup") {
  SurdValue wide;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) wide += sqrt_i(p);
  CHECK_THROWS_AS(wide.inverse(), RadicalLimitError);
  CHECK_THROWS_AS(wide.inverse(8), RadicalLimitError);
  SurdValue inv = wide.inverse(9);
  CHECK(wide * inv == SurdValue(Rational(1)));
}

TEST_CASE("field axioms on random values") {
  for (int trial = 0; trial < 200; ++trial) {
    SurdValue x = random_surd(), y = random_surd(), z = random_surd();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == SurdValue(Rational(1)));
  }
}

TEST_CASE("sign via refined enclosures") {
  CHECK(SurdValue().sign() == 0);
  CHECK((sqrt_i(2) - SurdValue(Rational(1))).sign() == 1);
  CHECK((SurdValue(Rational(1)) - sqrt_i(2)).sign() == -1);
  // 3 sqrt(2) - 2 sqrt(3) > 0, sqrt(2) + sqrt(3) - sqrt(10) < 0
  CHECK((SurdValue::radical(Rational(3), 2) - SurdValue::radical(Rational(2), 3)).sign() == 1);
  CHECK((sqrt_i(2) + sqrt_i(3) - sqrt_i(10)).sign() == -1);
  CHECK(sqrt_i(2) + sqrt_i(3) > sqrt_i(5));
  for (int trial = 0; trial < 100; ++trial) {
    SurdValue x = random_surd();
    double approx = x.to_double();
    if (std::abs(approx) > 1e-9) CHECK(x.sign() == (approx > 0 ? 1 : -1));
  }
  // deep cancellation: continued-fraction convergents of sqrt(2) sit within
  // 1/(2q^2) of it, far below double resolution
  SurdValue near_above = SurdValue(Rational(665857, 470832)) - sqrt_i(2);
  CHECK(near_above.sign() == 1);
  SurdValue near_below =
      SurdValue(Rational::from_strings("63018038201", "1"))
          - SurdValue::radical(Rational::from_strings("44560482149", "1"), 2);
  // Pell solution p^2 - 2q^2 = -1: p - q sqrt(2) ~ -8e-12 against ~6e10 terms
  CHECK(near_below.sign() == -1);
}

TEST_CASE("sqrt of nonnegative rationals") {
  CHECK(SurdValue::sqrt_rational(Rational(9, 4)) == SurdValue(Rational(3, 2)));
  CHECK(SurdValue::sqrt_rational(Rational(1, 3)) == SurdValue::radical(Rational(1, 3), 3));
  CHECK(SurdValue::sqrt_rational(Rational(8)) == SurdValue::radical(Rational(2), 2));
  CHECK(SurdValue::sqrt_rational(Rational(0)).is_zero());
  CHECK_THROWS_AS(SurdValue::sqrt_rational(Rational(-1)), std::domain_error);
  SurdValue root = SurdValue::sqrt_rational(Rational(75, 32));
  CHECK(root * root == SurdValue(Rational(75, 32)));
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(SurdValue(Rational(1, 8)).to_decimal(2) == "0.12");
  CHECK(SurdValue(Rational(3, 8)).to_decimal(2) == "0.38");
  CHECK(SurdValue(Rational(1, 2)).to_decimal(3) == "0.5");
  CHECK(SurdValue(Rational(-1, 8)).to_decimal(2) == "-0.12");
  CHECK(SurdValue(Rational(25, 2)).to_decimal(2) == "12");
  CHECK(SurdValue(Rational(35, 2)).to_decimal(2) == "18");
  CHECK(SurdValue().to_decimal(5) == "0");
  CHECK(sqrt_i(2).to_decimal(6) == "1.41421");
  CHECK(sqrt_i(2).to_decimal(11) == "1.4142135624");
  CHECK((-sqrt_i(3)).to_decimal(4) == "-1.732");
  CHECK_THROWS_AS(sqrt_i(2).to_decimal(0), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_i(2).to_decimal(51), std::invalid_argument);
}

TEST_CASE("double conversion is accurate") {
  CHECK(sqrt_i(2).to_double() == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  SurdValue v = SurdValue::radical(Rational(-7, 3), 5) + SurdValue(Rational(22, 7));
  CHECK(v.to_double() == doctest::Approx(-7.0 / 3.0 * std::sqrt(5.0) + 22.0 / 7.0).epsilon(1e-14));
}
