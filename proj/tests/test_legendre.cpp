#include <doctest.h>

#include "alpert/hypergeom.hpp"
#include "alpert/legendre.hpp"

using namespace alpert;

TEST_CASE("monic polynomials from the recurrence") {
  CHECK(monic_legendre(0) == PolyExact::constant(Rational(1)));
  CHECK(monic_legendre(1) == PolyExact::identity());
  PolyExact p2({Rational(-1, 3), Rational(0), Rational(1)});
  CHECK(monic_legendre(2) == p2);
  PolyExact p3({Rational(0), Rational(-3, 5), Rational(0), Rational(1)});
  CHECK(monic_legendre(3) == p3);
  CHECK(monic_legendre(12).degree() == 12);
}

TEST_CASE("parity of the coefficients") {
  for (int n = 0; n <= 10; ++n) {
    PolyExact p = monic_legendre(n);
    for (int k = 0; k <= n; ++k)
      if ((n - k) % 2 == 1) CHECK(p.coefficient(k) == Rational(0));
  }
}

TEST_CASE("orthonormal scaling") {
  CHECK(orthonormal_legendre(0) ==
        PolySurd({SurdValue::radical(Rational(1, 2), 2)}));
  CHECK(orthonormal_legendre(1) ==
        PolySurd({SurdValue(), SurdValue::radical(Rational(1, 2), 6)}));
  for (int n = 0; n <= 12; ++n)
    CHECK(legendre_inner_product(n, n) == SurdValue(Rational(1)));
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j < i; ++j) CHECK(legendre_inner_product(i, j).is_zero());
}

TEST_CASE("hypergeometric representation agrees with the recurrence") {
  const Rational points[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                             Rational(1)};
  for (int n = 0; n <= 10; ++n) {
    PolyExact p = monic_legendre(n);
    Rational scale = pow2(n) * Rational(factorial(static_cast<unsigned>(n))) /
                     pochhammer(Rational(n + 1), static_cast<unsigned>(n));
    for (const Rational& t : points) {
      HypTerminatingSpec spec({Rational(-n), Rational(n + 1)}, {Rational(1)},
                              (Rational(1) - t) / Rational(2));
      CHECK(p.evaluate(t) == scale * hyp_eval(spec));
    }
  }
}

TEST_CASE("scaling vector support convention") {
  std::vector<SurdValue> mid = eval_scaling_vector(1, Rational(1, 2));
  CHECK(mid[0] == SurdValue::radical(Rational(1, 2), 2));
  CHECK(mid[1].is_zero());
  std::vector<SurdValue> outside = eval_scaling_vector(1, Rational(-1, 4));
  CHECK(outside[0].is_zero());
  CHECK(outside[1].is_zero());
  std::vector<SurdValue> left = eval_scaling_vector(0, Rational(0));
  CHECK(left[0] == SurdValue::radical(Rational(1, 2), 2));
  // t = 1 lies outside the half-open support
  std::vector<SurdValue> right = eval_scaling_vector(2, Rational(1));
  for (const SurdValue& v : right) CHECK(v.is_zero());
}

TEST_CASE("integration oracle entries") {
  CHECK(integrate_shifted_product(0, 0) == SurdValue(Rational(1)));
  CHECK(integrate_shifted_product(1, 0) == SurdValue::radical(Rational(1, 2), 3));
  CHECK(integrate_shifted_product(0, 1).is_zero());
  CHECK(integrate_shifted_product(4, 7).is_zero());
}

TEST_CASE("Gauss series with unit bottom parameter") {
  HypTerminatingSpec spec({Rational(-2), Rational(3)}, {Rational(1)}, Rational(1, 2));
  CHECK(hyp_eval(spec) == Rational(-1, 2));
}
