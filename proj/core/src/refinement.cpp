#include "alpert/refinement.hpp"

#include <future>
#include <stdexcept>

#include "alpert/hypergeom.hpp"
#include "alpert/legendre.hpp"

namespace alpert {

std::string to_string(BuildPath path) {
  switch (path) {
    case BuildPath::TwoF1Half: return "2f1-half";
    case BuildPath::TwoF1Two: return "2f1-two";
    case BuildPath::FourF3: return "4f3";
    case BuildPath::Oracle: return "oracle";
  }
  throw std::logic_error("to_string: bad BuildPath");
}

BuildPath build_path_from_string(const std::string& name) {
  if (name == "2f1-half") return BuildPath::TwoF1Half;
  if (name == "2f1-two") return BuildPath::TwoF1Two;
  if (name == "4f3") return BuildPath::FourF3;
  if (name == "oracle") return BuildPath::Oracle;
  throw std::invalid_argument("unknown build path: " + name);
}

namespace {

void require_lower(int i, int j) {
  if (j < 0 || j > i)
    throw std::invalid_argument("refinement entry: requires 0 <= j <= i");
}

Rational half(long twice) { return Rational(twice, 2); }

}  // namespace

SurdValue entry_half_argument(int i, int j) {
  require_lower(i, j);
  Rational prefactor(factorial(static_cast<unsigned>(i + j)),
                     pow2(j).numerator() * factorial(static_cast<unsigned>(2 * j + 1)) *
                         factorial(static_cast<unsigned>(i - j)));
  HypTerminatingSpec spec({Rational(-i + j), Rational(i + j + 1)}, {Rational(2 * j + 2)},
                          Rational(1, 2));
  return SurdValue::radical(prefactor * hyp_eval(spec),
                            (2L * i + 1) * (2L * j + 1));
}

SurdValue entry_doubled_argument(int i, int j) {
  require_lower(i, j);
  Rational prefactor(factorial(static_cast<unsigned>(2 * i)),
                     pow2(i).numerator() * factorial(static_cast<unsigned>(i + j + 1)) *
                         factorial(static_cast<unsigned>(i - j)));
  if ((i - j) % 2 == 1) prefactor = -prefactor;
  HypTerminatingSpec spec({Rational(-i + j), Rational(-i - j - 1)}, {Rational(-2 * i)},
                          Rational(2));
  return SurdValue::radical(prefactor * hyp_eval(spec),
                            (2L * i + 1) * (2L * j + 1));
}

SurdValue entry_parity_form(int i, int j) {
  require_lower(i, j);
  // Normalization from monic to orthonormal polynomials (including the
  // two-scale factor): K = (2i-1)!! (2j-1)!! sqrt((2i+1)(2j+1)) / (i! j!).
  Rational k_factor(double_factorial(2L * i - 1) * double_factorial(2L * j - 1),
                    factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j)));

  // Balanced 4F3 shapes for the monic cross-integral, split by the parity of
  // the row and the column. The odd-column prefactors carry a corrected
  // overall sign (validated against the integration oracle).
  Rational prefactor;
  std::vector<Rational> num, den;
  if (i % 2 == 0) {
    int r = i / 2;
    den = {half(-4L * r + 1), Rational(-r), half(-2L * r + 1)};
    if (j % 2 == 0) {
      int c = j / 2;
      unsigned uc = static_cast<unsigned>(c);
      prefactor = pow2(2 * c - 1) * pochhammer(Rational(-r), uc) *
                  pochhammer(half(-2L * r + 1), uc) * Rational(factorial(2 * uc)) /
                  (pochhammer(half(2L * r + 1), uc + 1) * pochhammer(Rational(r + 1), uc) *
                   pochhammer(Rational(2 * c + 1), 2 * uc));
      num = {Rational(-r + c), half(2L * (-r + c) + 1), half(2L * (-r - c) - 1),
             Rational(-r - c)};
    } else {
      int c = (j + 1) / 2;
      unsigned uc = static_cast<unsigned>(c);
      prefactor = -pow2(2 * c - 2) * pochhammer(Rational(-r), uc) *
                  pochhammer(half(-2L * r + 1), uc - 1) *
                  Rational(factorial(2 * uc - 1)) /
                  (pochhammer(half(2L * r + 1), uc) * pochhammer(Rational(2 * c), 2 * uc - 1) *
                   pochhammer(Rational(r + 1), uc));
      num = {Rational(-r + c), half(2L * (-r + c) - 1), half(2L * (-r - c) + 1),
             Rational(-r - c)};
    }
  } else {
    int r = (i - 1) / 2;
    den = {half(-4L * r - 1), Rational(-r), half(-2L * r - 1)};
    if (j % 2 == 0) {
      int c = j / 2;
      unsigned uc = static_cast<unsigned>(c);
      prefactor = pow2(2 * c - 1) * pochhammer(Rational(-r), uc) *
                  pochhammer(half(-2L * r - 1), uc) * Rational(factorial(2 * uc)) /
                  (pochhammer(half(2L * r + 3), uc) * pochhammer(Rational(r + 1), uc + 1) *
                   pochhammer(Rational(2 * c + 1), 2 * uc));
      num = {Rational(-r + c), half(2L * (-r + c) - 1), Rational(-r - c - 1),
             half(2L * (-r - c) - 1)};
    } else {
      int c = (j - 1) / 2;
      unsigned uc = static_cast<unsigned>(c);
      prefactor = -pow2(2 * c) * pochhammer(Rational(-r), uc) *
                  pochhammer(half(-2L * r - 1), uc + 1) *
                  Rational(factorial(2 * uc + 1)) /
                  (pochhammer(half(2L * r + 3), uc + 1) * pochhammer(Rational(r + 1), uc + 1) *
                   pochhammer(Rational(2 * c + 2), 2 * uc + 1));
      num = {Rational(-r + c), half(2L * (-r + c) + 1), Rational(-r - c - 1),
             half(2L * (-r - c) - 3)};
    }
  }
  HypTerminatingSpec spec(num, den, Rational(1));
  if (!spec.is_balanced())
    throw std::logic_error("entry_parity_form: series is not balanced");
  return SurdValue::radical(k_factor * prefactor * hyp_eval(spec),
                            (2L * i + 1) * (2L * j + 1));
}

SurdValue entry_first_column(int i) {
  if (i < 0) throw std::invalid_argument("entry_first_column: negative row");
  if (i == 0) return SurdValue(Rational(1));
  if (i % 2 == 0) return SurdValue();
  int m = (i - 1) / 2;
  Rational value = pochhammer(Rational(1, 2), static_cast<unsigned>(m)) /
                   (Rational(2) * Rational(factorial(static_cast<unsigned>((i + 1) / 2))));
  if (m % 2 == 1) value = -value;
  return SurdValue::radical(value, 2L * i + 1);
}

SurdValue entry_diagonal(int i) { return SurdValue(pow2(-i)); }

SurdValue entry_subdiagonal(int i) {
  if (i < 1) throw std::invalid_argument("entry_subdiagonal: requires i >= 1");
  return SurdValue::radical(pow2(-i), (2L * i + 1) * (2L * i - 1));
}

SurdValue entry_subsubdiagonal(int i) {
  if (i < 2) throw std::invalid_argument("entry_subsubdiagonal: requires i >= 2");
  return SurdValue::radical(pow2(-i) * Rational(i - 2), (2L * i + 1) * (2L * i - 3));
}

CoeffMatrixPair build_refinement_pair(int n, BuildPath path, int threads) {
  if (n < 0) throw std::invalid_argument("build_refinement_pair: negative order");
  CoeffMatrixPair pair;
  pair.order = n;
  pair.C1 = SurdMatrix(n + 1, n + 1);
  pair.Cm1 = SurdMatrix(n + 1, n + 1);

  auto entry = [&](int i, int j) {
    switch (path) {
      case BuildPath::TwoF1Half: return entry_half_argument(i, j);
      case BuildPath::TwoF1Two: return entry_doubled_argument(i, j);
      case BuildPath::FourF3: return entry_parity_form(i, j);
      case BuildPath::Oracle: return integrate_shifted_product(i, j);
    }
    throw std::logic_error("build_refinement_pair: bad path");
  };

  auto fill_rows = [&](int first, int last) {  // [first, last)
    for (int i = first; i < last; ++i)
      for (int j = 0; j <= i; ++j) pair.C1(i, j) = entry(i, j);
  };

  if (threads <= 1 || n == 0) {
    fill_rows(0, n + 1);
  } else {
    int workers = std::min(threads, n + 1);
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
      int first = (n + 1) * w / workers;
      int last = (n + 1) * (w + 1) / workers;
      jobs.push_back(std::async(std::launch::async, fill_rows, first, last));
    }
    for (auto& job : jobs) job.get();
  }

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      const SurdValue& v = pair.C1(i, j);
      pair.Cm1(i, j) = (i + j) % 2 == 0 ? v : -v;
    }
  return pair;
}

PointwiseReport verify_refinement_pointwise(const CoeffMatrixPair& pair, int sample_count) {
  if (sample_count < 2) throw std::invalid_argument("verify_refinement_pointwise: need >= 2 samples");
  PointwiseReport report;
  report.samples = sample_count;
  int n = pair.order;
  std::vector<PolySurd> basis;
  for (int j = 0; j <= n; ++j) basis.push_back(orthonormal_legendre(j));
  for (int s = 0; s < sample_count; ++s) {
    Rational t = Rational(-1) + Rational(2L * s, sample_count - 1);
    bool right = !(t < Rational(0));
    Rational shifted = right ? Rational(2) * t - Rational(1) : Rational(2) * t + Rational(1);
    for (int i = 0; i <= n; ++i) {
      SurdValue rhs;
      for (int j = 0; j <= i; ++j) {
        const SurdValue& c = right ? pair.C1(i, j) : pair.Cm1(i, j);
        if (!c.is_zero()) rhs += c * basis[static_cast<size_t>(j)].evaluate(shifted);
      }
      if (!(rhs == basis[static_cast<size_t>(i)].evaluate(t))) {
        report.all_exact = false;
        report.failed_rows.push_back(i);
      }
    }
  }
  return report;
}

bool verify_orthogonality(const CoeffMatrixPair& pair) {
  int n = pair.order;
  SurdMatrix gram = pair.C1 * pair.C1.transpose() + pair.Cm1 * pair.Cm1.transpose();
  SurdMatrix two_identity = SurdMatrix::identity(n + 1);
  two_identity.scale(Rational(2));
  if (!(gram == two_identity)) return false;
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      if (k == i || (i + k) % 2 != 0) continue;
      SurdValue dot;
      for (int j = 0; j <= std::min(i, k); ++j) dot += pair.C1(i, j) * pair.C1(k, j);
      if (!dot.is_zero()) return false;
    }
  for (int i = 0; i <= n; ++i) {
    SurdValue norm;
    for (int j = 0; j <= i; ++j) norm += pair.C1(i, j) * pair.C1(i, j);
    if (!(norm == SurdValue(Rational(1)))) return false;
  }
  return true;
}

}  // namespace alpert
