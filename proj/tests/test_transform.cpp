#include <doctest.h>

#include <cmath>
#include <random>

#include "alpert/json_io.hpp"
#include "alpert/legendre.hpp"
#include "alpert/transform.hpp"

using namespace alpert;

namespace {

FilterBank bank_for(int n) {
  CoeffMatrixPair coeff = build_refinement_pair(n);
  return make_filter_bank(coeff, solve_wavelet_pair(coeff));
}

BlockRow random_blocks(int order, int level, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  BlockRow out(static_cast<size_t>(1) << level, Block(static_cast<size_t>(order) + 1));
  for (Block& b : out)
    for (double& v : b) v = dist(rng);
  return out;
}

double max_abs_diff(const BlockRow& a, const BlockRow& b) {
  double out = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    for (size_t c = 0; c < a[k].size(); ++c) out = std::max(out, std::fabs(a[k][c] - b[k][c]));
  return out;
}

}  // namespace

TEST_CASE("projection of simple polynomials") {
  // constant: only the first component survives
  BlockRow one = project_polynomial(PolyExact::constant(Rational(1)), 2, 0);
  CHECK(one.size() == 1);
  CHECK(one[0][0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(std::fabs(one[0][1]) < 1e-15);
  CHECK(std::fabs(one[0][2]) < 1e-15);
  // f = t against the exact integrals
  BlockRow linear = project_polynomial(PolyExact::identity(), 1, 0);
  SurdValue c0 = (to_surd_poly(PolyExact::identity()) * orthonormal_on_unit(0)).integral_unit();
  SurdValue c1 = (to_surd_poly(PolyExact::identity()) * orthonormal_on_unit(1)).integral_unit();
  CHECK(linear[0][0] == doctest::Approx(c0.to_double()).epsilon(1e-14));
  CHECK(linear[0][1] == doctest::Approx(c1.to_double()).epsilon(1e-14));
  CHECK(linear[0][1] != 0.0);
  // zero function
  BlockRow zero = project_polynomial(PolyExact(), 3, 2);
  for (const Block& b : zero)
    for (double v : b) CHECK(v == 0.0);
}

TEST_CASE("order zero reduces to the Haar butterfly") {
  FilterBank bank = bank_for(0);
  SignalTree tree = make_tree_from_finest(0, 1, {{1.0}, {2.0}});
  analyze(tree, bank);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(tree.s_blocks[0][0][0] == doctest::Approx(3.0 * inv_sqrt2));
  CHECK(tree.d_blocks[0][0][0] == doctest::Approx(-1.0 * inv_sqrt2));
}

TEST_CASE("perfect reconstruction") {
  CoeffMatrixPair coeff = build_refinement_pair(3);
  WaveletMatrixPair wavelet = solve_wavelet_pair(coeff);
  FilterBank bank = make_filter_bank(coeff, wavelet);
  for (unsigned seed = 0; seed < 10; ++seed) {
    BlockRow finest = random_blocks(3, 6, 1000 + seed);
    SignalTree tree = make_tree_from_finest(3, 6, finest);
    analyze(tree, bank);
    BlockRow rebuilt = synthesize(tree, bank);
    CHECK(max_abs_diff(finest, rebuilt) < 1e-12);
    // Parseval
    double before = finest_energy(tree);
    double after = coarse_plus_detail_energy(tree);
    CHECK(std::fabs(before - after) / before < 1e-10);
  }
}

TEST_CASE("vanishing moments annihilate low-degree polynomials") {
  for (int q = 0; q <= 3; ++q) {
    std::vector<Rational> coeffs(static_cast<size_t>(q) + 1, Rational(0));
    coeffs[static_cast<size_t>(q)] = Rational(1);
    SignalTree tree = make_tree_from_finest(3, 5, project_polynomial(PolyExact(coeffs), 3, 5));
    analyze(tree, build_refinement_pair(3), solve_wavelet_pair(build_refinement_pair(3)));
    for (const BlockRow& level : tree.d_blocks)
      for (const Block& block : level)
        for (double v : block) CHECK(std::fabs(v) < 1e-12);
  }
}

TEST_CASE("one-level stacked filter matrix is orthogonal in floats") {
  FilterBank bank = bank_for(4);
  size_t dim = 5;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<double>> m(2 * dim, std::vector<double>(2 * dim, 0.0));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) {
      m[r][c] = inv_sqrt2 * bank.cm1[r][c];
      m[r][c + dim] = inv_sqrt2 * bank.c1[r][c];
      m[r + dim][c] = inv_sqrt2 * bank.dm1[r][c];
      m[r + dim][c + dim] = inv_sqrt2 * bank.d1[r][c];
    }
  for (size_t r = 0; r < 2 * dim; ++r)
    for (size_t c = 0; c < 2 * dim; ++c) {
      double acc = 0.0;
      for (size_t k = 0; k < 2 * dim; ++k) acc += m[r][k] * m[c][k];
      CHECK(std::fabs(acc - (r == c ? 1.0 : 0.0)) < 1e-14);
    }
}

TEST_CASE("threshold compression") {
  SignalTree tree = make_tree_from_finest(2, 4, random_blocks(2, 4, 99));
  analyze(tree, build_refinement_pair(2), solve_wavelet_pair(build_refinement_pair(2)));
  size_t total = detail_count(tree);
  auto [identity, kept_all] = threshold_compress(tree, 0.0);
  CHECK(kept_all == total);
  // smooth input: every detail dies for any positive threshold
  SignalTree smooth = make_tree_from_finest(2, 4, project_polynomial(
      PolyExact({Rational(1), Rational(2), Rational(-1)}), 2, 4));
  analyze(smooth, build_refinement_pair(2), solve_wavelet_pair(build_refinement_pair(2)));
  auto [compressed, kept] = threshold_compress(smooth, 1e-10);
  CHECK(kept == 0);
  CHECK_THROWS_AS(threshold_compress(tree, -1.0), std::invalid_argument);
}

TEST_CASE("threshold reconstruction error is bounded by eps sqrt(count)") {
  FilterBank bank = bank_for(2);
  SignalTree tree = make_tree_from_finest(2, 5, random_blocks(2, 5, 2024));
  analyze(tree, bank);
  BlockRow original = synthesize(tree, bank);
  const double eps = 0.02;
  auto [compressed, kept] = threshold_compress(tree, eps);
  BlockRow lossy = synthesize(compressed, bank);
  double err2 = 0.0;
  for (size_t k = 0; k < original.size(); ++k)
    for (size_t c = 0; c < original[k].size(); ++c) {
      double d = original[k][c] - lossy[k][c];
      err2 += d * d;
    }
  size_t total = detail_count(tree);
  CHECK(kept < total);  // something was actually dropped
  CHECK(std::sqrt(err2) <= eps * std::sqrt(static_cast<double>(total)) + 1e-12);
}

TEST_CASE("detail coefficients localize around an interior jump") {
  // step at 3/8: zero left of it, one right of it, projected exactly per cell
  int order = 2, levels = 5;
  size_t cells = 1u << levels;
  BlockRow finest(cells, Block(3, 0.0));
  SurdValue scale = levels % 2 == 0 ? SurdValue(pow2(-levels / 2))
                                    : SurdValue::radical(pow2(-(levels + 1) / 2), 2);
  for (size_t k = 0; k < cells; ++k) {
    double left_edge = static_cast<double>(k) / static_cast<double>(cells);
    if (left_edge < 0.375) continue;  // cell is entirely left of the jump: f = 0
    for (int i = 0; i <= order; ++i)
      finest[k][static_cast<size_t>(i)] =
          (orthonormal_on_unit(i).integral_unit() * scale).to_double();
  }
  SignalTree tree = make_tree_from_finest(order, levels, finest);
  analyze(tree, build_refinement_pair(order), solve_wavelet_pair(build_refinement_pair(order)));
  for (int p = 0; p < levels; ++p) {
    const BlockRow& level = tree.d_blocks[static_cast<size_t>(p)];
    for (size_t k = 0; k < level.size(); ++k) {
      double lo = static_cast<double>(k) / static_cast<double>(level.size());
      double hi = static_cast<double>(k + 1) / static_cast<double>(level.size());
      bool contains_jump = lo < 0.375 && 0.375 < hi;
      double magnitude = 0.0;
      for (double v : level[k]) magnitude = std::max(magnitude, std::fabs(v));
      if (!contains_jump) CHECK(magnitude < 1e-12);
    }
  }
  // and the jump really does generate detail somewhere
  double total = 0.0;
  for (const BlockRow& level : tree.d_blocks)
    for (const Block& block : level)
      for (double v : block) total += std::fabs(v);
  CHECK(total > 1e-3);
}

TEST_CASE("signal tree json round trip") {
  SignalTree tree = make_tree_from_finest(1, 3, random_blocks(1, 3, 7));
  analyze(tree, build_refinement_pair(1), solve_wavelet_pair(build_refinement_pair(1)));
  SignalTree back = signal_tree_from_json(signal_tree_to_json(tree));
  CHECK(back.order == tree.order);
  CHECK(back.finest_level == tree.finest_level);
  for (int p = 0; p <= 3; ++p)
    CHECK(max_abs_diff(back.s_blocks[static_cast<size_t>(p)],
                       tree.s_blocks[static_cast<size_t>(p)]) == 0.0);
  for (int p = 0; p < 3; ++p)
    CHECK(max_abs_diff(back.d_blocks[static_cast<size_t>(p)],
                       tree.d_blocks[static_cast<size_t>(p)]) == 0.0);
}

TEST_CASE("zero-level tree is a no-op transform") {
  FilterBank bank = bank_for(2);
  SignalTree tree = make_tree_from_finest(2, 0, {{0.3, -0.1, 0.7}});
  analyze(tree, bank);
  CHECK(detail_count(tree) == 0);
  BlockRow back = synthesize(tree, bank);
  CHECK(back.size() == 1);
  CHECK(back[0][0] == 0.3);
  CHECK(back[0][2] == 0.7);
}

TEST_CASE("malformed trees are rejected") {
  CHECK_THROWS_AS(make_tree_from_finest(1, 2, {{1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_tree_from_finest(1, 0, {{1.0}}), std::invalid_argument);
  SignalTree tree = make_tree_from_finest(1, 2, random_blocks(1, 2, 5));
  FilterBank bank = bank_for(1);
  CHECK_THROWS_AS(synthesize(tree, bank), std::invalid_argument);  // never analyzed
  FilterBank wrong = bank_for(2);
  CHECK_THROWS_AS(analyze(tree, wrong), std::invalid_argument);
}
