#include "alpert/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alpert/legendre.hpp"

namespace alpert {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_block_row(const BlockRow& row, int level, int order) {
  if (row.size() != (1u << level))
    throw std::invalid_argument("SignalTree: level must hold 2^p blocks");
  for (const Block& b : row)
    if (b.size() != static_cast<size_t>(order) + 1)
      throw std::invalid_argument("SignalTree: block length must be order+1");
}

Block apply(const std::vector<std::vector<double>>& m, const Block& v) {
  Block out(m.size(), 0.0);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

Block apply_transposed(const std::vector<std::vector<double>>& m, const Block& v) {
  Block out(m.empty() ? 0 : m[0].size(), 0.0);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < out.size(); ++c) out[c] += m[r][c] * v[r];
  return out;
}

double block_energy(const BlockRow& row) {
  double acc = 0.0;
  for (const Block& b : row)
    for (double v : b) acc += v * v;
  return acc;
}

}  // namespace

SignalTree make_tree_from_finest(int order, int finest_level, BlockRow finest) {
  if (order < 0 || finest_level < 0)
    throw std::invalid_argument("make_tree_from_finest: negative order or level");
  check_block_row(finest, finest_level, order);
  SignalTree tree;
  tree.order = order;
  tree.finest_level = finest_level;
  tree.s_blocks.assign(static_cast<size_t>(finest_level) + 1, {});
  tree.d_blocks.assign(static_cast<size_t>(finest_level), {});
  tree.s_blocks[static_cast<size_t>(finest_level)] = std::move(finest);
  return tree;
}

FilterBank make_filter_bank(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet) {
  if (coeff.order != wavelet.order)
    throw std::invalid_argument("make_filter_bank: order mismatch");
  FilterBank bank;
  bank.order = coeff.order;
  bank.c1 = coeff.C1.to_double();
  bank.cm1 = coeff.Cm1.to_double();
  bank.d1 = wavelet.D1.to_double();
  bank.dm1 = wavelet.Dm1.to_double();
  return bank;
}

void analyze(SignalTree& tree, const FilterBank& bank) {
  if (tree.order != bank.order) throw std::invalid_argument("analyze: order mismatch");
  if (!tree.has_level(tree.finest_level))
    throw std::invalid_argument("analyze: finest level blocks missing");
  for (int p = tree.finest_level - 1; p >= 0; --p) {
    const BlockRow& fine = tree.s_blocks[static_cast<size_t>(p) + 1];
    BlockRow s(static_cast<size_t>(1) << p), d(static_cast<size_t>(1) << p);
    for (size_t k = 0; k < s.size(); ++k) {
      Block left = apply(bank.cm1, fine[2 * k]);
      Block right = apply(bank.c1, fine[2 * k + 1]);
      Block dleft = apply(bank.dm1, fine[2 * k]);
      Block dright = apply(bank.d1, fine[2 * k + 1]);
      s[k].resize(left.size());
      d[k].resize(left.size());
      for (size_t c = 0; c < left.size(); ++c) {
        s[k][c] = kInvSqrt2 * (left[c] + right[c]);
        d[k][c] = kInvSqrt2 * (dleft[c] + dright[c]);
      }
    }
    tree.s_blocks[static_cast<size_t>(p)] = std::move(s);
    tree.d_blocks[static_cast<size_t>(p)] = std::move(d);
  }
}

void analyze(SignalTree& tree, const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet) {
  FilterBank bank = make_filter_bank(coeff, wavelet);
  analyze(tree, bank);
}

BlockRow synthesize(const SignalTree& tree, const FilterBank& bank) {
  if (tree.order != bank.order) throw std::invalid_argument("synthesize: order mismatch");
  if (!tree.has_level(0)) throw std::invalid_argument("synthesize: level 0 missing");
  BlockRow current = tree.s_blocks[0];
  for (int p = 0; p < tree.finest_level; ++p) {
    if (static_cast<int>(tree.d_blocks.size()) <= p || tree.d_blocks[static_cast<size_t>(p)].empty())
      throw std::invalid_argument("synthesize: detail level missing");
    const BlockRow& d = tree.d_blocks[static_cast<size_t>(p)];
    BlockRow fine(current.size() * 2);
    for (size_t k = 0; k < current.size(); ++k) {
      Block even = apply_transposed(bank.cm1, current[k]);
      Block even_d = apply_transposed(bank.dm1, d[k]);
      Block odd = apply_transposed(bank.c1, current[k]);
      Block odd_d = apply_transposed(bank.d1, d[k]);
      fine[2 * k].resize(even.size());
      fine[2 * k + 1].resize(even.size());
      for (size_t c = 0; c < even.size(); ++c) {
        fine[2 * k][c] = kInvSqrt2 * (even[c] + even_d[c]);
        fine[2 * k + 1][c] = kInvSqrt2 * (odd[c] + odd_d[c]);
      }
    }
    current = std::move(fine);
  }
  return current;
}

BlockRow synthesize(const SignalTree& tree, const CoeffMatrixPair& coeff,
                    const WaveletMatrixPair& wavelet) {
  FilterBank bank = make_filter_bank(coeff, wavelet);
  return synthesize(tree, bank);
}

std::pair<SignalTree, size_t> threshold_compress(SignalTree tree, double eps) {
  if (eps < 0.0) throw std::invalid_argument("threshold_compress: eps must be nonnegative");
  size_t kept = 0;
  for (BlockRow& row : tree.d_blocks)
    for (Block& block : row)
      for (double& v : block) {
        if (std::fabs(v) < eps) v = 0.0;
        else ++kept;
      }
  return {std::move(tree), kept};
}

size_t detail_count(const SignalTree& tree) {
  size_t out = 0;
  for (const BlockRow& row : tree.d_blocks)
    for (const Block& block : row) out += block.size();
  return out;
}

double finest_energy(const SignalTree& tree) {
  return block_energy(tree.s_blocks[static_cast<size_t>(tree.finest_level)]);
}

double coarse_plus_detail_energy(const SignalTree& tree) {
  double acc = block_energy(tree.s_blocks[0]);
  for (const BlockRow& row : tree.d_blocks) acc += block_energy(row);
  return acc;
}

BlockRow project_polynomial(const PolyExact& f, int order, int finest_level) {
  if (order < 0 || finest_level < 0)
    throw std::invalid_argument("project_polynomial: negative order or level");
  size_t count = static_cast<size_t>(1) << finest_level;
  BlockRow out(count, Block(static_cast<size_t>(order) + 1, 0.0));
  // 2^{-m/2} exactly: rational for even m, (1/2^{(m+1)/2}) sqrt(2) for odd.
  SurdValue scale = finest_level % 2 == 0
                        ? SurdValue(pow2(-finest_level / 2))
                        : SurdValue::radical(pow2(-(finest_level + 1) / 2), 2);
  Rational cell(1, 1L << std::min(finest_level, 62));
  if (finest_level > 62) throw std::invalid_argument("project_polynomial: level too deep");
  std::vector<PolySurd> basis;
  for (int i = 0; i <= order; ++i) basis.push_back(orthonormal_on_unit(i));
  for (size_t k = 0; k < count; ++k) {
    // f restricted to the k-th cell, pulled back to [0, 1].
    PolyExact pulled = f.compose_affine(cell, Rational(static_cast<long>(k)) * cell);
    PolySurd pulled_surd = to_surd_poly(pulled);
    for (int i = 0; i <= order; ++i) {
      SurdValue integral = (pulled_surd * basis[static_cast<size_t>(i)]).integral_unit();
      out[k][static_cast<size_t>(i)] = (integral * scale).to_double();
    }
  }
  return out;
}

std::vector<std::vector<double>> unit_moment_table(int order, int max_power) {
  std::vector<std::vector<double>> table(static_cast<size_t>(max_power) + 1,
                                         std::vector<double>(static_cast<size_t>(order) + 1, 0.0));
  for (int d = 0; d <= max_power; ++d) {
    std::vector<Rational> mono(static_cast<size_t>(d) + 1, Rational(0));
    mono[static_cast<size_t>(d)] = Rational(1);
    PolySurd monomial = to_surd_poly(PolyExact(std::move(mono)));
    for (int i = 0; i <= order; ++i)
      table[static_cast<size_t>(d)][static_cast<size_t>(i)] =
          (monomial * orthonormal_on_unit(i)).integral_unit().to_double();
  }
  return table;
}

}  // namespace alpert
