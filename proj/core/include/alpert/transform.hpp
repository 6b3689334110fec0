#ifndef ALPERT_TRANSFORM_HPP
#define ALPERT_TRANSFORM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "alpert/poly.hpp"
#include "alpert/refinement.hpp"
#include "alpert/waveletsolve.hpp"

namespace alpert {

using Block = std::vector<double>;        // one (n+1)-vector of coefficients
using BlockRow = std::vector<Block>;      // the 2^p blocks of one level

/// Per-level scaling (s) and detail (d) coefficient blocks. Level p holds
/// 2^p blocks; s runs over levels 0..m once analyzed (only the finest level
/// before), d over levels 0..m-1.
struct SignalTree {
  int order = 0;
  int finest_level = 0;
  std::vector<BlockRow> s_blocks;  // indexed by level; empty rows where absent
  std::vector<BlockRow> d_blocks;

  bool has_level(int p) const {
    return p >= 0 && p < static_cast<int>(s_blocks.size()) &&
           !s_blocks[static_cast<size_t>(p)].empty();
  }
};

SignalTree make_tree_from_finest(int order, int finest_level, BlockRow finest);

/// The four filter matrices as plain doubles.
struct FilterBank {
  int order = 0;
  std::vector<std::vector<double>> c1, cm1, d1, dm1;
};
FilterBank make_filter_bank(const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet);

/// Cascade from the finest level down to level 0:
/// s^p_k = (cm1 s^{p+1}_{2k} + c1 s^{p+1}_{2k+1}) / sqrt(2), likewise d with
/// the wavelet matrices.
void analyze(SignalTree& tree, const FilterBank& bank);
void analyze(SignalTree& tree, const CoeffMatrixPair& coeff, const WaveletMatrixPair& wavelet);

/// Inverse cascade; returns the reconstructed finest-level blocks.
BlockRow synthesize(const SignalTree& tree, const FilterBank& bank);
BlockRow synthesize(const SignalTree& tree, const CoeffMatrixPair& coeff,
                    const WaveletMatrixPair& wavelet);

/// Zeroes detail coefficients below eps; returns the retained count.
std::pair<SignalTree, size_t> threshold_compress(SignalTree tree, double eps);

size_t detail_count(const SignalTree& tree);
double finest_energy(const SignalTree& tree);
double coarse_plus_detail_energy(const SignalTree& tree);

/// Exact projection of a polynomial onto the finest scaling space,
/// s^m_{i,k} = 2^{m/2} int f(t) phi_i(2^m t - k) dt over the k-th dyadic
/// cell, rounded to double at the end.
BlockRow project_polynomial(const PolyExact& f, int order, int finest_level);

/// Moment table M(d, i) = int_0^1 u^d p_hat_i(2u - 1) du as doubles, used to
/// project per-cell sampled data.
std::vector<std::vector<double>> unit_moment_table(int order, int max_power);

}  // namespace alpert

#endif  // ALPERT_TRANSFORM_HPP
