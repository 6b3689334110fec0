#include "alpert/report.hpp"

#include <json.hpp>

#include "alpert/fourier.hpp"
#include "alpert/json_io.hpp"
#include "alpert/legendre.hpp"
#include "alpert/recurrences.hpp"
#include "alpert/refinement.hpp"
#include "alpert/transform.hpp"
#include "alpert/waveletsolve.hpp"

namespace alpert {

namespace {

using ordered_json = nlohmann::ordered_json;

CoeffMatrixPair slice(const CoeffMatrixPair& big, int order) {
  CoeffMatrixPair out;
  out.order = order;
  out.C1 = big.C1.leading_block(order + 1);
  out.Cm1 = big.Cm1.leading_block(order + 1);
  return out;
}

bool surd_close(const SurdValue& a, const SurdValue& b, bool exact) {
  if (exact) return a == b;
  mpf_class diff = (a - b).to_mpf(256);
  mpf_abs(diff.get_mpf_t(), diff.get_mpf_t());
  return diff < mpf_class(1e-30, 256);
}

ordered_json wavelet_order_report(const CoeffMatrixPair& coeff, bool* pass) {
  ordered_json node;
  int n = coeff.order;
  WaveletMatrixPair wavelet = solve_wavelet_pair(coeff);
  bool ortho = verify_wavelet_orthogonality(coeff, wavelet);
  node["orthogonality"] = ortho;
  node["exact"] = wavelet.exact;
  bool rows_ok = true;
  if (n >= 1) {
    bool row = surd_close(wavelet.D1(n - 1, n - 1), SurdValue(Rational(1, 2L * n)), wavelet.exact) &&
               surd_close(wavelet.D1(n - 1, n),
                          SurdValue::radical(Rational(-1, 2L * n), (2L * n + 1) * (2L * n - 1)),
                          wavelet.exact);
    node["closed_row_n_minus_1"] = row;
    rows_ok = rows_ok && row;
  }
  if (n >= 2) {
    bool row = surd_close(wavelet.D1(n - 2, n - 2), SurdValue(Rational(1, 2L * n - 2)), wavelet.exact) &&
               surd_close(wavelet.D1(n - 2, n - 1),
                          SurdValue::radical(Rational(-1, 2L * n - 2), (2L * n - 1) * (2L * n - 3)),
                          wavelet.exact) &&
               wavelet.D1(n - 2, n).is_zero();
    node["closed_row_n_minus_2"] = row;
    rows_ok = rows_ok && row;
  }
  if (n >= 3) {
    std::vector<SurdValue> closed = wavelet_row_nm3_closed_form(n);
    bool row = true;
    for (int c = 0; c < 4; ++c)
      row = row && surd_close(wavelet.D1(n - 3, n - 3 + c), closed[static_cast<size_t>(c)],
                              wavelet.exact);
    node["closed_row_n_minus_3"] = row;
    rows_ok = rows_ok && row;
  }
  bool lemma_ok = true;
  if (n >= 2) {
    LemmaEvenReport lemma = verify_lemma_even(n);
    node["lemma_even_zero_pattern"] = lemma.zero_pattern_holds;
    node["lemma_even_trailing_agreement"] = lemma.trailing_agreement_holds;
    lemma_ok = lemma.zero_pattern_holds && lemma.trailing_agreement_holds;
  }
  bool parity_ok = true;
  if (n <= 10) {
    parity_ok = verify_parity_basis(coeff, wavelet);
    node["parity_basis"] = parity_ok;
  }
  *pass = ortho && rows_ok && lemma_ok && parity_ok;
  return node;
}

}  // namespace

const std::set<std::string>& all_verify_scopes() {
  static const std::set<std::string> scopes = {"orthogonality", "oracle", "recurrences",
                                               "wavelets", "fourier"};
  return scopes;
}

VerifyResult run_verification(const VerifyOptions& options) {
  if (options.order < 0) throw std::invalid_argument("run_verification: negative order");
  std::set<std::string> scopes = options.scopes.empty() ? all_verify_scopes() : options.scopes;
  for (const std::string& scope : scopes)
    if (!all_verify_scopes().count(scope))
      throw std::invalid_argument("run_verification: unknown scope " + scope);

  int order = options.order;
  int big_order = order + 2;
  CoeffMatrixPair big = build_refinement_pair(big_order, BuildPath::TwoF1Half, options.threads);

  bool pass = true;
  ordered_json report;
  report["order"] = order;
  report["scopes"] = std::vector<std::string>(scopes.begin(), scopes.end());

  ordered_json orders = ordered_json::array();
  for (int n = 0; n <= order; ++n) {
    ordered_json node;
    node["n"] = n;
    CoeffMatrixPair pair = slice(big, n);
    if (scopes.count("orthogonality")) {
      bool ortho = verify_orthogonality(pair);
      PointwiseReport pointwise = verify_refinement_pointwise(pair, 9);
      node["orthogonality"] = ortho;
      node["refinement_pointwise"] = pointwise.all_exact;
      pass = pass && ortho && pointwise.all_exact;
    }
    if (scopes.count("oracle")) {
      bool embed = true;
      for (int i = 0; i <= n && embed; ++i)
        for (int j = 0; j <= i && embed; ++j)
          embed = pair.C1(i, j) == big.C1(i, j);
      node["embedding"] = embed;
      pass = pass && embed;
    }
    if (scopes.count("recurrences")) {
      bool regen = regenerate_via_recurrence(n).C1 == pair.C1;
      node["regenerate_matches_build"] = regen;
      pass = pass && regen;
    }
    if (scopes.count("wavelets")) {
      bool wavelet_pass = true;
      node["wavelets"] = wavelet_order_report(pair, &wavelet_pass);
      pass = pass && wavelet_pass;
    }
    if (scopes.count("fourier") && n <= options.fourier_max_order) {
      std::vector<double> grid = default_sample_grid();
      double two_scale = verify_two_scale(pair, grid);
      double addition = verify_addition_formula(pair, grid);
      double derivative = verify_derivative_relation(pair, grid);
      double qmf = verify_symbol_qmf(pair, grid);
      ordered_json fnode;
      fnode["two_scale_max_residual"] = two_scale;
      fnode["addition_max_residual"] = addition;
      fnode["derivative_max_residual"] = derivative;
      fnode["qmf_max_residual"] = qmf;
      bool fourier_pass = two_scale < 1e-10 && addition < 1e-10 && derivative < 1e-9 && qmf < 1e-10;
      fnode["pass"] = fourier_pass;
      node["fourier"] = std::move(fnode);
      pass = pass && fourier_pass;
    }
    orders.push_back(std::move(node));
  }
  report["orders"] = std::move(orders);

  if (scopes.count("oracle")) {
    bool agree = true;
    int bad_i = -1, bad_j = -1;
    for (int i = 0; i <= order && agree; ++i)
      for (int j = 0; j <= i && agree; ++j) {
        SurdValue oracle = integrate_shifted_product(i, j);
        if (!(entry_half_argument(i, j) == oracle && entry_doubled_argument(i, j) == oracle &&
              entry_parity_form(i, j) == oracle)) {
          agree = false;
          bad_i = i;
          bad_j = j;
        }
      }
    ordered_json node;
    node["order"] = order;
    node["pass"] = agree;
    if (!agree) {
      node["first_mismatch_i"] = bad_i;
      node["first_mismatch_j"] = bad_j;
    }
    report["four_path_agreement"] = std::move(node);
    pass = pass && agree;
  }

  BesselDifferenceReport bessel = check_bessel_difference(big);
  if (scopes.count("recurrences")) {
    std::vector<Violation> gen_i = check_gen_eig_i(big);
    std::vector<Violation> gen_j = check_gen_eig_j(big);
    std::vector<Violation> mixed = check_mixed_recurrence(big);
    ordered_json node;
    node["window_order"] = big_order;
    node["geneigi_violations"] = gen_i.size();
    node["geneigj_violations"] = gen_j.size();
    node["recurij_violations"] = mixed.size();
    ordered_json pdde;
    pdde["printed_range_0<i<j<n_holds"] = bessel.printed_range_holds;
    pdde["transposed_range_0<j<i<n_holds"] = bessel.transposed_range_holds;
    pdde["diagonal_j=i_holds"] = bessel.diagonal_holds;
    pdde["column_zero_even_rows_hold"] = bessel.column_zero_even_rows_hold;
    pdde["column_zero_odd_rows_hold"] = bessel.column_zero_odd_rows_hold;
    pdde["validated_range"] = bessel.validated_range;
    node["pdde"] = std::move(pdde);
    report["recurrence_checks"] = std::move(node);
    pass = pass && gen_i.empty() && gen_j.empty() && mixed.empty() &&
           bessel.transposed_range_holds;
  }

  // Discrepancy ledger: always present.
  {
    bool printed_radicand_holds = true;   // (2i+1)(2i-1)
    bool resolved_radicand_holds = true;  // (2i+1)(2i-3)
    for (int i = 2; i <= big_order; ++i) {
      SurdValue oracle = big.C1(i, i - 2);
      SurdValue printed = SurdValue::radical(pow2(-i) * Rational(i - 2), (2L * i + 1) * (2L * i - 1));
      SurdValue resolved = entry_subsubdiagonal(i);
      if (!(oracle == printed)) printed_radicand_holds = false;
      if (!(oracle == resolved)) resolved_radicand_holds = false;
    }
    ordered_json node;
    node["cnm2_radicand"] = resolved_radicand_holds
                                ? "(2i+1)(2i-3)"
                                : (printed_radicand_holds ? "(2i+1)(2i-1)" : "unresolved");
    node["cnm2_formula"] = "(i-2) sqrt((2i+1)(2i-3)) / 2^i";
    node["cnm2_printed_radicand_holds"] = printed_radicand_holds;
    node["pdde_range"] = bessel.validated_range;
    node["pdde_printed_range_holds"] = bessel.printed_range_holds;
    report["discrepancies"] = std::move(node);
    pass = pass && resolved_radicand_holds;
  }

  report["pass"] = pass;
  VerifyResult result;
  result.pass = pass;
  result.report_json = report.dump(2);
  return result;
}

}  // namespace alpert
