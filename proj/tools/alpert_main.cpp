// Command line front end: generation, verification, evaluation, and the
// discrete transform, with machine-readable output.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "alpert/fourier.hpp"
#include "alpert/json_io.hpp"
#include "alpert/legendre.hpp"
#include "alpert/refinement.hpp"
#include "alpert/report.hpp"
#include "alpert/transform.hpp"
#include "alpert/waveletsolve.hpp"

namespace {

using alpert::Rational;
using ordered_json = nlohmann::ordered_json;

int thread_count_from_env() {
  const char* raw = std::getenv("ALPERT_THREADS");
  if (!raw) return 1;
  int value = std::atoi(raw);
  return value < 1 ? 1 : value;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t places = text.size() - dot - 1;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    return Rational(mpz_class(digits), den);
  }
  return Rational(mpz_class(text), mpz_class(1));
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << payload;
}

std::vector<double> read_csv_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    values.push_back(std::stod(line));
  }
  return values;
}

// Degree-n fit through the per-cell sample nodes (midpoints of n+1 equal
// subintervals), then projection through the exact moment table.
alpert::BlockRow samples_to_blocks(const std::vector<double>& values, int order, int levels) {
  size_t block_count = static_cast<size_t>(1) << levels;
  size_t width = static_cast<size_t>(order) + 1;
  if (values.size() != block_count * width)
    throw std::invalid_argument("samples input must hold 2^levels * (order+1) values");
  std::vector<std::vector<double>> vandermonde(width, std::vector<double>(width));
  for (size_t r = 0; r < width; ++r) {
    double node = (static_cast<double>(r) + 0.5) / static_cast<double>(width);
    double power = 1.0;
    for (size_t c = 0; c < width; ++c) {
      vandermonde[r][c] = power;
      power *= node;
    }
  }
  std::vector<std::vector<double>> moments = alpert::unit_moment_table(order, order);
  double scale = std::pow(2.0, -0.5 * levels);
  alpert::BlockRow blocks(block_count, alpert::Block(width, 0.0));
  for (size_t k = 0; k < block_count; ++k) {
    std::vector<std::vector<double>> a = vandermonde;
    std::vector<double> rhs(values.begin() + static_cast<long>(k * width),
                            values.begin() + static_cast<long>((k + 1) * width));
    // Gaussian elimination with partial pivoting.
    for (size_t col = 0; col < width; ++col) {
      size_t pivot = col;
      for (size_t r = col + 1; r < width; ++r)
        if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
      std::swap(a[col], a[pivot]);
      std::swap(rhs[col], rhs[pivot]);
      for (size_t r = 0; r < width; ++r) {
        if (r == col) continue;
        double f = a[r][col] / a[col][col];
        for (size_t c = col; c < width; ++c) a[r][c] -= f * a[col][c];
        rhs[r] -= f * rhs[col];
      }
    }
    std::vector<double> poly(width);
    for (size_t c = 0; c < width; ++c) poly[c] = rhs[c] / a[c][c];
    for (size_t i = 0; i < width; ++i) {
      double acc = 0.0;
      for (size_t d = 0; d < width; ++d) acc += poly[d] * moments[d][i];
      blocks[k][i] = scale * acc;
    }
  }
  return blocks;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Alpert multiwavelet refinement and wavelet matrices, "
               "verification suites, and the discrete multiwavelet transform"};
  app.require_subcommand(1);
  int threads = thread_count_from_env();

  // gen
  auto* gen = app.add_subcommand("gen", "Emit the refinement matrix pair");
  int gen_order = 0;
  std::string gen_format = "json", gen_path = "2f1-half", gen_output;
  int gen_digits = 17;
  gen->add_option("order", gen_order, "Approximation order n")->required();
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--digits", gen_digits, "Significant digits for csv")->check(CLI::Range(1, 50));
  gen->add_option("--path", gen_path)
      ->check(CLI::IsMember({"2f1-half", "2f1-two", "4f3", "oracle"}));
  gen->add_option("--output", gen_output, "Write payload to a file");

  // wavelets
  auto* wav = app.add_subcommand("wavelets", "Emit the wavelet matrix pair");
  int wav_order = 0;
  std::string wav_format = "json", wav_output;
  int wav_digits = 17;
  wav->add_option("order", wav_order)->required();
  wav->add_option("--format", wav_format)->check(CLI::IsMember({"json", "csv"}));
  wav->add_option("--digits", wav_digits)->check(CLI::Range(1, 50));
  wav->add_option("--output", wav_output);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  int verify_order = 3;
  std::vector<std::string> verify_scopes;
  int fourier_max = 6;
  verify->add_option("order", verify_order)->required();
  verify->add_option("--scope", verify_scopes, "Subset of suites")
      ->delimiter(',')
      ->check(CLI::IsMember({"orthogonality", "oracle", "recurrences", "wavelets", "fourier"}));
  verify->add_option("--fourier-max-order", fourier_max);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate the scaling and wavelet vectors");
  int eval_order = 0;
  std::string eval_point;
  eval->add_option("order", eval_order)->required();
  eval->add_option("t", eval_point, "Rational point (p/q, decimal, or integer)")->required();

  // transform
  auto* tr = app.add_subcommand("transform", "Discrete multiwavelet transform of a signal");
  int tr_order = 0, tr_levels = 0;
  std::string tr_input, tr_output, tr_kind = "samples";
  double tr_threshold = -1.0;
  tr->add_option("--order", tr_order)->required();
  tr->add_option("--levels", tr_levels)->required();
  tr->add_option("--input", tr_input)->required();
  tr->add_option("--output", tr_output);
  tr->add_option("--input-kind", tr_kind)->check(CLI::IsMember({"samples", "coeffs"}));
  tr->add_option("--threshold", tr_threshold);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (gen->parsed()) {
    if (gen_order < 0) throw std::invalid_argument("order must be nonnegative");
    alpert::CoeffMatrixPair pair =
        alpert::build_refinement_pair(gen_order, alpert::build_path_from_string(gen_path), threads);
    emit(gen_format == "json" ? alpert::coeff_pair_to_json(pair)
                              : alpert::coeff_pair_to_csv(pair, gen_digits),
         gen_output);
    return 0;
  }

  if (wav->parsed()) {
    if (wav_order < 0) throw std::invalid_argument("order must be nonnegative");
    alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(wav_order,
                                                                  alpert::BuildPath::TwoF1Half,
                                                                  threads);
    alpert::WaveletMatrixPair pair = alpert::solve_wavelet_pair(coeff);
    emit(wav_format == "json" ? alpert::wavelet_pair_to_json(pair)
                              : alpert::wavelet_pair_to_csv(pair, wav_digits),
         wav_output);
    return 0;
  }

  if (verify->parsed()) {
    if (verify_order < 0) throw std::invalid_argument("order must be nonnegative");
    alpert::VerifyOptions options;
    options.order = verify_order;
    options.scopes.insert(verify_scopes.begin(), verify_scopes.end());
    options.fourier_max_order = fourier_max;
    options.threads = threads;
    alpert::VerifyResult result = alpert::run_verification(options);
    std::cout << result.report_json << "\n";
    return result.pass ? 0 : 1;
  }

  if (eval->parsed()) {
    if (eval_order < 0) throw std::invalid_argument("order must be nonnegative");
    Rational t = parse_rational(eval_point);
    alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(eval_order,
                                                                  alpert::BuildPath::TwoF1Half,
                                                                  threads);
    alpert::WaveletMatrixPair wavelet = alpert::solve_wavelet_pair(coeff);
    std::vector<alpert::SurdValue> phi = alpert::eval_scaling_vector(eval_order, t);
    // Psi_n(t) with t in [0, 1): substitute u = 2t - 1.
    std::vector<alpert::SurdValue> psi =
        alpert::eval_wavelet_vector(wavelet, Rational(2) * t - Rational(1));
    ordered_json out;
    out["n"] = eval_order;
    out["t"] = t.numerator_string() + "/" + t.denominator_string();
    auto render = [](const std::vector<alpert::SurdValue>& values) {
      ordered_json arr = ordered_json::array();
      for (const alpert::SurdValue& v : values) {
        ordered_json node;
        node["exact"] = ordered_json::parse(alpert::surd_to_json(v));
        node["value"] = v.to_double();
        arr.push_back(std::move(node));
      }
      return arr;
    };
    out["Phi"] = render(phi);
    out["Psi"] = render(psi);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (tr->parsed()) {
    if (tr_order < 0 || tr_levels < 0)
      throw std::invalid_argument("order and levels must be nonnegative");
    std::vector<double> values = read_csv_values(tr_input);
    alpert::BlockRow finest;
    if (tr_kind == "coeffs") {
      size_t width = static_cast<size_t>(tr_order) + 1;
      size_t blocks = static_cast<size_t>(1) << tr_levels;
      if (values.size() != blocks * width)
        throw std::invalid_argument("coeffs input must hold 2^levels * (order+1) values");
      finest.resize(blocks);
      for (size_t k = 0; k < blocks; ++k)
        finest[k].assign(values.begin() + static_cast<long>(k * width),
                         values.begin() + static_cast<long>((k + 1) * width));
    } else {
      finest = samples_to_blocks(values, tr_order, tr_levels);
    }
    alpert::SignalTree tree = alpert::make_tree_from_finest(tr_order, tr_levels, std::move(finest));
    alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(tr_order,
                                                                  alpert::BuildPath::TwoF1Half,
                                                                  threads);
    alpert::WaveletMatrixPair wavelet = alpert::solve_wavelet_pair(coeff);
    alpert::analyze(tree, coeff, wavelet);
    size_t kept = alpert::detail_count(tree);
    if (tr_threshold >= 0.0) {
      auto [compressed, kept_count] = alpert::threshold_compress(std::move(tree), tr_threshold);
      tree = std::move(compressed);
      kept = kept_count;
    }
    std::string payload = alpert::signal_tree_to_json(tree);
    if (tr_output.empty()) {
      std::cout << payload << "\n";
    } else {
      emit(payload, tr_output);
      ordered_json summary;
      summary["order"] = tr_order;
      summary["levels"] = tr_levels;
      summary["kept_detail_count"] = kept;
      summary["output"] = tr_output;
      std::cout << summary.dump() << "\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    std::cerr << "usage error\n";
    return 2;
  } catch (const CLI::Error&) {
    std::cerr << "usage error\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
