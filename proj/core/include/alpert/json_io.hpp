#ifndef ALPERT_JSON_IO_HPP
#define ALPERT_JSON_IO_HPP

#include <string>
#include <vector>

#include "alpert/recurrences.hpp"
#include "alpert/refinement.hpp"
#include "alpert/transform.hpp"
#include "alpert/waveletsolve.hpp"

namespace alpert {

// JSON schemas (deterministic key order, big integers as decimal strings):
//   surd:         {"terms": [{"rad": m, "num": "p", "den": "q"}, ...]}
//   coeff pair:   {"n": int, "C1": [[surd...]...], "Cm1": [[surd...]...]}
//   wavelet pair: {"n": int, "D1": ..., "Dm1": ..., "exact": bool,
//                  "inexact_rows": [int...]}
//   signal tree:  {"order": int, "finest_level": int,
//                  "s": [[[float...]...]...], "d": [[[float...]...]...]}
//   violation:    {"equation": str, "i": int, "j": int, "lhs": surd, "rhs": surd}

std::string surd_to_json(const SurdValue& value);
SurdValue surd_from_json(const std::string& text);

std::string coeff_pair_to_json(const CoeffMatrixPair& pair);
CoeffMatrixPair coeff_pair_from_json(const std::string& text);

std::string wavelet_pair_to_json(const WaveletMatrixPair& pair);
WaveletMatrixPair wavelet_pair_from_json(const std::string& text);

std::string signal_tree_to_json(const SignalTree& tree);
SignalTree signal_tree_from_json(const std::string& text);

std::string violations_to_json(const std::vector<Violation>& violations);

/// CSV: one section per matrix (a name line, then rows of comma-separated
/// decimals at the requested significant digits, round half to even).
std::string coeff_pair_to_csv(const CoeffMatrixPair& pair, int digits);
std::string wavelet_pair_to_csv(const WaveletMatrixPair& pair, int digits);

}  // namespace alpert

#endif  // ALPERT_JSON_IO_HPP
