#include "alpert/json_io.hpp"

#include <json.hpp>

namespace alpert {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json surd_node(const SurdValue& value) {
  ordered_json terms = ordered_json::array();
  for (const auto& [rad, coeff] : value.terms()) {
    ordered_json term;
    term["rad"] = rad;
    term["num"] = coeff.numerator_string();
    term["den"] = coeff.denominator_string();
    terms.push_back(std::move(term));
  }
  ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

SurdValue surd_from_node(const ordered_json& node) {
  SurdValue out;
  for (const auto& term : node.at("terms")) {
    Rational coeff = Rational::from_strings(term.at("num").get<std::string>(),
                                            term.at("den").get<std::string>());
    out += SurdValue::radical(coeff, term.at("rad").get<std::int64_t>());
  }
  return out;
}

ordered_json matrix_node(const SurdMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(surd_node(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SurdMatrix matrix_from_node(const ordered_json& node) {
  int rows = static_cast<int>(node.size());
  int cols = rows == 0 ? 0 : static_cast<int>(node.at(0).size());
  SurdMatrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      out(r, c) = surd_from_node(node.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
  return out;
}

ordered_json blocks_node(const std::vector<BlockRow>& levels) {
  ordered_json out = ordered_json::array();
  for (const BlockRow& row : levels) {
    ordered_json level = ordered_json::array();
    for (const Block& block : row) level.push_back(block);
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<BlockRow> blocks_from_node(const ordered_json& node) {
  std::vector<BlockRow> out;
  for (const auto& level : node) {
    BlockRow row;
    for (const auto& block : level) row.push_back(block.get<Block>());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string surd_to_json(const SurdValue& value) { return surd_node(value).dump(); }

SurdValue surd_from_json(const std::string& text) {
  return surd_from_node(ordered_json::parse(text));
}

std::string coeff_pair_to_json(const CoeffMatrixPair& pair) {
  ordered_json out;
  out["n"] = pair.order;
  out["C1"] = matrix_node(pair.C1);
  out["Cm1"] = matrix_node(pair.Cm1);
  return out.dump();
}

CoeffMatrixPair coeff_pair_from_json(const std::string& text) {
  ordered_json node = ordered_json::parse(text);
  CoeffMatrixPair pair;
  pair.order = node.at("n").get<int>();
  pair.C1 = matrix_from_node(node.at("C1"));
  pair.Cm1 = matrix_from_node(node.at("Cm1"));
  return pair;
}

std::string wavelet_pair_to_json(const WaveletMatrixPair& pair) {
  ordered_json out;
  out["n"] = pair.order;
  out["D1"] = matrix_node(pair.D1);
  out["Dm1"] = matrix_node(pair.Dm1);
  out["exact"] = pair.exact;
  out["inexact_rows"] = pair.inexact_rows;
  return out.dump();
}

WaveletMatrixPair wavelet_pair_from_json(const std::string& text) {
  ordered_json node = ordered_json::parse(text);
  WaveletMatrixPair pair;
  pair.order = node.at("n").get<int>();
  pair.D1 = matrix_from_node(node.at("D1"));
  pair.Dm1 = matrix_from_node(node.at("Dm1"));
  pair.exact = node.at("exact").get<bool>();
  pair.inexact_rows = node.at("inexact_rows").get<std::vector<int>>();
  return pair;
}

std::string signal_tree_to_json(const SignalTree& tree) {
  ordered_json out;
  out["order"] = tree.order;
  out["finest_level"] = tree.finest_level;
  out["s"] = blocks_node(tree.s_blocks);
  out["d"] = blocks_node(tree.d_blocks);
  return out.dump();
}

SignalTree signal_tree_from_json(const std::string& text) {
  ordered_json node = ordered_json::parse(text);
  SignalTree tree;
  tree.order = node.at("order").get<int>();
  tree.finest_level = node.at("finest_level").get<int>();
  tree.s_blocks = blocks_from_node(node.at("s"));
  tree.d_blocks = blocks_from_node(node.at("d"));
  return tree;
}

std::string violations_to_json(const std::vector<Violation>& violations) {
  ordered_json out = ordered_json::array();
  for (const Violation& v : violations) {
    ordered_json node;
    node["equation"] = v.equation;
    node["i"] = v.i;
    node["j"] = v.j;
    node["lhs"] = surd_node(v.lhs);
    node["rhs"] = surd_node(v.rhs);
    out.push_back(std::move(node));
  }
  return out.dump();
}

namespace {

std::string matrix_csv(const SurdMatrix& m, const std::string& name, int digits) {
  std::string out = name + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ",";
      out += m(r, c).to_decimal(digits);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string coeff_pair_to_csv(const CoeffMatrixPair& pair, int digits) {
  return matrix_csv(pair.C1, "C1", digits) + matrix_csv(pair.Cm1, "Cm1", digits);
}

std::string wavelet_pair_to_csv(const WaveletMatrixPair& pair, int digits) {
  return matrix_csv(pair.D1, "D1", digits) + matrix_csv(pair.Dm1, "Dm1", digits);
}

}  // namespace alpert
