#ifndef ALPERT_MATRIX_HPP
#define ALPERT_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "alpert/surd.hpp"

namespace alpert {

/// Small dense matrix over the surd field.
class SurdMatrix {
 public:
  SurdMatrix() = default;
  SurdMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static SurdMatrix identity(int n) {
    SurdMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = SurdValue(Rational(1));
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  SurdValue& operator()(int r, int c) { return data_[index(r, c)]; }
  const SurdValue& operator()(int r, int c) const { return data_[index(r, c)]; }

  SurdMatrix transpose() const {
    SurdMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend SurdMatrix operator*(const SurdMatrix& a, const SurdMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SurdMatrix: shape mismatch");
    SurdMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const SurdValue& av = a(r, k);
        if (av.is_zero()) continue;
        for (int c = 0; c < b.cols_; ++c) {
          const SurdValue& bv = b(k, c);
          if (!bv.is_zero()) out(r, c) += av * bv;
        }
      }
    return out;
  }

  friend SurdMatrix operator+(const SurdMatrix& a, const SurdMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SurdMatrix: shape mismatch");
    SurdMatrix out = a;
    for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend SurdMatrix operator-(const SurdMatrix& a, const SurdMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SurdMatrix: shape mismatch");
    SurdMatrix out = a;
    for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  SurdMatrix& scale(const Rational& q) {
    for (auto& v : data_) v *= q;
    return *this;
  }

  friend bool operator==(const SurdMatrix& a, const SurdMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  SurdMatrix leading_block(int n) const {
    SurdMatrix out(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

  std::vector<std::vector<double>> to_double() const {
    std::vector<std::vector<double>> out(static_cast<size_t>(rows_),
                                         std::vector<double>(static_cast<size_t>(cols_), 0.0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          (*this)(r, c).to_double();
    return out;
  }

 private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SurdMatrix: index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<SurdValue> data_;
};

}  // namespace alpert

#endif  // ALPERT_MATRIX_HPP
