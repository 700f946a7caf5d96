#pragma once

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "bifree/scalar.hpp"

namespace bifree {

/// Dense row-major matrix over an exact or floating scalar.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, ScalarOps<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero(double tol = 0.0) const {
    for (const S& x : a_)
      if (!ScalarOps<S>::is_zero(x, tol)) return false;
    return true;
  }

  double max_abs_approx() const {
    double m = 0.0;
    for (const S& x : a_) m = std::max(m, ScalarOps<S>::abs_approx(x));
    return m;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& x = (*this)(i, k);
        if (ScalarOps<S>::is_zero(x, 0.0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  Mat scaled(const S& c) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }

  void add_scaled(const Mat& o, const S& c) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k] * c;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const S& x = (*this)(i, j);
        if (ScalarOps<S>::is_zero(x, 0.0)) continue;
        for (int p = 0; p < o.rows_; ++p)
          for (int q = 0; q < o.cols_; ++q) r(i * o.rows_ + p, j * o.cols_ + q) = x * o(p, q);
      }
    return r;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    assert(int(v.size()) == cols_);
    std::vector<S> r(rows_, ScalarOps<S>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (!ScalarOps<S>::is_zero((*this)(i, j), 0.0)) r[i] += (*this)(i, j) * v[j];
      }
    return r;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

using RatMat = Mat<Rational>;

}  // namespace bifree
