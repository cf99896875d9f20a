#pragma once
// Small row-major f64 matrix used throughout the model code. Hot loops
// delegate to the kernels layer.

#include <cassert>
#include <cstddef>
#include <vector>

#include "cool/kernels.hpp"

namespace cool {

using Vec = std::vector<double>;

struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  static Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }

  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }
  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  double* data() { return a.data(); }
  const double* data() const { return a.data(); }
  std::size_t size() const { return a.size(); }
  bool empty() const { return a.empty(); }

  void set_zero() { std::fill(a.begin(), a.end(), 0.0); }

  void set_row(std::size_t i, const Vec& v) {
    assert(v.size() == cols);
    std::copy(v.begin(), v.end(), row(i));
  }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + cols); }
};

// C = A * B
inline Mat matmul(const Mat& A, const Mat& B) {
  assert(A.cols == B.rows);
  Mat C(A.rows, B.cols);
  kernels::gemm_nn(A.rows, A.cols, B.cols, A.data(), B.data(), C.data());
  return C;
}

// C = A * B^T
inline Mat matmul_nt(const Mat& A, const Mat& B) {
  assert(A.cols == B.cols);
  Mat C(A.rows, B.rows);
  kernels::gemm_nt(A.rows, A.cols, B.rows, A.data(), B.data(), C.data());
  return C;
}

// C = A^T * B
inline Mat matmul_tn(const Mat& A, const Mat& B) {
  assert(A.rows == B.rows);
  Mat C(A.cols, B.cols);
  kernels::gemm_tn(A.rows, A.cols, B.cols, A.data(), B.data(), C.data());
  return C;
}

// out = M^T * v  (M rows x cols, v size rows)
Vec matvec_t(const Mat& M, const Vec& v);
// out = M * v  (v size cols)
Vec matvec(const Mat& M, const Vec& v);

double norm2(const double* x, std::size_t n);
inline double norm2(const Vec& v) { return norm2(v.data(), v.size()); }

// Numerically stable in-place softmax (subtracts the max first).
void softmax_inplace(double* x, std::size_t n);
inline void softmax_inplace(Vec& v) { softmax_inplace(v.data(), v.size()); }

double cosine(const Vec& a, const Vec& b);

}  // namespace cool
