#include "cool/mat.hpp"

#include <cmath>
#include <stdexcept>

namespace cool {

Vec matvec(const Mat& M, const Vec& v) {
  assert(v.size() == M.cols);
  Vec out(M.rows, 0.0);
  for (std::size_t i = 0; i < M.rows; ++i) out[i] = kernels::dot(M.row(i), v.data(), M.cols);
  return out;
}

Vec matvec_t(const Mat& M, const Vec& v) {
  assert(v.size() == M.rows);
  Vec out(M.cols, 0.0);
  for (std::size_t i = 0; i < M.rows; ++i) kernels::axpy(v[i], M.row(i), out.data(), M.cols);
  return out;
}

double norm2(const double* x, std::size_t n) { return std::sqrt(kernels::dot(x, x, n)); }

void softmax_inplace(double* x, std::size_t n) {
  if (n == 0) return;
  const double m = kernels::reduce_max(x, n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(x[i] - m);
  const double s = kernels::reduce_sum(x, n);
  kernels::scale(1.0 / s, x, n);
}

double cosine(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: size mismatch");
  const double na = norm2(a);
  const double nb = norm2(b);
  if (na < 1e-300 || nb < 1e-300) throw std::domain_error("cosine: zero-norm vector");
  return kernels::dot(a.data(), b.data(), a.size()) / (na * nb);
}

}  // namespace cool
