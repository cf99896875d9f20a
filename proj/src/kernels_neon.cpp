// NEON kernel variants, 2 doubles per vector. NEON is baseline on aarch64
// so no runtime feature check is needed beyond the architecture itself.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cstddef>

namespace cool::kernels::neon_impl {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_max(const double* p, const double* row, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t prod = vmulq_f64(vld1q_f64(p + i), vld1q_f64(row + i));
    vst1q_f64(acc + i, vmaxq_f64(vld1q_f64(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] = std::max(acc[i], p[i] * row[i]);
}

double reduce_max(const double* x, std::size_t n) {
  double m = x[0];
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t vm = vld1q_f64(x);
    for (i = 2; i + 2 <= n; i += 2) vm = vmaxq_f64(vm, vld1q_f64(x + i));
    m = vmaxvq_f64(vm);
  }
  for (; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double reduce_sum(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = C + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double a = A[i * k + l];
      const float64x2_t va = vdupq_n_f64(a);
      const double* brow = B + l * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        float64x2_t vc = vld1q_f64(crow + j);
        vc = vfmaq_f64(vc, va, vld1q_f64(brow + j));
        vst1q_f64(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

void gemm_nt(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      C[i * n + j] += dot(A + i * k, B + j * k, k);
    }
  }
}

void gemm_tn(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C) {
  for (std::size_t l = 0; l < m; ++l) {
    const double* arow = A + l * k;
    const double* brow = B + l * n;
    for (std::size_t i = 0; i < k; ++i) {
      const float64x2_t va = vdupq_n_f64(arow[i]);
      double* crow = C + i * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        float64x2_t vc = vld1q_f64(crow + j);
        vc = vfmaq_f64(vc, va, vld1q_f64(brow + j));
        vst1q_f64(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += arow[i] * brow[j];
    }
  }
}

}  // namespace cool::kernels::neon_impl

#endif  // __aarch64__
