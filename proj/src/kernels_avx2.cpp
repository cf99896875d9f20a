// AVX2/FMA kernel variants, 4 doubles per vector. Compiled with per-function
// target attributes so the translation unit builds on any x86-64 baseline;
// callers must check supported() before dispatching here.

#if defined(__x86_64__)

#include <immintrin.h>

#include <algorithm>
#include <cstddef>

#define COOL_AVX2 __attribute__((target("avx2,fma")))

namespace cool::kernels::avx2_impl {

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

COOL_AVX2 static inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

COOL_AVX2 double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

COOL_AVX2 void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

COOL_AVX2 void scale(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

COOL_AVX2 void hadamard(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

COOL_AVX2 void mul_max(const double* p, const double* row, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(p + i), _mm256_loadu_pd(row + i));
    _mm256_storeu_pd(acc + i, _mm256_max_pd(_mm256_loadu_pd(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] = std::max(acc[i], p[i] * row[i]);
}

COOL_AVX2 double reduce_max(const double* x, std::size_t n) {
  double m = x[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vm = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
    __m128d lo = _mm256_castpd256_pd128(vm);
    __m128d hi = _mm256_extractf128_pd(vm, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    m = _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
  }
  for (; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

COOL_AVX2 double reduce_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

COOL_AVX2 void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
                       const double* A, const double* B, double* C) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = C + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const __m256d va = _mm256_set1_pd(A[i * k + l]);
      const double* brow = B + l * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d vc = _mm256_loadu_pd(crow + j);
        vc = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j), vc);
        _mm256_storeu_pd(crow + j, vc);
      }
      const double a = A[i * k + l];
      for (; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

COOL_AVX2 void gemm_nt(std::size_t m, std::size_t k, std::size_t n,
                       const double* A, const double* B, double* C) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      C[i * n + j] += dot(A + i * k, B + j * k, k);
    }
  }
}

COOL_AVX2 void gemm_tn(std::size_t m, std::size_t k, std::size_t n,
                       const double* A, const double* B, double* C) {
  for (std::size_t l = 0; l < m; ++l) {
    const double* arow = A + l * k;
    const double* brow = B + l * n;
    for (std::size_t i = 0; i < k; ++i) {
      const __m256d va = _mm256_set1_pd(arow[i]);
      double* crow = C + i * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d vc = _mm256_loadu_pd(crow + j);
        vc = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j), vc);
        _mm256_storeu_pd(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += arow[i] * brow[j];
    }
  }
}

}  // namespace cool::kernels::avx2_impl

#endif  // __x86_64__
