#include "cool/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace cool::kernels {

// ---------------------------------------------------------------------
// Scalar reference kernels. These define the semantics; SIMD variants
// must match them within floating-point reassociation error.
// ---------------------------------------------------------------------
namespace scalar_impl {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_max(const double* p, const double* row, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::max(acc[i], p[i] * row[i]);
}

double reduce_max(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double reduce_sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const double a = A[i * k + l];
      const double* brow = B + l * n;
      double* crow = C + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
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
      const double a = arow[i];
      double* crow = C + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

}  // namespace scalar_impl

// SIMD variants live in kernels_avx2.cpp / kernels_neon.cpp.
#if defined(__x86_64__)
namespace avx2_impl {
bool supported();
double dot(const double*, const double*, std::size_t);
void axpy(double, const double*, double*, std::size_t);
void scale(double, double*, std::size_t);
void hadamard(const double*, const double*, double*, std::size_t);
void mul_max(const double*, const double*, double*, std::size_t);
double reduce_max(const double*, std::size_t);
double reduce_sum(const double*, std::size_t);
void gemm_nn(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
void gemm_nt(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
void gemm_tn(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
}  // namespace avx2_impl
#endif

#if defined(__aarch64__)
namespace neon_impl {
double dot(const double*, const double*, std::size_t);
void axpy(double, const double*, double*, std::size_t);
void scale(double, double*, std::size_t);
void hadamard(const double*, const double*, double*, std::size_t);
void mul_max(const double*, const double*, double*, std::size_t);
double reduce_max(const double*, std::size_t);
double reduce_sum(const double*, std::size_t);
void gemm_nn(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
void gemm_nt(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
void gemm_tn(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
}  // namespace neon_impl
#endif

namespace {

struct DispatchTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  void (*hadamard)(const double*, const double*, double*, std::size_t);
  void (*mul_max)(const double*, const double*, double*, std::size_t);
  double (*reduce_max)(const double*, std::size_t);
  double (*reduce_sum)(const double*, std::size_t);
  void (*gemm_nn)(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
  void (*gemm_nt)(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
  void (*gemm_tn)(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
};

constexpr DispatchTable kScalarTable = {
    scalar_impl::dot,        scalar_impl::axpy,       scalar_impl::scale,
    scalar_impl::hadamard,   scalar_impl::mul_max,    scalar_impl::reduce_max,
    scalar_impl::reduce_sum, scalar_impl::gemm_nn,    scalar_impl::gemm_nt,
    scalar_impl::gemm_tn};

#if defined(__x86_64__)
constexpr DispatchTable kAvx2Table = {
    avx2_impl::dot,        avx2_impl::axpy,       avx2_impl::scale,
    avx2_impl::hadamard,   avx2_impl::mul_max,    avx2_impl::reduce_max,
    avx2_impl::reduce_sum, avx2_impl::gemm_nn,    avx2_impl::gemm_nt,
    avx2_impl::gemm_tn};
#endif

#if defined(__aarch64__)
constexpr DispatchTable kNeonTable = {
    neon_impl::dot,        neon_impl::axpy,       neon_impl::scale,
    neon_impl::hadamard,   neon_impl::mul_max,    neon_impl::reduce_max,
    neon_impl::reduce_sum, neon_impl::gemm_nn,    neon_impl::gemm_nt,
    neon_impl::gemm_tn};
#endif

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__)
      return avx2_impl::supported();
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const DispatchTable& table_for(Backend b) {
  switch (b) {
#if defined(__x86_64__)
    case Backend::avx2:
      return kAvx2Table;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      return kNeonTable;
#endif
    default:
      return kScalarTable;
  }
}

Backend g_active = []() {
#if defined(__x86_64__)
  if (avx2_impl::supported()) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}();

const DispatchTable* g_table = &table_for(g_active);

}  // namespace

Backend detected_backend() {
#if defined(__x86_64__)
  if (avx2_impl::supported()) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Backend active_backend() { return g_active; }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::runtime_error(std::string("kernel backend not supported on this CPU: ") +
                             backend_name(b));
  }
  g_active = b;
  g_table = &table_for(b);
}

void reset_backend() { force_backend(detected_backend()); }

double dot(const double* a, const double* b, std::size_t n) { return g_table->dot(a, b, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { g_table->axpy(alpha, x, y, n); }
void scale(double alpha, double* x, std::size_t n) { g_table->scale(alpha, x, n); }
void hadamard(const double* a, const double* b, double* out, std::size_t n) {
  g_table->hadamard(a, b, out, n);
}
void mul_max(const double* p, const double* row, double* acc, std::size_t n) {
  g_table->mul_max(p, row, acc, n);
}
double reduce_max(const double* x, std::size_t n) { return g_table->reduce_max(x, n); }
double reduce_sum(const double* x, std::size_t n) { return g_table->reduce_sum(x, n); }
void gemm_nn(std::size_t m, std::size_t k, std::size_t n, const double* A, const double* B,
             double* C) {
  g_table->gemm_nn(m, k, n, A, B, C);
}
void gemm_nt(std::size_t m, std::size_t k, std::size_t n, const double* A, const double* B,
             double* C) {
  g_table->gemm_nt(m, k, n, A, B, C);
}
void gemm_tn(std::size_t m, std::size_t k, std::size_t n, const double* A, const double* B,
             double* C) {
  g_table->gemm_tn(m, k, n, A, B, C);
}

}  // namespace cool::kernels
