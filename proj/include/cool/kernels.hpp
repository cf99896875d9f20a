#pragma once
// Low-level f64 array kernels. Every routine has a scalar reference
// implementation plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected once at startup from CPU capabilities. All higher-level math
// in the library goes through this interface, so forcing the scalar
// backend reproduces the reference numerics end to end.

#include <cstddef>
#include <string>

namespace cool::kernels {

enum class Backend { scalar, avx2, neon };

// Best backend supported by the running CPU.
Backend detected_backend();

// Backend currently used by the dispatch table.
Backend active_backend();

const char* backend_name(Backend b);

// Override dispatch (tests use this to compare variants). Throws
// std::runtime_error if the requested backend is not supported here.
void force_backend(Backend b);

// Restore the auto-detected backend.
void reset_backend();

// --- vector ops ------------------------------------------------------
// dot product of a and b
double dot(const double* a, const double* b, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// x *= alpha
void scale(double alpha, double* x, std::size_t n);
// out = a * b elementwise
void hadamard(const double* a, const double* b, double* out, std::size_t n);
// acc = max(acc, p * row) elementwise; the product-&-max inner loop
void mul_max(const double* p, const double* row, double* acc, std::size_t n);
double reduce_max(const double* x, std::size_t n);
double reduce_sum(const double* x, std::size_t n);

// --- row-major GEMM, accumulating into C ------------------------------
// C[m x n] += A[m x k] * B[k x n]
void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C);
// C[m x n] += A[m x k] * B^T, B stored [n x k]
void gemm_nt(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C);
// C[k x n] += A^T * B, A stored [m x k], B stored [m x n]
void gemm_tn(std::size_t m, std::size_t k, std::size_t n,
             const double* A, const double* B, double* C);

}  // namespace cool::kernels
