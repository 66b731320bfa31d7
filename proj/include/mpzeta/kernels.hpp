#pragma once

#include <cstddef>

// Data-parallel inner loops behind the boundary-term series: weighted sums
// of exp and of K0/K1 over an array of arguments.  A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime when
// the CPU supports it.  Both variants implement the same algorithms with the
// same coefficient tables and are equivalence-tested against each other.

namespace mpzeta::kernels {

// sum_i w[i] * exp(x[i])
double dot_exp(const double* w, const double* x, std::size_t n);
// sum_i w[i] * K0(x[i]),  all x[i] > 0
double dot_k0(const double* w, const double* x, std::size_t n);
// sum_i w[i] * K1(x[i]),  all x[i] > 0
double dot_k1(const double* w, const double* x, std::size_t n);

// "avx2" or "scalar"
const char* active_backend();
// Force a backend by name ("scalar", "avx2"); nullptr re-runs detection.
// Returns false if the requested backend is unavailable.  Test hook.
bool force_backend(const char* name);

namespace scalar {
double dot_exp(const double* w, const double* x, std::size_t n);
double dot_k0(const double* w, const double* x, std::size_t n);
double dot_k1(const double* w, const double* x, std::size_t n);
}  // namespace scalar

#if defined(MPZETA_HAVE_AVX2_TU)
namespace avx2 {
bool supported();
double dot_exp(const double* w, const double* x, std::size_t n);
double dot_k0(const double* w, const double* x, std::size_t n);
double dot_k1(const double* w, const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace mpzeta::kernels
