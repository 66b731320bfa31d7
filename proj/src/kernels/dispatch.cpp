#include "mpzeta/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mpzeta::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);

struct Backend {
    const char* name;
    DotFn dexp;
    DotFn dk0;
    DotFn dk1;
};

constexpr Backend kScalar{"scalar", &scalar::dot_exp, &scalar::dot_k0, &scalar::dot_k1};

#if defined(MPZETA_HAVE_AVX2_TU)
constexpr Backend kAvx2{"avx2", &avx2::dot_exp, &avx2::dot_k0, &avx2::dot_k1};
#endif

const Backend* detect() {
    const char* env = std::getenv("MPZETA_KERNELS");
#if defined(MPZETA_HAVE_AVX2_TU)
    if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
    if (avx2::supported()) return &kAvx2;
#else
    (void)env;
#endif
    return &kScalar;
}

const Backend* g_active = nullptr;

const Backend* active() {
    if (!g_active) g_active = detect();
    return g_active;
}

}  // namespace

double dot_exp(const double* w, const double* x, std::size_t n) { return active()->dexp(w, x, n); }
double dot_k0(const double* w, const double* x, std::size_t n) { return active()->dk0(w, x, n); }
double dot_k1(const double* w, const double* x, std::size_t n) { return active()->dk1(w, x, n); }

const char* active_backend() { return active()->name; }

bool force_backend(const char* name) {
    if (!name) {
        g_active = detect();
        return true;
    }
    if (std::strcmp(name, "scalar") == 0) {
        g_active = &kScalar;
        return true;
    }
#if defined(MPZETA_HAVE_AVX2_TU)
    if (std::strcmp(name, "avx2") == 0 && avx2::supported()) {
        g_active = &kAvx2;
        return true;
    }
#endif
    return false;
}

}  // namespace mpzeta::kernels
