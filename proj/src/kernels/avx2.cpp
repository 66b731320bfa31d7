#include "mpzeta/kernels.hpp"
#include "mpzeta/detail/besselk_tables.hpp"
#include "mpzeta/specfun.hpp"

#include <immintrin.h>

#include <cmath>

// AVX2+FMA variants.  exp is the classical Cephes rational reduction
// (2-3 ulp); K0/K1 use the same Chebyshev tables as the scalar code, with
// the x < 2 lanes peeled off to the scalar series (they are rare in the
// series workloads: arguments grow linearly with the term index).

namespace mpzeta::kernels::avx2 {

bool supported() {
#if defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d lo = _mm256_set1_pd(-708.0);
    const __m256d hi = _mm256_set1_pd(709.0);

    __m256d xin = x;
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, c1, x);
    r = _mm256_fnmadd_pd(n, c2, r);
    __m256d r2 = _mm256_mul_pd(r, r);

    __m256d px = _mm256_fmadd_pd(p0, r2, p1);
    px = _mm256_fmadd_pd(px, r2, p2);
    px = _mm256_mul_pd(px, r);
    __m256d qx = _mm256_fmadd_pd(q0, r2, q1);
    qx = _mm256_fmadd_pd(qx, r2, q2);
    qx = _mm256_fmadd_pd(qx, r2, q3);

    __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, one);

    // scale by 2^n via the exponent bits
    __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i nl = _mm256_cvtepi32_epi64(ni);
    __m256i pow2 = _mm256_slli_epi64(_mm256_add_epi64(nl, _mm256_set1_epi64x(1023)), 52);
    e = _mm256_mul_pd(e, _mm256_castsi256_pd(pow2));

    // flush hard underflow to exactly 0
    __m256d under = _mm256_cmp_pd(xin, lo, _CMP_LT_OQ);
    return _mm256_andnot_pd(under, e);
}

inline __m256d clenshaw_pd(const double* c, int n, __m256d v) {
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (int j = n - 1; j >= 1; --j) {
        __m256d b0 = _mm256_fmadd_pd(_mm256_mul_pd(two, v), b1,
                                     _mm256_sub_pd(_mm256_set1_pd(c[j]), b2));
        b2 = b1;
        b1 = b0;
    }
    return _mm256_fmadd_pd(v, b1, _mm256_sub_pd(_mm256_set1_pd(0.5 * c[0]), b2));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

template <const double* Table, double ScalarFn(double)>
double dot_besselk(const double* w, const double* x, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d acc = _mm256_setzero_pd();
    double acc_s = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        int small = _mm256_movemask_pd(_mm256_cmp_pd(xv, two, _CMP_LT_OQ));
        if (small) {
            for (int k = 0; k < 4; ++k) acc_s += w[i + k] * ScalarFn(x[i + k]);
            continue;
        }
        __m256d v = _mm256_fmsub_pd(four, _mm256_div_pd(one, xv), one);  // 4/x - 1
        __m256d ch = clenshaw_pd(Table, specfun::detail::kBesselChebN, v);
        __m256d ex = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), xv));
        __m256d val = _mm256_div_pd(_mm256_mul_pd(ch, ex), _mm256_sqrt_pd(xv));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), val, acc);
    }
    for (; i < n; ++i) acc_s += w[i] * ScalarFn(x[i]);
    return hsum(acc) + acc_s;
}

double k0_ref(double x) { return specfun::bessel_k0(x); }
double k1_ref(double x) { return specfun::detail::bessel_k1(x); }

}  // namespace

double dot_exp(const double* w, const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), exp_pd(_mm256_loadu_pd(x + i)), acc);
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += w[i] * std::exp(x[i]);
    return hsum(acc) + tail;
}

double dot_k0(const double* w, const double* x, std::size_t n) {
    return dot_besselk<specfun::detail::kK0ChebLarge, k0_ref>(w, x, n);
}

double dot_k1(const double* w, const double* x, std::size_t n) {
    return dot_besselk<specfun::detail::kK1ChebLarge, k1_ref>(w, x, n);
}

}  // namespace mpzeta::kernels::avx2
