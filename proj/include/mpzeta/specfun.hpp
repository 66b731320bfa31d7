#pragma once

#include "mpzeta/types.hpp"

namespace mpzeta::specfun {

// Principal branch of log Gamma.  Stirling with Bernoulli tail after an
// argument shift, reflection for Re z < 1/2.  exp(log_gamma) is good to
// ~1e-14 relative for |z| <= 100.  Throws domain_error at the poles.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2),  Gamma_C(s) = (2pi)^{-s} Gamma(s).
cplx gamma_r(cplx s);
cplx gamma_c(cplx s);
cplx log_gamma_r(cplx s);
cplx log_gamma_c(cplx s);

// Upper incomplete gamma Gamma(s, x) for complex s, real x > 0.  Entire in
// s.  Series branch for x <= 20, Lentz continued fraction otherwise; meant
// for |Im s| up to ~25 (the smoothed-series window).
cplx gamma_upper(cplx s, double x);

struct K0Result {
    double value;
    bool underflowed;  // true: x beyond ~705, value is an exact 0
};

// Modified Bessel K0.  Power/log series below x=2, Chebyshev-of-1/x
// exponential form above; relative error ~1e-15 on [1e-6, 700].
// Throws domain_error for x <= 0.
double bessel_k0(double x);
K0Result bessel_k0_checked(double x);

namespace detail {
// K1 supports the analytic t-derivatives of the K0 series in analytics;
// not part of the public surface contract.
double bessel_k1(double x);
// Scaled forms e^x sqrt(x) K_nu(x) for x >= 2 (used by the SIMD kernels).
double k0_scaled_large(double x);
double k1_scaled_large(double x);
}  // namespace detail

}  // namespace mpzeta::specfun
