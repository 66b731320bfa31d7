#pragma once

#include "mpzeta/types.hpp"

#include <cstdint>

namespace mpzeta {

// Riemann zeta by Euler-Maclaurin; reflection below Re s = -5.
// Relative error ~1e-13 for |Im s| <= 110.  Throws domain_error at s = 1.
cplx riemann_zeta(cplx s);

// zeta'(s), analytic differentiation of the Euler-Maclaurin formula
// (valid on the EM window Re s > -6).
cplx riemann_zeta_deriv(cplx s);

// Hurwitz zeta(s, a) for a in (0, 1], same Euler-Maclaurin scheme.
cplx hurwitz_zeta(cplx s, double a);

// Kronecker symbol (d|n), d any integer, n >= 1.
int kronecker_symbol(long long d, long long n);

// L(s, chi_d) for the Kronecker character mod |d|; d = 1 gives zeta.
cplx dirichlet_l_kronecker(cplx s, long long d);

// completed Lambda_Q(s) = Gamma_R(s) zeta(s) and its s-derivative
cplx lambda_q(cplx s);

}  // namespace mpzeta
