#include "mpzeta/zeta.hpp"
#include "mpzeta/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// B_{2k} for k = 1..12
constexpr double kBern2k[] = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
    -236364091.0 / 2730,
};

constexpr double kFact2k[] = {
    2.0, 24.0, 720.0, 40320.0, 3628800.0, 479001600.0, 87178291200.0,
    20922789888000.0, 6402373705728000.0, 2432902008176640000.0,
    1.1240007277776077e21, 6.2044840173323944e23,
};

// (e^u - 1)/u, stable at u = 0
cplx em1_over_u(cplx u) {
    if (std::abs(u) > 0.5) return (std::exp(u) - 1.0) / u;
    cplx acc = 1.0, term = 1.0;
    for (int k = 2; k <= 18; ++k) {
        term *= u / static_cast<double>(k);
        acc += term;
        if (std::abs(term) < 1e-18) break;
    }
    return acc;
}

struct EmResult {
    cplx value;
    cplx deriv;
};

// Euler-Maclaurin for zeta(s, a) = sum_{n>=0} (n+a)^{-s}, a in (0,1].
// With subtract_pole the returned value excludes the 1/(s-1) term and is
// analytic at s = 1 (used by character sums where the poles cancel).
EmResult hurwitz_em(cplx s, double a, bool want_deriv, bool subtract_pole = false) {
    if (!subtract_pole && std::abs(s - 1.0) < 1e-13) throw domain_error("zeta: pole at s = 1");
    const int N = std::max<int>(18, static_cast<int>(1.3 * std::abs(s.imag())) + 8);
    const int K = 12;
    cplx v = 0.0, dv = 0.0;
    for (int n = 0; n < N; ++n) {
        double ln = std::log(n + a);
        cplx t = std::exp(-s * ln);
        v += t;
        if (want_deriv) dv += -ln * t;
    }
    double Na = N + a;
    double lN = std::log(Na);
    cplx NmS = std::exp(-s * lN);  // (N+a)^{-s}
    if (subtract_pole) {
        // (N+a)^{1-s}/(s-1) - 1/(s-1) = -log(N+a) * (e^u - 1)/u,  u = (1-s)log(N+a)
        v += -lN * em1_over_u((1.0 - s) * lN);
    } else {
        cplx tail = NmS * Na / (s - 1.0);
        v += tail;
        if (want_deriv) dv += tail * (-lN - 1.0 / (s - 1.0));
    }
    v -= 0.5 * NmS;
    if (want_deriv) dv -= 0.5 * (-lN) * NmS;
    cplx poch = s;     // (s)_{2k-1}
    cplx dpoch = 1.0;  // its s-derivative
    double Npow = Na;  // (N+a)^{2k-1}
    for (int k = 1; k <= K; ++k) {
        double c = kBern2k[k - 1] / kFact2k[k - 1];
        v += c * poch * NmS / Npow;
        if (want_deriv) dv += c * (dpoch - poch * lN) * NmS / Npow;
        cplx f1 = s + static_cast<double>(2 * k - 1);
        cplx f2 = s + static_cast<double>(2 * k);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        Npow *= Na * Na;
    }
    return {v, dv};
}

// log sin(pi z), analytically continued (principal on (0,1))
cplx log_sin_pi(cplx z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    cplx q = std::exp(cplx(0.0, 2.0 * kPi) * z);
    return cplx(-std::log(2.0), kPi / 2.0) - cplx(0.0, kPi) * z + std::log(1.0 - q);
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw domain_error("hurwitz_zeta: a must be in (0,1]");
    return require_finite(hurwitz_em(s, a, false).value, "hurwitz_zeta");
}

cplx riemann_zeta(cplx s) {
    if (s.real() >= -5.0) return require_finite(hurwitz_em(s, 1.0, false).value, "riemann_zeta");
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    cplx one_minus = 1.0 - s;
    cplx z = hurwitz_em(one_minus, 1.0, false).value;
    cplx log_pref = s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                    specfun::log_gamma(one_minus) + log_sin_pi(0.5 * s);
    return require_finite(std::exp(log_pref) * z, "riemann_zeta");
}

cplx riemann_zeta_deriv(cplx s) {
    if (s.real() < -6.0) throw domain_error("riemann_zeta_deriv: outside Euler-Maclaurin window");
    return require_finite(hurwitz_em(s, 1.0, true).deriv, "riemann_zeta_deriv");
}

int kronecker_symbol(long long d, long long n) {
    if (n <= 0) throw domain_error("kronecker_symbol: n must be positive");
    int sign = 1;
    long long m = n;
    while (m % 2 == 0) {
        m /= 2;
        long long dm = ((d % 8) + 8) % 8;
        if (dm % 2 == 0) return 0;
        if (dm == 3 || dm == 5) sign = -sign;
    }
    if (m == 1) return sign;
    long long a = ((d % m) + m) % m;
    long long b = m;
    int j = sign;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = b % 8;
            if (r == 3 || r == 5) j = -j;
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) j = -j;
        a %= b;
    }
    return b == 1 ? j : 0;
}

cplx dirichlet_l_kronecker(cplx s, long long d) {
    if (d == 1) return riemann_zeta(s);
    long long q = std::llabs(d);
    cplx acc = 0.0;
    // the 1/(s-1) poles of the Hurwitz pieces cancel (sum of chi over a
    // period is 0), so the pole-subtracted form is exact for all s
    for (long long a = 1; a <= q; ++a) {
        int chi = kronecker_symbol(d, a);
        if (chi == 0) continue;
        acc += static_cast<double>(chi) *
               hurwitz_em(s, static_cast<double>(a) / q, false, true).value;
    }
    cplx qs = std::exp(-s * std::log(static_cast<double>(q)));
    return require_finite(qs * acc, "dirichlet_l_kronecker");
}

cplx lambda_q(cplx s) { return specfun::gamma_r(s) * riemann_zeta(s); }

}  // namespace mpzeta
