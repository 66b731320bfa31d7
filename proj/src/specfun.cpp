#include "mpzeta/specfun.hpp"
#include "mpzeta/detail/besselk_tables.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace mpzeta::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2Pi = 1.837877066409345483560659472811235279;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr double kStirlingCoeff[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400,
    43867.0 / 244188, -174611.0 / 125400,
};

bool near_nonpositive_integer(cplx z, double dist) {
    if (z.real() > 0.5 * dist) return false;
    double r = std::round(z.real());
    if (r > 0.5) return false;
    return std::abs(z - cplx(r, 0.0)) < dist;
}

// Stirling series, valid for |w| >= 16, Re w > 0.
cplx stirling_log_gamma(cplx w) {
    cplx lw = std::log(w);
    cplx acc = (w - 0.5) * lw - w + 0.5 * kLog2Pi;
    cplx w2 = w * w;
    cplx p = 1.0 / w;
    for (double c : kStirlingCoeff) {
        acc += c * p;
        p /= w2;
    }
    return acc;
}

cplx log_gamma_upper_half(cplx z) {
    // Re z >= 0.5, Im z >= 0
    cplx shift(0.0, 0.0);
    cplx w = z;
    while (std::abs(w) < 16.0) {
        shift += std::log(w);  // principal; valid stepwise for Re w > 0
        w += 1.0;
    }
    return stirling_log_gamma(w) - shift;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z, 1e-13)) throw domain_error("log_gamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) return require_finite(log_gamma_upper_half(z), "log_gamma");
    // Reflection with the analytically continued log sin:
    //   log sin(pi z) = i pi/2 - log 2 - i pi z + log(1 - e^{2 pi i z})   (Im z >= 0)
    cplx q = std::exp(cplx(0.0, 2.0 * kPi) * z);
    cplx log_sin = cplx(-std::log(2.0), kPi / 2.0) - cplx(0.0, kPi) * z + std::log(1.0 - q);
    return require_finite(std::log(kPi) - log_sin - log_gamma_upper_half(1.0 - z), "log_gamma");
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx log_gamma_r(cplx s) { return -0.5 * s * std::log(kPi) + log_gamma(0.5 * s); }

cplx log_gamma_c(cplx s) { return -s * std::log(2.0 * kPi) + log_gamma(s); }

cplx gamma_r(cplx s) { return std::exp(log_gamma_r(s)); }

cplx gamma_c(cplx s) { return std::exp(log_gamma_c(s)); }

namespace {

// Lentz continued fraction for Gamma(s,x); good when x dominates |s|.
cplx upper_gamma_cf(cplx s, double x) {
    const double tiny = 1e-290;
    cplx b = x + 1.0 - s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= 400; ++i) {
        cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

// gamma(s,x) by the lower series; requires Re s >= 1 so no pole is hit.
cplx lower_gamma_series(cplx s, double x) {
    cplx term = 1.0 / s;
    cplx sum = term;
    for (int k = 1; k < 600; ++k) {
        term *= x / (s + static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(-x + s * std::log(x)) * sum;
}

cplx upper_gamma_quad(cplx s, double x) {
    // direct integral over [x, x+70]; only used near the Gamma poles where
    // the series/Gamma(s) split cancels
    using boost::math::quadrature::gauss_kronrod;
    auto re = [&](double t) { return std::real(std::exp((s - 1.0) * std::log(t) - t)); };
    auto im = [&](double t) { return std::imag(std::exp((s - 1.0) * std::log(t) - t)); };
    double hi = x + 70.0;
    double vr = gauss_kronrod<double, 31>::integrate(re, x, hi, 12, 1e-14);
    double vi = gauss_kronrod<double, 31>::integrate(im, x, hi, 12, 1e-14);
    return {vr, vi};
}

}  // namespace

cplx gamma_upper(cplx s, double x) {
    if (!(x > 0.0)) throw domain_error("gamma_upper: requires x > 0");
    double abs_im = std::abs(s.imag());
    if (x >= std::min(30.0, kPi * abs_im / 2.0 + 7.0)) return require_finite(upper_gamma_cf(s, x), "gamma_upper");
    if (near_nonpositive_integer(s, 0.25)) return require_finite(upper_gamma_quad(s, x), "gamma_upper");
    // lift s into Re >= 1, run the series there, then recurse back down with
    // Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s
    int j = 0;
    while (s.real() + j < 1.0) ++j;
    cplx sj = s + static_cast<double>(j);
    cplx g = std::exp(log_gamma(sj)) - lower_gamma_series(sj, x);
    for (int i = j - 1; i >= 0; --i) {
        cplx si = s + static_cast<double>(i);
        g = (g - std::exp(-x + si * std::log(x))) / si;
    }
    return require_finite(g, "gamma_upper");
}

namespace {

double clenshaw(const double* c, int n, double v) {
    double b1 = 0.0, b2 = 0.0;
    for (int j = n - 1; j >= 1; --j) {
        double b0 = 2.0 * v * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return v * b1 - b2 + 0.5 * c[0];
}

// K0, K1 power series for x < 2 (classical log-coupled form)
double k0_small(double x) {
    double q = 0.25 * x * x;
    double lg = -std::log(0.5 * x) - kEulerGamma;
    double term = 1.0, hk = 0.0;
    double i0 = 1.0, sum = 0.0;
    for (int k = 1; k <= 24; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        sum += term * hk;
        if (term < 1e-18) break;
    }
    return lg * i0 + sum;
}

double k1_small(double x) {
    // K1(x) = 1/x + log(x/2) I1(x) - (x/4) sum_k (q^k/(k!(k+1)!)) (H_k + H_{k+1})
    double q = 0.25 * x * x;
    double lg = std::log(0.5 * x) + kEulerGamma;
    double i1 = 1.0;        // I1(x)/(x/2) accumulation
    double term = 1.0;      // q^k / (k!(k+1)!)
    double sum = 1.0;       // (H_k + H_{k+1} - 2gamma-free part): start k=0: H_0+H_1 = 1
    double hk = 0.0, hk1 = 1.0;
    for (int k = 1; k <= 24; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        i1 += term;
        sum += term * (hk + hk1);
        if (term < 1e-18) break;
    }
    double i1v = 0.5 * x * i1;
    return 1.0 / x + (lg - kEulerGamma) * i1v - 0.25 * x * sum;
}

}  // namespace

namespace detail {

double k0_scaled_large(double x) {
    return clenshaw(kK0ChebLarge, kBesselChebN, 4.0 / x - 1.0);
}

double k1_scaled_large(double x) {
    return clenshaw(kK1ChebLarge, kBesselChebN, 4.0 / x - 1.0);
}

double bessel_k1(double x) {
    if (!(x > 0.0)) throw domain_error("bessel_k1: requires x > 0");
    if (x < 2.0) return k1_small(x);
    if (x > 705.0) return 0.0;
    return k1_scaled_large(x) * std::exp(-x) / std::sqrt(x);
}

}  // namespace detail

K0Result bessel_k0_checked(double x) {
    if (!(x > 0.0)) throw domain_error("bessel_k0: requires x > 0");
    if (x > 705.0) return {0.0, true};
    if (x < 2.0) return {k0_small(x), false};
    return {detail::k0_scaled_large(x) * std::exp(-x) / std::sqrt(x), false};
}

double bessel_k0(double x) { return bessel_k0_checked(x).value; }

}  // namespace mpzeta::specfun
