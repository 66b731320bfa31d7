#include "mpzeta/lfunc.hpp"

#include <cmath>

// Lambda(E,s) = int_R g(e^z) e^{zs} dz with g(u) = sum a_n e^{-2 pi n u / sqrt N},
// taken along Im z = alpha, alpha = sign(Im s) (pi/2 - 9/|Im s|).  The shift
// turns all but e^9 of the gamma-factor decay into an explicit factor, which
// keeps the relative error near 1e-13 throughout the desk-scale window.  On
// the left half of the line the series is summed after the modular transform
// g(w) = omega w^{-2} g(1/w).

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct GaussLegendre32 {
    double x[32];
    double w[32];
    GaussLegendre32() {
        const int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 60; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
                }
                double dp = n * (t * p0 - p1) / (t * t - 1.0);
                double dt = p0 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1.0);
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre32& gl32() {
    static const GaussLegendre32 g;
    return g;
}

}  // namespace

ModularLambda::ModularLambda(const EllipticCurve& curve, double max_height) : curve_(curve) {
    if (curve.conductor < 1) throw config_error("ModularLambda: conductor missing");
    c1_ = 2.0 * kPi / std::sqrt(static_cast<double>(curve.conductor));
    double ca_min = std::sin(9.0 / std::max(max_height, 12.0));
    terms_ = static_cast<int>(50.0 / (c1_ * ca_min)) + 32;
    auto a = ec_an_int(curve, static_cast<std::size_t>(terms_));
    an_.assign(a.begin(), a.end());
}

cplx ModularLambda::g_direct(cplx w) const {
    // sum a_n z^n, z = e^{-c1 w}; forward accumulation with tail exit
    cplx z = std::exp(-c1_ * w);
    double az = std::abs(z);
    double gap = 1.0 - az;
    cplx zp = z;
    cplx acc = 0.0;
    double scale = 0.0;
    for (int n = 1; n <= terms_; ++n) {
        acc += an_[n] * zp;
        scale = std::max(scale, std::abs(acc));
        zp *= z;
        // |a_m| <= m sigma_0(m); geometric tail bound with (1-|z|)^2 margin
        if (std::abs(zp) * (n + 1.0) * 8.0 < 1e-19 * gap * gap * (scale + 1e-280)) break;
    }
    return acc;
}

cplx ModularLambda::line_integrand(double rho, double alpha, cplx s) const {
    cplx z(rho, alpha);
    cplx w = std::exp(z);
    if (rho >= 0.0) return g_direct(w) * std::exp(z * s);
    cplx gw = static_cast<double>(curve_.sign_omega) * g_direct(1.0 / w) / (w * w);
    return gw * std::exp(z * s);
}

cplx ModularLambda::operator()(cplx s) const {
    double tau = s.imag();
    if (std::abs(tau) > 72.0) throw precision_error("ModularLambda: height beyond configured window");
    double alpha = 0.0;
    if (std::abs(tau) >= 3.0) {
        double mag = kPi / 2.0 - 9.0 / std::abs(tau);
        alpha = (tau > 0 ? mag : -mag);
    }
    double ca = std::max(std::cos(alpha), 1e-3);
    double B = std::log(70.0 / (c1_ * ca)) + 2.0;
    double A = -B;
    int npan = std::max(24, static_cast<int>((B - A) * (std::abs(tau) + 8.0) / 14.0));
    const auto& gl = gl32();
    cplx acc = 0.0;
    for (int k = 0; k < npan; ++k) {
        double lo = A + (B - A) * k / npan;
        double hi = A + (B - A) * (k + 1) / npan;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        cplx panel = 0.0;
        for (int i = 0; i < 32; ++i) panel += gl.w[i] * line_integrand(mid + half * gl.x[i], alpha, s);
        acc += half * panel;
    }
    return require_finite(acc, "ModularLambda");
}

ModularLambdaPtr make_lambda_E(const EllipticCurve& curve) {
    return std::make_shared<const ModularLambda>(curve);
}

}  // namespace mpzeta
