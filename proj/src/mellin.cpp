#include "mpzeta/mellin.hpp"
#include "mpzeta/meanper.hpp"
#include "mpzeta/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using boost::math::quadrature::gauss_kronrod;

cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b, double tol) {
    auto re = [&](double t) { return f(t).real(); };
    auto im = [&](double t) { return f(t).imag(); };
    double vr = gauss_kronrod<double, 31>::integrate(re, a, b, 14, tol);
    double vi = gauss_kronrod<double, 31>::integrate(im, a, b, 14, tol);
    return {vr, vi};
}

}  // namespace

ContourSpec ContourSpec::for_spec(const LFunctionSpec& spec, double tol, double max_abs_log_x) {
    ContourSpec c;
    c.abscissa_c = 0.5 * (spec.weight_d + 1.0) + spec.pole_strip_halfwidth_w + 0.55;
    double rate = spec.decay_exp_rate < -1e-9 ? -spec.decay_exp_rate : kPi / 4.0;
    // e^{-rate T} * poly ~ tol, with margin for the polynomial factor
    c.height_T = (std::log(1.0 / tol) + 14.0) / rate;
    double strip = 0.45;  // distance of the line to the nearest pole
    for (cplx p : spec.known_poles) strip = std::min(strip, std::abs(c.abscissa_c - p.real()));
    double h = 2.0 * kPi * strip / (std::log(1.0 / tol) + strip * max_abs_log_x + 8.0);
    c.node_count = static_cast<int>(c.height_T / h) + 1;
    return c;
}

QuadResult inverse_mellin(const std::function<cplx(cplx)>& Z, double x, const ContourSpec& contour,
                          double tol) {
    if (!(x > 0.0)) throw domain_error("inverse_mellin: x > 0 required");
    const double c = contour.abscissa_c;
    const double T = contour.height_T;
    if (contour.rule == ContourSpec::Rule::tanh_sinh) {
        // fallback rule for integrands with slow decay on the line
        boost::math::quadrature::tanh_sinh<double> ts;
        auto fr = [&](double t) {
            cplx w = Z(cplx(c, t)) * std::exp(-cplx(c, t) * std::log(x));
            return w.real();
        };
        double v = ts.integrate(fr, -T, T) / (2.0 * kPi);
        return {v, 1e-12 * std::abs(v)};
    }
    int K = contour.node_count > 0 ? contour.node_count : 400;
    double h = T / K;
    // conjugate symmetry: value = (h/2pi) [Z(c) x^{-c} + 2 sum Re(...)]
    double lx = std::log(x);
    cplx mid = Z(cplx(c, 0.0));
    double acc = 0.5 * mid.real();  // trapezoid end halving folded into sum form
    double edge = 0.0;
    for (int k = 1; k <= K; ++k) {
        double t = k * h;
        cplx val = Z(cplx(c, t)) * std::exp(cplx(0.0, -t * lx));
        acc += (k == K ? 0.5 : 1.0) * val.real();
        if (k == K) edge = std::abs(val);
    }
    double value = std::exp(-c * lx) * h * acc / kPi;
    // truncation estimate: geometric continuation of the edge magnitude
    double tail = std::exp(-c * lx) * edge * h / kPi * 8.0;
    // discretization estimate: compare against the half-density grid
    double acc2 = 0.5 * mid.real();
    for (int k = 2; k <= K; k += 2) {
        double t = k * h;
        cplx val = Z(cplx(c, t)) * std::exp(cplx(0.0, -t * lx));
        acc2 += (k >= K - 1 ? 0.5 : 1.0) * val.real();
    }
    double value2 = std::exp(-c * lx) * (2.0 * h) * acc2 / kPi;
    double err = tail + std::abs(value - value2);
    double scale = std::max(std::abs(value), 1e-30);
    if (tail > tol * scale + 1e-280)
        throw convergence_error("inverse_mellin: contour truncation tail above tolerance");
    return {value, err};
}

ContourCache::ContourCache(const std::function<cplx(cplx)>& Z, const ContourSpec& contour) {
    c_ = contour.abscissa_c;
    int K = contour.node_count > 0 ? contour.node_count : 400;
    h_ = contour.height_T / K;
    nodes_.resize(K + 1);
    for (int k = 0; k <= K; ++k) nodes_[k] = Z(cplx(c_, k * h_));
}

QuadResult ContourCache::f(double x) const {
    double lx = std::log(x);
    int K = static_cast<int>(nodes_.size()) - 1;
    double acc = 0.5 * nodes_[0].real();
    for (int k = 1; k <= K; ++k) {
        cplx val = nodes_[k] * std::exp(cplx(0.0, -k * h_ * lx));
        acc += (k == K ? 0.5 : 1.0) * val.real();
    }
    double value = std::exp(-c_ * lx) * h_ * acc / kPi;
    double edge = std::abs(nodes_[K]) * std::exp(-c_ * lx) * h_ / kPi;
    return {value, edge * 8.0};
}

double kappa_kernel(const GammaFactor& gamma, double x, const ContourSpec& contour) {
    auto Z = [&gamma](cplx s) { return gamma.eval(s); };
    ContourSpec c = contour;
    // gamma factors decay exponentially; keep the line right of all poles
    auto poles = gamma.poles_in(-200.0, c.abscissa_c, 1.0);
    for (auto& [p, m] : poles)
        if (p.real() >= c.abscissa_c - 0.1) c.abscissa_c = p.real() + 0.6;
    return inverse_mellin(Z, x, c).value;
}

cplx half_mellin(const BoundaryTerm& h, cplx s) {
    if (s.real() <= h.growth_exponent + 0.02)
        throw domain_error("half_mellin: Re s at or below the growth envelope of h");
    double margin = s.real() - h.growth_exponent;
    double T = (45.0 + 8.0) / margin;
    auto f = [&](double t) { return h.evaluator(std::exp(-t)) * std::exp(-s * t); };
    return integrate_complex(f, 0.0, T, 1e-11);
}

namespace {

// one-sided convolution pieces used by the Mellin-Carleman ratio:
// x < 1: -(v * h^-), x >= 1: (v * h^+); both tiny where evaluated
double convolve_cut(const Convolutor& v, const BoundaryTerm& h, double x) {
    using boost::math::quadrature::gauss_kronrod;
    if (x >= 1.0) {
        // int_0^1 v(x/y) h(y) dy/y, log substitution y = e^{-w}, w in (0, W)
        double W = 45.0 / std::max(v.env_large_pow - h.growth_exponent, 1.0) + std::log(x) + 8.0;
        auto f = [&](double w) {
            double y = std::exp(-w);
            return v.evaluator(x / y) * h.evaluator(y);
        };
        return gauss_kronrod<double, 31>::integrate(f, 0.0, W, 12, 1e-9);
    }
    // -int_1^inf v(x/y) h(y) dy/y, y = e^{w}
    double W = 45.0 / std::max(v.env_small_pow - h.growth_exponent, 1.0) - std::log(x) + 8.0;
    auto f = [&](double w) {
        double y = std::exp(w);
        return v.evaluator(x / y) * h.evaluator(y);
    };
    return -gauss_kronrod<double, 31>::integrate(f, 0.0, W, 12, 1e-9);
}

}  // namespace

cplx mellin_carleman(const BoundaryTerm& h, const Convolutor& v, cplx s) {
    // certification probe: the convolution must vanish against this h
    double resid = 0.0, scale = 0.0;
    for (double x : {0.4, 1.0, 2.5}) {
        resid = std::max(resid, std::abs(mult_convolve(v, h, x)));
        scale = std::max(scale, mult_convolve_abs(v, h, x));
    }
    if (resid > 1e-3 * scale)
        throw domain_error("mellin_carleman: convolutor not certified against this boundary term");

    // numerator M(v * h^+)(s): rapid decay on both sides of x = 1
    auto num_f = [&](double u) { return std::exp(s * u) * convolve_cut(v, h, std::exp(u)); };
    double up = (45.0 + 6.0) / std::max(v.env_large_pow - h.growth_exponent - std::abs(s.real()), 1.5);
    double dn = (45.0 + 6.0) / std::max(v.env_small_pow - h.growth_exponent - std::abs(s.real()), 1.5);
    cplx num = integrate_complex(num_f, -dn, up, 1e-9);

    // denominator M(v)(s)
    auto den_f = [&](double u) { return std::exp(s * u) * v.evaluator(std::exp(u)); };
    cplx den = integrate_complex(den_f, -dn, up, 1e-11);
    double den_scale = gauss_kronrod<double, 31>::integrate(
        [&](double u) { return std::abs(v.evaluator(std::exp(u))) * std::exp(s.real() * u); }, -dn,
        up, 10, 1e-8);
    if (std::abs(den) < 1e-7 * den_scale)
        throw domain_error("mellin_carleman: M(v)(s) vanishes near this point");
    return num / den;
}

}  // namespace mpzeta
