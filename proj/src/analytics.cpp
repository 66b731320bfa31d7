#include "mpzeta/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace mpzeta {

SignScanReport single_sign_scan(const std::function<double(double)>& f, double t_lo, double t_hi,
                                double step) {
    if (!(t_hi > t_lo) || !(step > 0.0)) throw domain_error("single_sign_scan: bad range");
    SignScanReport rep;
    rep.t_lo = t_lo;
    rep.t_hi = t_hi;
    rep.grid_step = step;
    double prev = f(t_lo);
    for (double t = t_lo + step; t <= t_hi + 1e-12; t += step) {
        double cur = f(std::min(t, t_hi));
        if (prev * cur < 0.0) {
            // tighten the bracket by bisection
            double lo = t - step, hi = std::min(t, t_hi), flo = prev;
            for (int it = 0; it < 40; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            rep.sign_changes.emplace_back(lo, hi);
        }
        prev = cur;
    }
    if (rep.sign_changes.empty()) rep.constant_sign_from = t_lo;
    return rep;
}

SignScanReport single_sign_scan(const EllipticCurve& curve, int derivative_order, double t_lo,
                                double t_hi, double step, int series) {
    if (derivative_order < 0 || derivative_order > 6)
        throw domain_error("single_sign_scan: derivative order 0..6");
    SignScanReport rep;
    if (series == 0) {
        ThetaBoundaryE theta(curve);
        rep = single_sign_scan(
            [&theta, derivative_order](double t) { return theta.deriv(t, derivative_order); }, t_lo,
            t_hi, step);
    } else {
        BesselBoundaryE2 h2(curve);
        rep = single_sign_scan(
            [&h2, derivative_order](double t) { return h2.deriv(t, derivative_order); }, t_lo, t_hi,
            step);
    }
    rep.derivative_order = derivative_order;
    return rep;
}

DecomposeResult decompose_h2(const EllipticCurve& curve, const ZeroList& zeros, double t,
                             double height_cutoff) {
    if (zeros.ordinates.empty() && height_cutoff > 0.5)
        throw domain_error("decompose_h2: spectral ledger requested but no zeros supplied");
    LFunctionSpec z2 = build_Z_E_squared(curve);
    std::vector<std::pair<cplx, int>> analytic = {{cplx(0.0, 0.0), 4}, {cplx(1.0, 0.0), 4}};
    auto led_01 = residue_ledger(z2.evaluator, analytic, 1e-2, 64);
    std::vector<std::pair<cplx, int>> middle = {{cplx(0.5, 0.0), 2}};
    for (double g : zeros.ordinates) {
        if (g / 2.0 > height_cutoff) break;
        middle.emplace_back(cplx(0.5, g / 2.0), 2);
        middle.emplace_back(cplx(0.5, -g / 2.0), 2);
    }
    auto led_mid = residue_ledger(z2.evaluator, middle, 8e-3, 64);

    DecomposeResult res;
    double x = std::exp(-t);
    double leak0 = 0.0, leak1 = 0.0;
    std::vector<PoleDatum> l0, l1;
    for (const auto& p : led_01)
        (std::abs(p.location) < 0.25 ? l0 : l1).push_back(p);
    res.h00 = pole_expansion(l0, x, 1.0, &leak0);
    res.h01 = pole_expansion(l1, x, 1.0, &leak1);
    double leak_mid = 0.0;
    res.h1 = pole_expansion(led_mid, x, height_cutoff + 1.0, &leak_mid);
    res.imag_leak = std::max({leak0, leak1, leak_mid});
    res.sum = res.h00 + res.h01 + res.h1;
    BesselBoundaryE2 ref(curve, BesselBoundaryE2::Convention::squared);
    res.reference = ref.eval(t);
    res.spectral_residual = std::abs(res.sum - res.reference);
    return res;
}

OrdinateReport good_ordinates(const std::function<cplx(cplx)>& L, double T, double H,
                              std::pair<double, double> strip, double A_max, double sigma_step) {
    if (!(T >= 2.0)) throw domain_error("good_ordinates: T >= 2");
    if (!(H > 1.0)) throw domain_error("good_ordinates: H > 1");
    OrdinateReport rep;
    rep.T = T;
    rep.H = H;
    double t_step = 1.0 / (50.0 * H);
    std::vector<double> ts, mins;
    for (double t = T + 0.5 * t_step; t < T + 1.0; t += t_step) {
        double m = 1e300;
        for (double sigma = strip.first; sigma <= strip.second + 1e-12; sigma += sigma_step)
            m = std::min(m, std::abs(L(cplx(sigma, t))));
        ts.push_back(t);
        mins.push_back(m);
    }
    for (double A = 0.0; A <= A_max + 1e-9; A += 0.5) {
        std::vector<double> acc;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (mins[i] >= std::pow(ts[i], -A)) acc.push_back(ts[i]);
        double excluded = 1.0 - static_cast<double>(acc.size()) / static_cast<double>(ts.size());
        if (excluded <= 1.0 / H) {
            rep.accepted = std::move(acc);
            rep.excluded_measure_estimate = excluded;
            rep.exponent_A = A;
            return rep;
        }
    }
    throw convergence_error("good_ordinates: no exponent A <= " + std::to_string(A_max) +
                            " leaves excluded measure <= 1/H");
}

ZeroDensityResult zero_density_check(const ZeroList& zeros, double T) {
    if (zeros.height_limit < T + 1.0)
        throw domain_error("zero_density_check: zero list does not cover [T-1, T+1]");
    ZeroDensityResult r;
    for (double g : zeros.ordinates)
        if (std::abs(g - T) <= 1.0) ++r.count;
    r.bound_ratio = static_cast<double>(r.count) / std::log(T);
    return r;
}

double log_deriv_expansion_check(const std::function<cplx(cplx)>& L,
                                 const std::function<cplx(cplx)>& L_deriv, cplx s,
                                 const ZeroList& zeros) {
    if (std::abs(s.imag()) < 2.0) throw domain_error("log_deriv_expansion_check: need |Im s| >= 2");
    if (zeros.height_limit < std::abs(s.imag()) + 1.0)
        throw domain_error("log_deriv_expansion_check: zeros missing near Im s");
    cplx ratio = L_deriv(s) / L(s);
    cplx acc = 0.0;
    for (double g : zeros.ordinates) {
        for (double sg : {g, -g}) {
            cplx rho(0.5, sg);
            if (std::abs(s - rho) < 1.0) acc += 1.0 / (s - rho);
        }
    }
    return std::abs(ratio - acc);
}

}  // namespace mpzeta
