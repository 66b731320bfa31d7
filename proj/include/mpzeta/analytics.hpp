#pragma once

#include "mpzeta/boundary.hpp"
#include "mpzeta/mellin.hpp"
#include "mpzeta/types.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mpzeta {

struct SignScanReport {
    int derivative_order = 0;
    double t_lo = 0.0, t_hi = 0.0;
    double grid_step = 0.0;
    std::vector<std::pair<double, double>> sign_changes;  // bracketing intervals
    std::optional<double> constant_sign_from;             // t0 when no change found
};

// sign scan of the k-th analytic t-derivative of the theta series H_E
// (series = 0) or the Bessel series h2 (series = 1)
SignScanReport single_sign_scan(const EllipticCurve& curve, int derivative_order, double t_lo,
                                double t_hi, double step, int series = 0);
// generic scan of a caller-supplied function
SignScanReport single_sign_scan(const std::function<double(double)>& f, double t_lo, double t_hi,
                                double step);

struct DecomposeResult {
    double h00 = 0.0;      // order-4 principal part at s = 0
    double h01 = 0.0;      // order-4 principal part at s = 1
    double h1 = 0.0;       // remaining poles (1/2 and spectral, truncated)
    double sum = 0.0;
    double reference = 0.0;          // Z_E^2 boundary series at the same t
    double spectral_residual = 0.0;  // |sum - reference|
    double imag_leak = 0.0;
};

// rem-511-style splitting of the Z_E^2 boundary term at x = e^{-t}
DecomposeResult decompose_h2(const EllipticCurve& curve, const ZeroList& zeros, double t,
                             double height_cutoff);

struct OrdinateReport {
    double T = 0.0, H = 0.0;
    std::vector<double> accepted;  // t in (T, T+1)
    double excluded_measure_estimate = 1.0;
    double exponent_A = 0.0;
};

// heights t in (T, T+1) where min_sigma |L(sigma + it)| >= t^{-A}, with the
// smallest half-integer A that leaves excluded measure <= 1/H
OrdinateReport good_ordinates(const std::function<cplx(cplx)>& L, double T, double H,
                              std::pair<double, double> strip, double A_max = 6.0,
                              double sigma_step = 0.05);

struct ZeroDensityResult {
    int count = 0;          // zeros with |gamma - T| <= 1
    double bound_ratio = 0.0;  // count / log T
};

ZeroDensityResult zero_density_check(const ZeroList& zeros, double T);

// | L'/L(s) - sum_{|s-rho|<1} 1/(s-rho) |, zeros taken as 1/2 + i gamma
double log_deriv_expansion_check(const std::function<cplx(cplx)>& L,
                                 const std::function<cplx(cplx)>& L_deriv, cplx s,
                                 const ZeroList& zeros);

}  // namespace mpzeta
