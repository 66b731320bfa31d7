#pragma once

#include "mpzeta/boundary.hpp"
#include "mpzeta/elliptic.hpp"
#include "mpzeta/lfunc.hpp"
#include "mpzeta/types.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace mpzeta {

struct ContourSpec {
    double abscissa_c = 1.6;
    double height_T = 55.0;
    int node_count = 0;  // 0: derive from spacing rule
    enum class Rule { trapezoid, tanh_sinh } rule = Rule::trapezoid;

    // pick T from the spec's Stirling decay rate and h from the distance of
    // the line to the nearest pole (trapezoid analyticity-strip estimate)
    static ContourSpec for_spec(const LFunctionSpec& spec, double tol = 1e-12,
                                double max_abs_log_x = 3.5);
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

// f_Z(x) = (1/2 pi i) int_(c) Z(s) x^{-s} ds on the truncated line; Z must
// satisfy Z(conj s) = conj Z(s).  Throws convergence_error when the edge
// tail estimate exceeds the requested tolerance.
QuadResult inverse_mellin(const std::function<cplx(cplx)>& Z, double x, const ContourSpec& contour,
                          double tol = 1e-10);

// Fixed-node contour with cached Z values; cheap repeated f_Z evaluations.
class ContourCache {
  public:
    ContourCache(const std::function<cplx(cplx)>& Z, const ContourSpec& contour);
    QuadResult f(double x) const;
    double abscissa() const { return c_; }

  private:
    double c_, h_;
    std::vector<cplx> nodes_;  // Z(c + i k h), k = 0..K
};

// kappa(x): inverse Mellin transform of a gamma factor
double kappa_kernel(const GammaFactor& gamma, double x, const ContourSpec& contour);

struct SeriesTruncation {
    std::size_t n_max = 0;
    double tail_bound = 0.0;
};

// H_E(t): Gaussian theta series of Z_E (Hasse-Weil coefficients, conductor
// inside the Gaussian), term-by-term analytic t-derivatives up to k = 6
class ThetaBoundaryE {
  public:
    explicit ThetaBoundaryE(const EllipticCurve& curve, std::size_t n_cap = (1u << 16));
    double eval(double t) const;
    double deriv(double t, int k) const;
    SeriesTruncation plan(double t) const;
    BoundaryTerm as_boundary_term() const;
    const std::vector<double>& weights() const { return b_; }

  private:
    EllipticCurve curve_;
    double q2pi_;  // pi * q^2
    std::vector<double> b_;  // b_n = sum_{d^2 | n} e_d
};

// h_E^(2) Bessel series.  Convention::display is the single-c form
// (coefficients sum_{d|n} c_d sigma_0(n/d), argument 2 pi n);
// Convention::squared is the boundary term of the actual Z_E^2
// (coefficients of zeta(s)^2 q^{-2s} zeta_E(2s)^2, argument 2 pi q^2 n).
class BesselBoundaryE2 {
  public:
    enum class Convention { display, squared };
    BesselBoundaryE2(const EllipticCurve& curve, Convention conv = Convention::display,
                     std::size_t n_cap = (1u << 16));
    double eval(double t) const;
    double deriv(double t, int k) const;
    SeriesTruncation plan(double t) const;
    BoundaryTerm as_boundary_term() const;

  private:
    EllipticCurve curve_;
    double scale_;  // 2 pi or 2 pi q^2
    std::vector<double> w_;
};

double theta_boundary_E(const EllipticCurve& curve, double t, const SeriesTruncation& trunc);
double bessel_boundary_E2(const EllipticCurve& curve, double t, const SeriesTruncation& trunc);

// half Mellin transform int_0^1 h(x) x^{s} dx/x; requires Re s above the
// growth exponent of h
cplx half_mellin(const BoundaryTerm& h, cplx s);

struct Convolutor;  // meanper.hpp

// Mellin-Carleman transform MC(h)(s) = M(v * h^+)(s) / M(v)(s), both by
// adaptive quadrature.  Throws if v is not certified against h or if the
// denominator vanishes at s.
cplx mellin_carleman(const BoundaryTerm& h, const Convolutor& v, cplx s);

}  // namespace mpzeta
