#pragma once

#include "mpzeta/boundary.hpp"
#include "mpzeta/mellin.hpp"
#include "mpzeta/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mpzeta {

// rapid-decay multiplicative convolutor v with its Mellin transform V
struct Convolutor {
    std::function<double(double)> evaluator;
    std::function<cplx(cplx)> mellin_evaluator;  // closed-form V(s)
    bool rapid_decay = true;
    std::string label;
    // envelope constants: |v(u)| <= env_small * u^{env_small_pow} for u < 1,
    //                     |v(u)| <= env_large * u^{-env_large_pow} for u > 1
    double env_small = 1.0, env_small_pow = 3.0;
    double env_large = 1.0, env_large_pow = 3.0;
    double operator()(double u) const { return evaluator(u); }
};

// v from V(s) = (2s-1) s^2 (s-1)^2 Lambda(E,2s) (power=1) or its square
// shape (2s-1)^2 s^4 (s-1)^4 Lambda(E,2s)^2 (power=2); tabulated on a log
// grid from shifted contours, spline-interpolated.
Convolutor build_convolutor_V(const EllipticCurve& curve, const ContourSpec& contour,
                              int power = 1);

// v for Lambda_Q: inverse Mellin of s^2 (s-1)^2 Lambda_Q(s), evaluated in
// closed form from the Jacobi theta tail (derivative operators on Gaussians)
Convolutor build_convolutor_lambda_q();

// (v *x h)(x) = int v(x/y) h(y) dy/y, adaptive with envelope-certified tails
double mult_convolve(const Convolutor& v, const BoundaryTerm& h, double x);
// same value computed in the substituted order (integration in u = x/y)
double mult_convolve_alt(const Convolutor& v, const BoundaryTerm& h, double x);
// int |v(x/y) h(y)| dy/y, the normalization scale of the residual
double mult_convolve_abs(const Convolutor& v, const BoundaryTerm& h, double x);

struct CertifyReport {
    std::string label;
    std::vector<double> grid;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double scale = 0.0;  // max_x int |v(x/y) h(y)| dy/y
    double ratio = 0.0;
    bool pass = false;
    std::string to_json() const;
};

CertifyReport certify_mean_periodicity(const Convolutor& v, const BoundaryTerm& h,
                                       const std::vector<double>& grid,
                                       double pass_threshold = 1e-5);

// Sensitivity control: adds a critical-line oscillatory defect
// a y^{-1/2} cos(omega0 log y), with a chosen so the defect's own certification
// scale is `frac` of the unperturbed scale S.  A convolutor annihilates the
// true boundary term but has no zero at 1/2 + i omega0, so certify must FAIL.
BoundaryTerm perturb_boundary(const Convolutor& v, const BoundaryTerm& h,
                              const std::vector<double>& grid, double frac = 0.01,
                              double omega0 = 1.5);

// smooth bump supported on [x_lo, x_hi]: exp(-1/(1-u^2)) in log coordinates
struct TestFunction {
    double x_lo = 0.5, x_hi = 2.0;
    int quad_points = 2000;  // resolution knob for the convergence study
    double operator()(double x) const;
    double dual(double x) const;  // x^{-1} phi(1/x)
    cplx mellin(cplx s) const;
    cplx mellin_deriv(cplx s, int order) const;
};

struct ExplicitFormulaResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Summation-formula check: sum_l C_m(l)/(m-1)! M(phi)^{(m-1)}(l) against
// sum_m d_m [(phi *x kappa)(m) - eps (phi^v *x kappa)(m)]
ExplicitFormulaResult explicit_formula_check(const LFunctionSpec& spec, const TestFunction& phi,
                                             const std::vector<PoleDatum>& ledger);

}  // namespace mpzeta
