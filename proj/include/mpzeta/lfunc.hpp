#pragma once

#include "mpzeta/elliptic.hpp"
#include "mpzeta/types.hpp"
#include "mpzeta/zeta.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mpzeta {

// q^{s/2} prod_j Gamma(lambda_j s + mu_j), with the archimedean shape
// (r1, r2) kept for sign bookkeeping.  Zero-free by construction.
struct GammaFactor {
    double conductor_q = 1.0;
    std::vector<std::pair<double, cplx>> shifts;  // (lambda_j, mu_j)
    int r1 = 0, r2 = 0;

    cplx log_eval(cplx s) const;
    cplx eval(cplx s) const;
    // poles of the product in the window [re_lo, re_hi] x |Im| <= im_max
    std::vector<std::pair<cplx, int>> poles_in(double re_lo, double re_hi, double im_max) const;
    // Stirling model on the vertical line sigma: |gamma(sigma+it)| ~
    // C e^{rate |t|} |t|^{poly(sigma)} for large |t|
    double stirling_exp_rate() const;                 // sum_j -(pi/2) lambda_j
    double stirling_poly_exponent(double sigma) const;

    static GammaFactor riemann();                     // pi^{-s/2} Gamma(s/2)
    static GammaFactor gamma_c_factor(double q);      // q^{s/2} (2pi)^{-s} Gamma(s)
};

struct QuadField {
    long long fundamental_discriminant = 1;
    int r1 = 2, r2 = 0;
    static QuadField make(long long d);  // validates fundamentality; d=1 = Q
};

struct ModelData {
    std::string curve_label;
    std::vector<long long> fiber_sizes;  // q_j >= 2
    static ModelData from_json_file(const std::string& path);
    long long c_e(long long conductor_norm) const;  // N(q_E) * prod q_j
};

// A class-F element Z(s) = gamma(s) D(s) with its completed evaluator.
struct LFunctionSpec {
    DirichletCoefficients coefficients;  // may be empty when only composed
    GammaFactor gamma;
    cplx sign_eps{1.0, 0.0};
    int weight_d = 0;                  // symmetry s <-> d+1-s (rescaled: 0)
    double pole_strip_halfwidth_w = 0.55;
    std::string label;
    bool self_dual = true;

    std::function<cplx(cplx)> evaluator;       // Z(s)
    std::function<cplx(cplx)> dual_evaluator;  // Z_dual(s); = evaluator if self dual
    std::vector<cplx> known_poles;             // structural ledger (grid avoidance)

    // coefficient of |t| in log|Z(sigma+it)| for large |t| (Stirling model of
    // the full composed evaluator; gamma.shifts only covers positive-lambda
    // factors, compositions like 1/Lambda(E,2s) fold into this rate)
    double decay_exp_rate = 0.0;

    cplx operator()(cplx s) const { return evaluator(s); }
    double pole_distance(cplx s) const;
};

// Completed function q^{s/2} gamma(s) D(s) from the coefficients via the
// incomplete-gamma smoothed series (single gamma shift only).  Valid for
// |Im s| <= ~16; beyond that the cancellation exceeds double precision.
cplx completed_l(const LFunctionSpec& spec, cplx s);

// Completed Lambda(E, s) with the s <-> 2-s functional equation, uniformly
// accurate on desk scale via a shifted full-line contour of the modular
// theta sum.  Thread-safe after construction.
class ModularLambda {
  public:
    explicit ModularLambda(const EllipticCurve& curve, double max_height = 70.0);
    cplx operator()(cplx s) const;
    const EllipticCurve& curve() const { return curve_; }

  private:
    cplx g_direct(cplx w) const;
    cplx line_integrand(double rho, double alpha, cplx s) const;

    EllipticCurve curve_;
    double c1_;
    int terms_;
    std::vector<double> an_;
};

// shared handle: builders below hold one evaluator per curve
using ModularLambdaPtr = std::shared_ptr<const ModularLambda>;
ModularLambdaPtr make_lambda_E(const EllipticCurve& curve);

// completed Dedekind Lambda_K for Q or a quadratic field
cplx lambda_K(cplx s, const QuadField& K);
cplx quad_dirichlet_l(cplx s, const QuadField& K);
cplx dedekind_zeta(cplx s, const QuadField& K);

// class-F builders
LFunctionSpec build_lambda_q_spec();
LFunctionSpec build_Z_E(const EllipticCurve& curve);
LFunctionSpec build_Z_E_squared(const EllipticCurve& curve);
LFunctionSpec build_Z_K(const QuadField& field);
LFunctionSpec build_Z_model(const EllipticCurve& curve, const ModelData& model);

// U/V factorization of Z_E (P = 1); U/V = Z_E, U(s) = (-1)^{r1+r2+1} U(1-s),
// V(s) = -omega_E V(1-s)
struct UVSplit {
    std::function<cplx(cplx)> U, V;
};
UVSplit uv_split_E(const EllipticCurve& curve);

// smallest m <= m_max with Stirling exponent of Lambda_Q(s)^m gamma(s)
// at most -(1+delta) across the strip; throws convergence_error (carrying
// the best exponent) if none works
int power_search_m(const LFunctionSpec& spec, int m_max, double delta = 0.1);

}  // namespace mpzeta
