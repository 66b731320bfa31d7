#pragma once

#include "mpzeta/lfunc.hpp"
#include "mpzeta/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mpzeta {

// h(x) on (0,inf) with h(1/x) = -eps x h(x); growth_exponent g bounds
// |h(x)| <= C x^{-g} as x -> 0+ (and x^{g-1} at infinity via the relation)
struct BoundaryTerm {
    std::function<double(double)> evaluator;
    cplx sign_eps{1.0, 0.0};
    double growth_exponent = 1.1;
    std::string label;
    double operator()(double x) const { return evaluator(x); }
};

BoundaryTerm boundary_term(std::function<double(double)> f, double eps,
                           double growth_exponent = 1.1, const std::string& label = "");

struct PoleDatum {
    cplx location;
    int multiplicity = 1;
    std::vector<cplx> principal;  // C_1 .. C_m
};

struct ZeroList {
    std::vector<double> ordinates;  // strictly increasing, positive
    enum class Source { file, computed } source = Source::computed;
    double height_limit = 0.0;
};

// sum over the ledger of C_m(l) (-1)^{m-1}/(m-1)! log^{m-1}(x) x^{-l},
// conjugate pairs folded together; imaginary leakage reported if requested
double pole_expansion(const std::vector<PoleDatum>& ledger, double x, double height_cutoff,
                      double* imag_residual = nullptr);

// principal parts by circular contour quadrature around each candidate;
// radius halving cross-check, entries with all |C_m| < drop_tol removed
std::vector<PoleDatum> residue_ledger(const std::function<cplx(cplx)>& Z,
                                      const std::vector<std::pair<cplx, int>>& candidates,
                                      double radius = 1e-2, int nodes = 64,
                                      double drop_tol = 1e-10);

// zeta zero ordinates in (0, height] via Hardy-Z sign changes + bisection
ZeroList zeta_zero_scan(double height_limit);
// argument-principle count of zeros with 0 < Im s <= height (oracle)
int zeta_zero_count_argument(double height);

ZeroList load_zeros(const std::string& path);

// residue coefficient c_gamma of Z_K at 1/2 + i gamma (simple zeta_K zero)
cplx c_gamma_coefficient(const QuadField& field, double gamma_ordinate);

// combined ledger for Z_E: analytic poles {0, 1/2, 1} plus spectral poles
// (1 + i g)/2 from the zero list, residues all confirmed by quadrature
std::vector<PoleDatum> pole_ledger_for_Z_E(const EllipticCurve& curve, const ZeroList& zeros,
                                           double height_cutoff);

// ledger for Z_K: double pole at 1/2 plus zeta-zero poles at 1/2 +- i g
std::vector<PoleDatum> pole_ledger_for_Z_K(const QuadField& field, const ZeroList& zeros,
                                           double height_cutoff);

void export_ledger_csv(const std::vector<PoleDatum>& ledger, const std::string& path);

}  // namespace mpzeta
