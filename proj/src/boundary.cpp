#include "mpzeta/boundary.hpp"
#include "mpzeta/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// principal part coefficients around l0 by circle quadrature:
// C_m = (r^m / N) sum_k Z(l0 + r e^{i th_k}) e^{i m th_k}
std::vector<cplx> circle_coeffs(const std::function<cplx(cplx)>& Z, cplx l0, int m_max, double r,
                                int nodes) {
    std::vector<cplx> vals(nodes);
    for (int k = 0; k < nodes; ++k) {
        double th = 2.0 * kPi * k / nodes;
        vals[k] = Z(l0 + r * std::exp(cplx(0.0, th)));
    }
    std::vector<cplx> C(m_max + 1, 0.0);
    for (int m = 1; m <= m_max; ++m) {
        cplx acc = 0.0;
        for (int k = 0; k < nodes; ++k) {
            double th = 2.0 * kPi * k / nodes;
            acc += vals[k] * std::exp(cplx(0.0, m * th));
        }
        C[m] = std::pow(r, m) * acc / static_cast<double>(nodes);
    }
    return C;
}

}  // namespace

BoundaryTerm boundary_term(std::function<double(double)> f, double eps, double growth_exponent,
                           const std::string& label) {
    BoundaryTerm h;
    h.label = label.empty() ? "boundary" : label;
    h.sign_eps = eps;
    h.growth_exponent = growth_exponent;
    h.evaluator = [f = std::move(f), eps](double x) {
        return f(x) - eps / x * f(1.0 / x);
    };
    return h;
}

double pole_expansion(const std::vector<PoleDatum>& ledger, double x, double height_cutoff,
                      double* imag_residual) {
    if (!(x > 0.0)) throw domain_error("pole_expansion: x > 0");
    double lx = std::log(x);
    cplx total = 0.0;
    for (const auto& p : ledger) {
        if (std::abs(p.location.imag()) > height_cutoff) continue;
        cplx xml = std::exp(-p.location * lx);
        cplx term = 0.0;
        double lpow = 1.0;  // log^{m-1} x
        double sign = 1.0;  // (-1)^{m-1}
        for (int m = 1; m <= p.multiplicity; ++m) {
            term += p.principal[m - 1] * sign * lpow / factorial(m - 1);
            lpow *= lx;
            sign = -sign;
        }
        total += term * xml;
    }
    if (imag_residual) *imag_residual = std::abs(total.imag());
    return total.real();
}

std::vector<PoleDatum> residue_ledger(const std::function<cplx(cplx)>& Z,
                                      const std::vector<std::pair<cplx, int>>& candidates,
                                      double radius, int nodes, double drop_tol) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (std::abs(candidates[i].first - candidates[j].first) < 2.0 * radius)
                throw domain_error("residue_ledger: overlapping candidates for this radius");
    std::vector<PoleDatum> out;
    for (const auto& [l0, m_max] : candidates) {
        auto C = circle_coeffs(Z, l0, m_max, radius, nodes);
        auto C2 = circle_coeffs(Z, l0, m_max, 0.5 * radius, nodes);
        double scale = 0.0;
        for (int m = 1; m <= m_max; ++m) scale = std::max(scale, std::abs(C[m]));
        if (scale < drop_tol) continue;  // no pole here
        for (int m = 1; m <= m_max; ++m)
            if (std::abs(C[m] - C2[m]) > 1e-7 * scale + 1e-13)
                throw convergence_error("residue_ledger: radius halving disagrees at " +
                                        std::to_string(l0.real()));
        PoleDatum p;
        p.location = l0;
        int mult = m_max;
        while (mult > 1 && std::abs(C2[mult]) < drop_tol * std::max(1.0, scale)) --mult;
        p.multiplicity = mult;
        p.principal.assign(C2.begin() + 1, C2.begin() + 1 + mult);
        out.push_back(std::move(p));
    }
    return out;
}

cplx c_gamma_coefficient(const QuadField& field, double gamma_ordinate) {
    cplx rho(0.5, gamma_ordinate);
    auto zK = [&](cplx s) { return dedekind_zeta(s, field); };
    cplx z0 = zK(rho);
    if (std::abs(z0) > 1e-6)
        throw domain_error("c_gamma_coefficient: ordinate is not (numerically) a zero of zeta_K");
    const double h = 1e-6;
    cplx d1 = (zK(rho + h) - zK(rho - h)) / (2.0 * h);
    cplx d2 = (8.0 * (zK(rho + h) - zK(rho - h)) - (zK(rho + 2.0 * h) - zK(rho - 2.0 * h))) /
              (12.0 * h);
    if (std::abs(d1 - d2) > 1e-4 * std::abs(d2) + 1e-12)
        throw precision_error("c_gamma_coefficient: derivative stencils disagree");
    if (std::abs(d2) < 1e-8)
        throw domain_error("c_gamma_coefficient: zero appears to be multiple");
    // zeta_{K,infty}(1/2 + i gamma)
    cplx zinf;
    long long d = field.fundamental_discriminant;
    if (d == 1) zinf = specfun::gamma_r(rho);
    else if (d > 1) zinf = std::exp(2.0 * specfun::log_gamma_r(rho));
    else zinf = specfun::gamma_c(rho);
    double ad = std::abs(static_cast<double>(d));
    // Lambda_K(2 i gamma) Lambda_K(1 + 2 i gamma) / (|d|^{rho/2}-normalized derivative)
    cplx two_ig(0.0, 2.0 * gamma_ordinate);
    cplx num = lambda_K(two_ig, field) * lambda_K(1.0 + two_ig, field);
    cplx den = std::exp(0.5 * rho * std::log(ad)) * zinf * d2;
    return require_finite(num / den, "c_gamma_coefficient");
}

std::vector<PoleDatum> pole_ledger_for_Z_E(const EllipticCurve& curve, const ZeroList& zeros,
                                           double height_cutoff) {
    if (zeros.height_limit < 2.0 * height_cutoff - 1e-9)
        throw domain_error("pole_ledger_for_Z_E: zero data ends below twice the cutoff");
    LFunctionSpec spec = build_Z_E(curve);
    std::vector<std::pair<cplx, int>> cand = {
        {cplx(0.0, 0.0), 2}, {cplx(0.5, 0.0), 1}, {cplx(1.0, 0.0), 2}};
    for (double g : zeros.ordinates) {
        if (g / 2.0 > height_cutoff) break;
        cand.emplace_back(cplx(0.5, g / 2.0), 1);
        cand.emplace_back(cplx(0.5, -g / 2.0), 1);
    }
    return residue_ledger(spec.evaluator, cand, 1e-2, 64);
}

std::vector<PoleDatum> pole_ledger_for_Z_K(const QuadField& field, const ZeroList& zeros,
                                           double height_cutoff) {
    LFunctionSpec spec = build_Z_K(field);
    std::vector<std::pair<cplx, int>> cand = {{cplx(0.5, 0.0), 2}};
    for (double g : zeros.ordinates) {
        if (g > height_cutoff) break;
        cand.emplace_back(cplx(0.5, g), 1);
        cand.emplace_back(cplx(0.5, -g), 1);
    }
    return residue_ledger(spec.evaluator, cand, 1e-2, 64);
}

void export_ledger_csv(const std::vector<PoleDatum>& ledger, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write ledger: " + path);
    out << "re_lambda,im_lambda,m";
    int mmax = 1;
    for (const auto& p : ledger) mmax = std::max(mmax, p.multiplicity);
    for (int m = 1; m <= mmax; ++m) out << ",re_C" << m << ",im_C" << m;
    out << "\n";
    out.precision(16);
    for (const auto& p : ledger) {
        out << p.location.real() << "," << p.location.imag() << "," << p.multiplicity;
        for (int m = 0; m < mmax; ++m) {
            cplx c = m < p.multiplicity ? p.principal[m] : cplx(0.0, 0.0);
            out << "," << c.real() << "," << c.imag();
        }
        out << "\n";
    }
}

}  // namespace mpzeta
