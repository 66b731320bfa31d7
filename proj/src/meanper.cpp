#include "mpzeta/meanper.hpp"
#include "mpzeta/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using boost::math::quadrature::gauss_kronrod;

// natural cubic spline on an equally spaced grid in the abscissa
class UniformSpline {
  public:
    UniformSpline() = default;
    UniformSpline(double x0, double dx, std::vector<double> y) : x0_(x0), dx_(dx), y_(std::move(y)) {
        // natural spline: M_{i-1} + 4 M_i + M_{i+1} = 6 (y_{i+1} - 2y_i + y_{i-1}) / h^2
        std::size_t n = y_.size();
        m_.assign(n, 0.0);
        if (n < 3) return;
        std::vector<double> diag(n, 4.0), rhs(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i)
            rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
        for (std::size_t i = 2; i + 1 < n; ++i) {
            double w = 1.0 / diag[i - 1];
            diag[i] -= w;
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (rhs[i] - m_[i + 1]) / diag[i];
            if (i == 1) break;
        }
    }

    double operator()(double x) const {
        if (y_.empty()) return 0.0;
        double u = (x - x0_) / dx_;
        if (u <= 0.0) return y_.front();
        std::size_t n = y_.size();
        if (u >= static_cast<double>(n - 1)) return y_.back();
        std::size_t i = static_cast<std::size_t>(u);
        double a = u - static_cast<double>(i);
        double h2 = dx_ * dx_;
        return y_[i] * (1.0 - a) + y_[i + 1] * a +
               h2 / 6.0 * ((1.0 - a) * ((1.0 - a) * (1.0 - a) - 1.0) * m_[i] +
                           a * (a * a - 1.0) * m_[i + 1]);
    }

  private:
    double x0_ = 0.0, dx_ = 1.0;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives
};

}  // namespace

// ---------------------------------------------------------------------------
// convolutors

namespace {

struct VTable {
    UniformSpline spline;      // v on u in [1, u_max], log-spaced
    double lu_max = 0.0;
    double reflect_sign = 1.0;  // v(u) = sign * u^{-1} v(1/u)
    double env_c = 1.0;         // |v(u)| <= env_c u^{-env_pow}, u >= 1
    double env_pow = 10.0;

    double eval(double u) const {
        if (u >= 1.0) {
            if (std::log(u) > lu_max) return 0.0;  // below env_c * u_max^{-env_pow}
            return spline(std::log(u));
        }
        double lu = -std::log(u);
        if (lu > lu_max) return 0.0;
        return reflect_sign / u * spline(lu);
    }
};

}  // namespace

Convolutor build_convolutor_V(const EllipticCurve& curve, const ContourSpec& contour, int power) {
    if (power != 1 && power != 2) throw domain_error("build_convolutor_V: power must be 1 or 2");
    auto lam = make_lambda_E(curve);
    auto V = [lam, power](cplx s) {
        cplx v = (2.0 * s - 1.0) * s * s * (s - 1.0) * (s - 1.0) * (*lam)(2.0 * s);
        return power == 1 ? v : v * v;
    };
    // sampled check of the vertical-line decay |V| = O(|t|^{-(1+delta)})
    {
        double c = contour.abscissa_c;
        double t1 = 6.0, t2 = 14.0, t3 = 22.0;
        double m1 = std::abs(V(cplx(c, t1))) * std::pow(t1, 1.1);
        double m2 = std::abs(V(cplx(c, t2))) * std::pow(t2, 1.1);
        double m3 = std::abs(V(cplx(c, t3))) * std::pow(t3, 1.1);
        if (!(m2 < m1 && m3 < m2))
            throw convergence_error("build_convolutor_V: sampled line decay slower than |t|^-1.1");
    }
    // contour caches on three lines; T from the e^{-pi |t| power} decay
    double T = (34.0 + 10.0) / (kPi * power);
    ContourSpec base;
    base.height_T = T;
    base.node_count = static_cast<int>(T / 0.05);
    ContourSpec mid = base, hi = base, top = base;
    mid.abscissa_c = std::max(contour.abscissa_c, 1.7);
    hi.abscissa_c = 6.0;
    top.abscissa_c = 10.0;
    ContourCache cm(V, mid), ch(V, hi), ct(V, top);

    double lu_max = std::log(1.0e3);
    double dx = 0.004;
    std::size_t n = static_cast<std::size_t>(lu_max / dx) + 2;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = std::exp(dx * static_cast<double>(i));
        const ContourCache& cc = (u < 8.0) ? cm : (u < 64.0 ? ch : ct);
        y[i] = cc.f(u).value;
    }
    auto table = std::make_shared<VTable>();
    table->spline = UniformSpline(0.0, dx, std::move(y));
    table->lu_max = dx * static_cast<double>(n - 1);
    table->reflect_sign = (power == 1) ? -static_cast<double>(curve.sign_omega) : 1.0;
    // envelope from the Re s = 10 line: |v(u)| <= u^{-10}/(2pi) int |V(10+it)| dt
    {
        double acc = 0.0;
        int K = 400;
        double h = T / K;
        for (int k = -K; k <= K; ++k) acc += std::abs(V(cplx(10.0, k * h))) * h;
        table->env_c = acc / (2.0 * kPi) * static_cast<double>(power == 2 ? 1 : 1);
        table->env_pow = 10.0;
    }

    Convolutor v;
    v.label = (power == 1 ? "V(" : "V^2(") + curve.label + ")";
    v.evaluator = [table](double u) { return table->eval(u); };
    v.mellin_evaluator = V;
    v.env_large = table->env_c;
    v.env_large_pow = 10.0;
    v.env_small = table->env_c;
    v.env_small_pow = 9.0;  // via the reflection v(u) = +-u^{-1} v(1/u)
    return v;
}

Convolutor build_convolutor_lambda_q() {
    // v = inverse Mellin of s^2 (s-1)^2 Lambda_Q(s): acting with the Mellin
    // operators on the theta tail gives, per Gaussian term e^{-y}, y = pi n^2 x^2,
    //   P4(y) = 16 y^4 - 112 y^3 + 164 y^2 - 36 y
    // and the self-duality v(x) = x^{-1} v(1/x) covers x < 1.
    auto series = [](double x) {
        double acc = 0.0;
        for (int n = 1; n <= 64; ++n) {
            double y = kPi * n * n * x * x;
            if (y > 50.0) break;
            double p4 = y * (-36.0 + y * (164.0 + y * (-112.0 + y * 16.0)));
            acc += 2.0 * p4 * std::exp(-y);
        }
        return acc;
    };
    Convolutor v;
    v.label = "V(lambda_q)";
    v.evaluator = [series](double x) {
        if (x >= 1.0) return series(x);
        return series(1.0 / x) / x;
    };
    v.mellin_evaluator = [](cplx s) {
        return s * s * (s - 1.0) * (s - 1.0) * lambda_q(s);
    };
    v.env_large = 3.0;
    v.env_large_pow = 12.0;  // super-polynomial really; Gaussian tail
    v.env_small = 3.0;
    v.env_small_pow = 11.0;
    return v;
}

// ---------------------------------------------------------------------------
// convolution and certification

namespace {

double convolve_impl(const Convolutor& v, const BoundaryTerm& h, double x, bool absolute,
                     bool swap_roles) {
    if (v.env_small_pow <= h.growth_exponent + 0.2)
        throw domain_error("mult_convolve: convolutor envelope cannot beat the boundary growth");
    double lx = std::log(x);
    double L = std::log(1e4);
    auto f = [&](double w) {
        double vy, hy;
        if (!swap_roles) {
            vy = v.evaluator(std::exp(lx - w));
            hy = h.evaluator(std::exp(w));
        } else {  // integrate in u = x/y
            vy = v.evaluator(std::exp(w));
            hy = h.evaluator(std::exp(lx - w));
        }
        double p = vy * hy;
        return absolute ? std::abs(p) : p;
    };
    double a = swap_roles ? -L : lx - L;
    double b = swap_roles ? L : lx + L;
    return gauss_kronrod<double, 31>::integrate(f, a, b, 13, 1e-10);
}

}  // namespace

double mult_convolve(const Convolutor& v, const BoundaryTerm& h, double x) {
    return convolve_impl(v, h, x, false, false);
}

double mult_convolve_alt(const Convolutor& v, const BoundaryTerm& h, double x) {
    return convolve_impl(v, h, x, false, true);
}

double mult_convolve_abs(const Convolutor& v, const BoundaryTerm& h, double x) {
    return convolve_impl(v, h, x, true, false);
}

std::string CertifyReport::to_json() const {
    std::ostringstream os;
    os.precision(12);
    os << "{\"label\":\"" << label << "\",\"grid\":[";
    for (std::size_t i = 0; i < grid.size(); ++i) os << (i ? "," : "") << grid[i];
    os << "],\"residuals\":[";
    for (std::size_t i = 0; i < residuals.size(); ++i) os << (i ? "," : "") << residuals[i];
    os << "],\"max_residual\":" << max_residual << ",\"scale\":" << scale
       << ",\"ratio\":" << ratio << ",\"pass\":" << (pass ? "true" : "false") << "}";
    return os.str();
}

CertifyReport certify_mean_periodicity(const Convolutor& v, const BoundaryTerm& h,
                                       const std::vector<double>& grid, double pass_threshold) {
    if (grid.size() < 2 || grid.front() > 0.11 || grid.back() < 9.9)
        throw domain_error("certify_mean_periodicity: grid must span [0.1, 10]");
    CertifyReport rep;
    rep.label = v.label + " * " + h.label;
    rep.grid = grid;
    for (double x : grid) {
        double r = mult_convolve(v, h, x);
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, std::abs(r));
        rep.scale = std::max(rep.scale, mult_convolve_abs(v, h, x));
    }
    rep.ratio = rep.max_residual / std::max(rep.scale, 1e-300);
    rep.pass = rep.ratio <= pass_threshold;
    return rep;
}

BoundaryTerm perturb_boundary(const Convolutor& v, const BoundaryTerm& h,
                              const std::vector<double>& grid, double frac, double omega0) {
    // scale of the true pair and of the unit defect profile
    double S = 0.0, Sd = 0.0;
    BoundaryTerm profile;
    profile.label = "defect";
    profile.sign_eps = h.sign_eps;
    profile.growth_exponent = 0.6;
    profile.evaluator = [](double y) { return std::pow(y, -0.5); };
    for (double x : grid) {
        S = std::max(S, mult_convolve_abs(v, h, x));
        Sd = std::max(Sd, mult_convolve_abs(v, profile, x));
    }
    double a = frac * S / std::max(Sd, 1e-300);
    BoundaryTerm out = h;
    auto base = h.evaluator;
    out.evaluator = [base, a, omega0](double y) {
        return base(y) + a * std::pow(y, -0.5) * std::cos(omega0 * std::log(y));
    };
    out.label = h.label + "+defect";
    return out;
}

// ---------------------------------------------------------------------------
// test functions and the summation formula

double TestFunction::operator()(double x) const {
    if (!(x_lo > 0.0 && x_hi > x_lo)) throw domain_error("TestFunction: bad support");
    if (x <= x_lo || x >= x_hi) return 0.0;
    double u = (2.0 * std::log(x) - std::log(x_lo * x_hi)) / std::log(x_hi / x_lo);
    return std::exp(-1.0 / (1.0 - u * u));
}

double TestFunction::dual(double x) const { return (*this)(1.0 / x) / x; }

cplx TestFunction::mellin(cplx s) const { return mellin_deriv(s, 0); }

cplx TestFunction::mellin_deriv(cplx s, int order) const {
    // panel Gauss-Legendre in log x over the support; quad_points controls
    // the resolution so convergence studies can double it
    int panels = std::max(quad_points / 16, 8);
    double a = std::log(x_lo), b = std::log(x_hi);
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    cplx acc = 0.0;
    for (int k = 0; k < panels; ++k) {
        double lo = a + (b - a) * k / panels;
        double hi = a + (b - a) * (k + 1) / panels;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < 8; ++i) {
            double w = mid + half * gx[i];
            double phi = (*this)(std::exp(w));
            if (phi == 0.0) continue;
            double lp = 1.0;
            for (int j = 0; j < order; ++j) lp *= w;
            acc += gw[i] * half * phi * lp * std::exp(s * w);
        }
    }
    return acc;
}

ExplicitFormulaResult explicit_formula_check(const LFunctionSpec& spec, const TestFunction& phi,
                                             const std::vector<PoleDatum>& ledger) {
    if (std::abs(spec.sign_eps.imag()) > 1e-12 ||
        std::abs(std::abs(spec.sign_eps.real()) - 1.0) > 1e-9)
        throw domain_error("explicit_formula_check: spec must be self-dual with eps = +-1");
    if (!(phi.x_lo > 0.0)) throw domain_error("explicit_formula_check: support touches 0");
    double eps = spec.sign_eps.real();
    if (spec.coefficients.length() == 0)
        throw domain_error("explicit_formula_check: spec carries no Dirichlet coefficients");

    cplx lhs = 0.0;
    double factorial = 1.0;
    for (const auto& p : ledger) {
        factorial = 1.0;
        for (int m = 1; m <= p.multiplicity; ++m) {
            lhs += p.principal[m - 1] / factorial * phi.mellin_deriv(p.location, m - 1);
            factorial *= m;
        }
    }

    // kappa from the gamma factor on a cached contour; argument range is
    // [m / x_hi, m / x_lo]
    ContourSpec cs;
    cs.abscissa_c = 1.2;
    for (auto& [lam, mu] : spec.gamma.shifts)
        cs.abscissa_c = std::max(cs.abscissa_c, (0.3 - mu.real()) / lam + 0.3);
    double rate = -spec.gamma.stirling_exp_rate();
    cs.height_T = (34.0 + 8.0) / std::max(rate, 0.5);
    cs.node_count = static_cast<int>(cs.height_T / 0.05);
    auto gamma_eval = [&spec](cplx s) { return spec.gamma.eval(s); };
    ContourCache kap(gamma_eval, cs);

    double rhs = 0.0;
    std::size_t N = spec.coefficients.length();
    for (std::size_t m = 1; m <= N; ++m) {
        double dm = spec.coefficients[m];
        if (dm == 0.0) continue;
        // (phi *x kappa)(m) = int phi(y) kappa(m/y) dy/y
        auto f1 = [&](double w) {
            double y = std::exp(w);
            return phi(y) * kap.f(static_cast<double>(m) / y).value;
        };
        auto f2 = [&](double w) {
            double y = std::exp(w);
            return phi.dual(y) * kap.f(static_cast<double>(m) / y).value;
        };
        double a = std::log(phi.x_lo), b = std::log(phi.x_hi);
        double c1 = gauss_kronrod<double, 31>::integrate(f1, a, b, 11, 1e-11);
        double c2 = gauss_kronrod<double, 31>::integrate(f2, -b, -a, 11, 1e-11);
        double term = dm * (c1 - eps * c2);
        rhs += term;
        // kappa decays at least like a Gaussian in m/x_hi for our factors
        double zedge = static_cast<double>(m) / phi.x_hi;
        if (m > 4 && std::abs(term) < 1e-17 && zedge > 8.0) break;
    }
    ExplicitFormulaResult res;
    res.lhs = lhs.real();
    res.rhs = rhs;
    return res;
}

}  // namespace mpzeta
