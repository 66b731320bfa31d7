#include "mpzeta/lfunc.hpp"
#include "mpzeta/specfun.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// convexity exponent for zeta growth in vertical strips
double mu_zeta(double sigma) {
    if (sigma >= 1.0) return 0.0;
    if (sigma >= 0.0) return 0.5 * (1.0 - sigma);
    return 0.5 - sigma;
}

}  // namespace

cplx GammaFactor::log_eval(cplx s) const {
    cplx acc = 0.5 * s * std::log(conductor_q);
    for (const auto& [lam, mu] : shifts) acc += specfun::log_gamma(lam * s + mu);
    return acc;
}

cplx GammaFactor::eval(cplx s) const { return std::exp(log_eval(s)); }

std::vector<std::pair<cplx, int>> GammaFactor::poles_in(double re_lo, double re_hi,
                                                        double im_max) const {
    std::vector<std::pair<cplx, int>> out;
    for (const auto& [lam, mu] : shifts) {
        for (int k = 0; k < 4000; ++k) {
            cplx p = -(static_cast<double>(k) + mu) / lam;
            if (p.real() < re_lo - 1e-12) break;
            if (p.real() <= re_hi + 1e-12 && std::abs(p.imag()) <= im_max) {
                bool merged = false;
                for (auto& q : out)
                    if (std::abs(q.first - p) < 1e-9) {
                        ++q.second;
                        merged = true;
                    }
                if (!merged) out.emplace_back(p, 1);
            }
        }
    }
    return out;
}

double GammaFactor::stirling_exp_rate() const {
    double r = 0.0;
    for (const auto& [lam, mu] : shifts) {
        (void)mu;
        r += -0.5 * kPi * lam;
    }
    return r;
}

double GammaFactor::stirling_poly_exponent(double sigma) const {
    double e = 0.0;
    for (const auto& [lam, mu] : shifts) e += lam * sigma + mu.real() - 0.5;
    return e;
}

GammaFactor GammaFactor::riemann() {
    GammaFactor g;
    g.conductor_q = 1.0 / kPi;
    g.shifts = {{0.5, cplx(0.0, 0.0)}};
    g.r1 = 1;
    g.r2 = 0;
    return g;
}

GammaFactor GammaFactor::gamma_c_factor(double q) {
    GammaFactor g;
    g.conductor_q = q / (4.0 * kPi * kPi);
    g.shifts = {{1.0, cplx(0.0, 0.0)}};
    g.r1 = 0;
    g.r2 = 1;
    return g;
}

QuadField QuadField::make(long long d) {
    auto squarefree = [](long long n) {
        n = std::llabs(n);
        for (long long k = 2; k * k <= n; ++k)
            if (n % (k * k) == 0) return false;
        return true;
    };
    bool ok = false;
    if (d == 1) ok = true;
    else if (((d % 4) + 4) % 4 == 1 && squarefree(d)) ok = true;
    else if (d % 4 == 0 && squarefree(d / 4)) {
        long long m = ((d / 4) % 4 + 4) % 4;
        ok = (m == 2 || m == 3);
    }
    if (!ok) throw domain_error("QuadField: not a fundamental discriminant");
    QuadField f;
    f.fundamental_discriminant = d;
    if (d == 1) {  // degenerate base field Q
        f.r1 = 1;
        f.r2 = 0;
    } else if (d > 0) {
        f.r1 = 2;
        f.r2 = 0;
    } else {
        f.r1 = 0;
        f.r2 = 1;
    }
    return f;
}

ModelData ModelData::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open model config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("bad model config " + path + ": " + e.what());
    }
    ModelData m;
    m.curve_label = j.at("curve_label").get<std::string>();
    m.fiber_sizes = j.at("fiber_sizes").get<std::vector<long long>>();
    for (long long q : m.fiber_sizes)
        if (q < 2) throw config_error("model fiber size must be >= 2");
    return m;
}

long long ModelData::c_e(long long conductor_norm) const {
    long long c = conductor_norm;
    for (long long q : fiber_sizes) c *= q;
    return c;
}

double LFunctionSpec::pole_distance(cplx s) const {
    double d = 1e300;
    for (cplx p : known_poles) d = std::min(d, std::abs(s - p));
    return d;
}

namespace {

// xi-style entire core of Lambda_Q: z(z-1) Gamma_R(z) zeta(z).  Symmetric
// under z -> 1-z; the left half-plane is evaluated through that symmetry so
// the trivial-zero/gamma-pole collisions never surface numerically.
cplx xi2(cplx z) {
    if (std::abs(z) < 1e-10 || std::abs(z - 1.0) < 1e-10) return 1.0;
    if (z.real() < 0.5) z = 1.0 - z;
    return z * (z - 1.0) * specfun::gamma_r(z) * riemann_zeta(z);
}

cplx quad_l_value(cplx s, const QuadField& K) {
    return dirichlet_l_kronecker(s, K.fundamental_discriminant);
}

}  // namespace

cplx quad_dirichlet_l(cplx s, const QuadField& K) { return quad_l_value(s, K); }

cplx dedekind_zeta(cplx s, const QuadField& K) {
    if (K.fundamental_discriminant == 1) return riemann_zeta(s);
    return riemann_zeta(s) * quad_l_value(s, K);
}

cplx lambda_K(cplx s, const QuadField& K) {
    long long d = K.fundamental_discriminant;
    if (d == 1) return lambda_q(s);
    double ad = std::abs(static_cast<double>(d));
    cplx gamma_part;
    if (d > 1)  // real quadratic: Gamma_R(s)^2
        gamma_part = std::exp(2.0 * specfun::log_gamma_r(s));
    else  // imaginary quadratic: Gamma_C(s)
        gamma_part = specfun::gamma_c(s);
    return std::exp(0.5 * s * std::log(ad)) * gamma_part * dedekind_zeta(s, K);
}

cplx completed_l(const LFunctionSpec& spec, cplx s) {
    if (spec.coefficients.length() == 0)
        throw domain_error("completed_l: spec carries no Dirichlet coefficients");
    if (spec.gamma.shifts.size() != 1)
        throw domain_error("completed_l: smoothed series implemented for single-shift gamma factors");
    auto [lam, mu] = spec.gamma.shifts[0];
    // cancellation budget: the smoothed terms are O(1) while the sum decays
    // like exp(rate*|t|); refuse once fewer than ~6 digits would survive
    double digits_lost = -spec.gamma.stirling_exp_rate() * std::abs(s.imag()) / std::log(10.0);
    if (digits_lost > 9.5)
        throw precision_error("completed_l: smoothed series loses too many digits at this height");
    double Q = std::sqrt(spec.gamma.conductor_q);
    double d1 = static_cast<double>(spec.weight_d) + 1.0;
    cplx acc = 0.0;
    std::size_t N = spec.coefficients.length();
    bool truncated = false;
    for (std::size_t n = 1; n <= N; ++n) {
        double a_n = spec.coefficients[n];
        if (a_n == 0.0) continue;
        double x_n = std::pow(static_cast<double>(n) / Q, 1.0 / lam);
        if (x_n > 48.0) {
            truncated = true;
            break;
        }
        cplx c = std::log(Q / static_cast<double>(n));
        cplx t1 = std::exp(s * c) * specfun::gamma_upper(lam * s + mu, x_n);
        cplx t2 = std::exp((d1 - s) * c) * specfun::gamma_upper(lam * (d1 - s) + mu, x_n);
        acc += a_n * (t1 + spec.sign_eps * t2);
    }
    if (!truncated) {
        // the tail beyond N must already be negligible
        double x_N = std::pow(static_cast<double>(N + 1) / Q, 1.0 / lam);
        if (x_N < 40.0)
            throw precision_error("completed_l: coefficient list too short for requested accuracy");
    }
    return require_finite(acc, "completed_l");
}

LFunctionSpec build_lambda_q_spec() {
    LFunctionSpec spec;
    spec.gamma = GammaFactor::riemann();
    spec.sign_eps = 1.0;
    spec.weight_d = 0;
    spec.pole_strip_halfwidth_w = 0.55;
    spec.label = "lambda_q";
    spec.decay_exp_rate = -kPi / 4.0;
    spec.coefficients.values.assign(257, 1.0);
    spec.coefficients.values[0] = 0.0;
    spec.coefficients.declared_abscissa = 1.0;
    spec.evaluator = [](cplx s) { return lambda_q(s); };
    spec.dual_evaluator = spec.evaluator;
    spec.known_poles = {cplx(0.0, 0.0), cplx(1.0, 0.0)};
    return spec;
}

LFunctionSpec build_Z_E(const EllipticCurve& curve) {
    auto lam = make_lambda_E(curve);
    LFunctionSpec spec;
    spec.label = "Z_E(" + curve.label + ")";
    spec.gamma = GammaFactor::riemann();  // gamma(s) = Lambda_Q(s) carries this factor
    spec.sign_eps = -static_cast<double>(curve.sign_omega);  // (-1)^{r1+r2} omega, r1=1
    spec.weight_d = 0;
    spec.pole_strip_halfwidth_w = 0.55;
    spec.decay_exp_rate = -kPi / 4.0;
    spec.coefficients = hasse_weil_coeffs(curve, 4096);
    // Z_E(s) = xi2(s) xi2(2s) xi2(2s-1) / (16 pi s^2 (s-1)^2 (2s-1) Lambda(E,2s))
    spec.evaluator = [lam](cplx s) {
        cplx num = xi2(s) * xi2(2.0 * s) * xi2(2.0 * s - 1.0);
        cplx den = 16.0 * kPi * s * s * (s - 1.0) * (s - 1.0) * (2.0 * s - 1.0) * (*lam)(2.0 * s);
        return num / den;
    };
    spec.dual_evaluator = spec.evaluator;
    spec.known_poles = {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(1.0, 0.0)};
    return spec;
}

LFunctionSpec build_Z_E_squared(const EllipticCurve& curve) {
    LFunctionSpec base = build_Z_E(curve);
    LFunctionSpec spec;
    spec.label = "Z_E^2(" + curve.label + ")";
    spec.gamma = base.gamma;
    spec.gamma.shifts.push_back(spec.gamma.shifts[0]);  // Gamma_R(s)^2 shape
    spec.gamma.conductor_q = 1.0 / (kPi * kPi);
    spec.sign_eps = 1.0;
    spec.pole_strip_halfwidth_w = 0.55;
    spec.decay_exp_rate = -kPi / 2.0;
    auto inner = base.evaluator;
    spec.evaluator = [inner](cplx s) {
        cplx z = inner(s);
        return z * z;
    };
    spec.dual_evaluator = spec.evaluator;
    spec.known_poles = base.known_poles;
    return spec;
}

LFunctionSpec build_Z_K(const QuadField& field) {
    LFunctionSpec spec;
    spec.label = "Z_K(" + std::to_string(field.fundamental_discriminant) + ")";
    spec.sign_eps = 1.0;
    spec.pole_strip_halfwidth_w = 0.55;
    spec.decay_exp_rate = -3.0 * kPi / 4.0;
    spec.known_poles = {cplx(0.5, 0.0)};
    if (field.fundamental_discriminant == 1) {
        // Z_K(s) = Lambda(2s) Lambda(2s-1) / Lambda(s)
        //        = xi2(2s) xi2(2s-1) / (4 xi2(s) (2s-1)^2)
        spec.evaluator = [](cplx s) {
            cplx den = 4.0 * xi2(s) * (2.0 * s - 1.0) * (2.0 * s - 1.0);
            return xi2(2.0 * s) * xi2(2.0 * s - 1.0) / den;
        };
    } else {
        QuadField K = field;
        spec.evaluator = [K](cplx s) {
            return lambda_K(2.0 * s, K) * lambda_K(2.0 * s - 1.0, K) / lambda_K(s, K);
        };
    }
    spec.dual_evaluator = spec.evaluator;
    // gamma has a gamma-factor quotient here; only decay_exp_rate models it
    spec.gamma.conductor_q = 1.0;
    spec.gamma.r1 = (field.fundamental_discriminant == 1) ? 1 : field.r1;
    spec.gamma.r2 = field.r2;
    return spec;
}

LFunctionSpec build_Z_model(const EllipticCurve& curve, const ModelData& model) {
    LFunctionSpec base = build_Z_E(curve);
    LFunctionSpec spec;
    spec.label = "Z_model(" + curve.label + ")";
    spec.gamma = base.gamma;
    int J = static_cast<int>(model.fiber_sizes.size());
    // (-1)^{r1+r2+J} omega_E with r1 = 1, r2 = 0 over Q
    double sign = ((1 + J) % 2 == 0) ? 1.0 : -1.0;
    spec.sign_eps = sign * static_cast<double>(curve.sign_omega);
    spec.pole_strip_halfwidth_w = 0.55;
    spec.decay_exp_rate = -kPi / 4.0;
    auto inner = base.evaluator;
    std::vector<double> qs(model.fiber_sizes.begin(), model.fiber_sizes.end());
    spec.evaluator = [inner, qs](cplx s) {
        cplx z = inner(s);
        for (double q : qs) {
            // n_E(2s) factor (1 - q^{1-2s})^{-1} and the c^{-s} rescaling q^{-s}
            cplx f = 1.0 - std::exp((1.0 - 2.0 * s) * std::log(q));
            z *= std::exp(-s * std::log(q)) / f;
        }
        return z;
    };
    spec.dual_evaluator = spec.evaluator;
    spec.known_poles = base.known_poles;
    for (double q : qs)
        for (int k = -8; k <= 8; ++k)
            spec.known_poles.push_back(cplx(0.5, kPi * k / std::log(q)));
    return spec;
}

UVSplit uv_split_E(const EllipticCurve& curve) {
    auto lam = make_lambda_E(curve);
    UVSplit uv;
    uv.U = [](cplx s) { return xi2(s) * xi2(2.0 * s) * xi2(2.0 * s - 1.0) / (16.0 * kPi); };
    uv.V = [lam](cplx s) {
        return (2.0 * s - 1.0) * s * s * (s - 1.0) * (s - 1.0) * (*lam)(2.0 * s);
    };
    return uv;
}

int power_search_m(const LFunctionSpec& spec, int m_max, double delta) {
    if (m_max < 0) throw domain_error("power_search_m: m_max >= 0");
    double w = spec.pole_strip_halfwidth_w;
    double best = 1e300;
    for (int m = 0; m <= m_max; ++m) {
        // Lambda_Q contributes rate -pi/4 and polynomial part (sigma-1)/2 + mu_zeta
        double rate = m * (-kPi / 4.0) + spec.gamma.stirling_exp_rate();
        if (rate < -1e-9) return m;  // exponential decay beats any polynomial bound
        double worst = -1e300;
        for (double sigma = 0.5 - w - 0.1; sigma <= 0.5 + w + 0.1 + 1e-12; sigma += 0.05) {
            double e = m * (0.5 * (sigma - 1.0) + mu_zeta(sigma)) +
                       spec.gamma.stirling_poly_exponent(sigma);
            worst = std::max(worst, e);
        }
        best = std::min(best, worst);
        if (worst <= -(1.0 + delta)) return m;
    }
    throw convergence_error("power_search_m: no m <= " + std::to_string(m_max) +
                            " works; best exponent " + std::to_string(best));
}

}  // namespace mpzeta
