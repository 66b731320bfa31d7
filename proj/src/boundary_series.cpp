#include "mpzeta/kernels.hpp"
#include "mpzeta/mellin.hpp"

#include <cmath>
#include <map>
#include <mutex>

// Boundary-term series for Z_E and Z_E^2.
//
//   H_E(t)   = 2 sum_n b_n [exp(-pi q^2 n^2 e^{-2t}) + w_E exp(t - pi q^2 n^2 e^{2t})]
//   h^(2)(t) = 4 sum_n w_n [K0(a n e^{-t}) - e^t K0(a n e^{t})]
//
// with b = (1 * c), w = (sigma_0 * c) (display convention, a = 2pi) or
// w = (sigma_0 * c * c) (Z_E^2 convention, a = 2pi q^2).  Derivatives are
// taken term-by-term; the t-dependence sits in y = (scale) e^{-2t} resp.
// z = (a n) e^{+-t}, so each d/dt maps polynomial coefficient vectors:
//   Gaussian:  e^{-y} P(y)        ->  e^{-y} 2y(P - P')         (y' = -2y)
//   Gaussian2: e^{t-y} Q(y)       ->  e^{t-y} [Q + 2y(Q' - Q)]  (y' = +2y)
//   Bessel:    A K0 + B K1 at z(t) with z' = -z:
//                A -> z(B - A'),  B -> zA - zB' + B  ... see apply below
// (K0' = -K1, K1' = -K0 - K1/z).

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using Poly = std::vector<double>;  // coefficients, constant term first

Poly poly_deriv(const Poly& p) {
    Poly d(std::max<std::size_t>(p.size() - 1, 1), 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_scale(const Poly& a, double c) {
    Poly r = a;
    for (double& v : r) v *= c;
    return r;
}

Poly poly_mul_y(const Poly& a) {
    Poly r(a.size() + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
    return r;
}

double poly_eval(const Poly& p, double y) {
    double acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * y + p[i];
    return acc;
}

// Gaussian pieces: P_{k+1} = 2y (P_k - P_k'), Q_{k+1} = Q_k + 2y (Q_k' - Q_k)
Poly gauss_minus_step(const Poly& p) { return poly_scale(poly_mul_y(poly_add(p, poly_scale(poly_deriv(p), -1.0))), 2.0); }
Poly gauss_plus_step(const Poly& q) {
    return poly_add(q, poly_scale(poly_mul_y(poly_add(poly_deriv(q), poly_scale(q, -1.0))), 2.0));
}

struct BesselPair {
    Poly A, B;  // A(z) K0(z) + B(z) K1(z)
};

// z(t) = a e^{-t}:  d/dt [A K0 + B K1] = K0 (zB - zA') + K1 (zA - zB' + B)
BesselPair bessel_minus_step(const BesselPair& ab) {
    BesselPair r;
    r.A = poly_mul_y(poly_add(ab.B, poly_scale(poly_deriv(ab.A), -1.0)));
    r.B = poly_add(poly_mul_y(poly_add(ab.A, poly_scale(poly_deriv(ab.B), -1.0))), ab.B);
    return r;
}

// w(t) = a e^{t}, with the e^{t} prefactor kept outside:
// d/dt [e^t (A K0 + B K1)] = e^t [K0 (A + wA' - wB) + K1 (wB' - wA)]
BesselPair bessel_plus_step(const BesselPair& ab) {
    BesselPair r;
    r.A = poly_add(ab.A, poly_mul_y(poly_add(poly_deriv(ab.A), poly_scale(ab.B, -1.0))));
    r.B = poly_mul_y(poly_add(poly_deriv(ab.B), poly_scale(ab.A, -1.0)));
    return r;
}

std::size_t gaussian_nmax(double coeff, std::size_t cap) {
    // smallest n with coeff * n^2 > 48 (plus slack for coefficient growth)
    if (coeff <= 0.0) return cap;
    double n = std::sqrt(52.0 / coeff) + 4.0;
    if (n >= static_cast<double>(cap)) return cap;
    return static_cast<std::size_t>(n);
}

}  // namespace

ThetaBoundaryE::ThetaBoundaryE(const EllipticCurve& curve, std::size_t n_cap) : curve_(curve) {
    double q = static_cast<double>(curve.conductor);
    q2pi_ = kPi * q * q;
    auto e = hasse_weil_e(curve, static_cast<std::size_t>(std::sqrt(static_cast<double>(n_cap))) + 1);
    b_.assign(n_cap + 1, 0.0);
    for (std::size_t d = 1; d * d <= n_cap; ++d) {
        if (e[d] == 0) continue;
        for (std::size_t n = d * d; n <= n_cap; n += d * d) b_[n] += static_cast<double>(e[d]);
    }
}

SeriesTruncation ThetaBoundaryE::plan(double t) const {
    double u2 = std::exp(-2.0 * t);
    std::size_t cap = b_.size() - 1;
    std::size_t n1 = gaussian_nmax(q2pi_ * u2, cap);
    if (n1 >= cap && q2pi_ * u2 * static_cast<double>(cap) * static_cast<double>(cap) < 45.0)
        throw precision_error("theta series: t too negative for the coefficient cap");
    double a = q2pi_ * u2;
    double nn = static_cast<double>(n1);
    SeriesTruncation tr;
    tr.n_max = n1;
    tr.tail_bound = 8.0 * (nn + 1.0) * (nn + 1.0) * std::exp(-a * (nn + 1.0) * (nn + 1.0));
    return tr;
}

double ThetaBoundaryE::eval(double t) const { return deriv(t, 0); }

double ThetaBoundaryE::deriv(double t, int k) const {
    if (k < 0 || k > 6) throw domain_error("theta deriv: order 0..6");
    Poly P{1.0}, Q{1.0};
    for (int i = 0; i < k; ++i) {
        P = gauss_minus_step(P);
        Q = gauss_plus_step(Q);
    }
    double u2 = std::exp(-2.0 * t);   // e^{-2t}
    double v2 = std::exp(2.0 * t);    // e^{+2t}
    std::size_t cap = b_.size() - 1;
    std::size_t n1 = gaussian_nmax(q2pi_ * u2, cap);
    std::size_t n2 = gaussian_nmax(q2pi_ * v2, cap);
    if ((n1 >= cap && q2pi_ * u2 * static_cast<double>(cap * cap) < 45.0) ||
        (n2 >= cap && q2pi_ * v2 * static_cast<double>(cap * cap) < 45.0))
        throw precision_error("theta series: truncation cap insufficient at this t");
    std::vector<double> w, x;
    w.reserve(n1 + n2);
    x.reserve(n1 + n2);
    for (std::size_t n = 1; n <= n1; ++n) {
        if (b_[n] == 0.0) continue;
        double y = q2pi_ * u2 * static_cast<double>(n) * static_cast<double>(n);
        w.push_back(2.0 * b_[n] * poly_eval(P, y));
        x.push_back(-y);
    }
    double omega = static_cast<double>(curve_.sign_omega);
    double et = std::exp(t);
    for (std::size_t n = 1; n <= n2; ++n) {
        if (b_[n] == 0.0) continue;
        double y = q2pi_ * v2 * static_cast<double>(n) * static_cast<double>(n);
        w.push_back(2.0 * omega * et * b_[n] * poly_eval(Q, y));
        x.push_back(-y);
    }
    return kernels::dot_exp(w.data(), x.data(), w.size());
}

BoundaryTerm ThetaBoundaryE::as_boundary_term() const {
    auto self = *this;  // value copy keeps the weight table alive
    BoundaryTerm h;
    h.label = "H_E(" + curve_.label + ")";
    h.sign_eps = -static_cast<double>(curve_.sign_omega);  // (-1)^{r1+r2} omega over Q
    h.growth_exponent = 1.05;
    h.evaluator = [self](double xx) { return self.eval(-std::log(xx)); };
    return h;
}

BesselBoundaryE2::BesselBoundaryE2(const EllipticCurve& curve, Convention conv, std::size_t n_cap)
    : curve_(curve) {
    std::size_t K = static_cast<std::size_t>(std::sqrt(static_cast<double>(n_cap))) + 1;
    auto e = hasse_weil_e(curve, K);
    w_.assign(n_cap + 1, 0.0);
    if (conv == Convention::display) {
        scale_ = 2.0 * kPi;
        // w_n = sum_{d^2 | n} e_d sigma_0(n / d^2)
        std::vector<double> sig0(n_cap + 1, 0.0);
        for (std::size_t d = 1; d <= n_cap; ++d)
            for (std::size_t n = d; n <= n_cap; n += d) sig0[n] += 1.0;
        for (std::size_t d = 1; d * d <= n_cap; ++d) {
            if (e[d] == 0) continue;
            for (std::size_t n = d * d; n <= n_cap; n += d * d)
                w_[n] += static_cast<double>(e[d]) * sig0[n / (d * d)];
        }
    } else {
        double q = static_cast<double>(curve.conductor);
        scale_ = 2.0 * kPi * q * q;
        // coefficients of zeta(s)^2 zeta_E(2s)^2: sigma_0 * (e x e on squares)
        std::vector<double> ee(K + 1, 0.0);
        for (std::size_t a = 1; a <= K; ++a) {
            if (e[a] == 0) continue;
            for (std::size_t b = 1; a * b <= K; ++b) ee[a * b] += static_cast<double>(e[a] * e[b]);
        }
        std::vector<double> sig0(n_cap + 1, 0.0);
        for (std::size_t d = 1; d <= n_cap; ++d)
            for (std::size_t n = d; n <= n_cap; n += d) sig0[n] += 1.0;
        for (std::size_t d = 1; d * d <= n_cap; ++d) {
            if (ee[d] == 0.0) continue;
            for (std::size_t n = d * d; n <= n_cap; n += d * d)
                w_[n] += ee[d] * sig0[n / (d * d)];
        }
    }
}

SeriesTruncation BesselBoundaryE2::plan(double t) const {
    std::size_t cap = w_.size() - 1;
    double z1 = scale_ * std::exp(-t);  // argument of the slow branch
    double need = 52.0 / std::min(z1, scale_ * std::exp(t));
    SeriesTruncation tr;
    if (need >= static_cast<double>(cap))
        throw precision_error("bessel series: truncation cap insufficient at this t");
    tr.n_max = static_cast<std::size_t>(need) + 2;
    double zc = std::min(z1, scale_ * std::exp(t)) * static_cast<double>(tr.n_max + 1);
    tr.tail_bound = 16.0 * static_cast<double>(tr.n_max + 1) * std::exp(-zc) / std::sqrt(zc);
    return tr;
}

double BesselBoundaryE2::eval(double t) const { return deriv(t, 0); }

double BesselBoundaryE2::deriv(double t, int k) const {
    if (k < 0 || k > 6) throw domain_error("bessel deriv: order 0..6");
    BesselPair M{{1.0}, {0.0}}, Pp{{1.0}, {0.0}};
    for (int i = 0; i < k; ++i) {
        M = bessel_minus_step(M);
        Pp = bessel_plus_step(Pp);
    }
    std::size_t cap = w_.size() - 1;
    double zm = scale_ * std::exp(-t);
    double zp = scale_ * std::exp(t);
    auto nmax = [cap](double z0) {
        double need = 52.0 / z0;
        return need >= static_cast<double>(cap) ? cap : static_cast<std::size_t>(need) + 2;
    };
    std::size_t n1 = nmax(zm), n2 = nmax(zp);
    if ((n1 >= cap && zm * static_cast<double>(cap) < 45.0) ||
        (n2 >= cap && zp * static_cast<double>(cap) < 45.0))
        throw precision_error("bessel series: truncation cap insufficient at this t");
    std::vector<double> w0, x0, w1, x1;
    for (std::size_t n = 1; n <= n1; ++n) {
        if (w_[n] == 0.0) continue;
        double z = zm * static_cast<double>(n);
        double c = 4.0 * w_[n];
        w0.push_back(c * poly_eval(M.A, z));
        x0.push_back(z);
        w1.push_back(c * poly_eval(M.B, z));
        x1.push_back(z);
    }
    double et = std::exp(t);
    for (std::size_t n = 1; n <= n2; ++n) {
        if (w_[n] == 0.0) continue;
        double z = zp * static_cast<double>(n);
        double c = -4.0 * w_[n] * et;
        w0.push_back(c * poly_eval(Pp.A, z));
        x0.push_back(z);
        w1.push_back(c * poly_eval(Pp.B, z));
        x1.push_back(z);
    }
    return kernels::dot_k0(w0.data(), x0.data(), w0.size()) +
           kernels::dot_k1(w1.data(), x1.data(), w1.size());
}

BoundaryTerm BesselBoundaryE2::as_boundary_term() const {
    auto self = *this;
    BoundaryTerm h;
    h.label = "h2(" + curve_.label + ")";
    h.sign_eps = 1.0;
    h.growth_exponent = 1.05;
    h.evaluator = [self](double xx) { return self.eval(-std::log(xx)); };
    return h;
}

namespace {

const ThetaBoundaryE& theta_instance(const EllipticCurve& curve) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ThetaBoundaryE>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(curve.label);
    if (it == cache.end())
        it = cache.emplace(curve.label, std::make_unique<ThetaBoundaryE>(curve)).first;
    return *it->second;
}

const BesselBoundaryE2& bessel_instance(const EllipticCurve& curve) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<BesselBoundaryE2>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(curve.label);
    if (it == cache.end())
        it = cache.emplace(curve.label, std::make_unique<BesselBoundaryE2>(curve)).first;
    return *it->second;
}

}  // namespace

double theta_boundary_E(const EllipticCurve& curve, double t, const SeriesTruncation& trunc) {
    const auto& inst = theta_instance(curve);
    auto plan = inst.plan(t);
    if (trunc.n_max > 0 && plan.n_max > trunc.n_max)
        throw precision_error("theta_boundary_E: requested truncation too short for this t");
    return inst.eval(t);
}

double bessel_boundary_E2(const EllipticCurve& curve, double t, const SeriesTruncation& trunc) {
    const auto& inst = bessel_instance(curve);
    auto plan = inst.plan(t);
    if (trunc.n_max > 0 && plan.n_max > trunc.n_max)
        throw precision_error("bessel_boundary_E2: requested truncation too short for this t");
    return inst.eval(t);
}

}  // namespace mpzeta
