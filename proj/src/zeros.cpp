#include "mpzeta/boundary.hpp"
#include "mpzeta/specfun.hpp"
#include "mpzeta/zeta.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mpzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Riemann-Siegel theta via log Gamma
double rs_theta(double t) {
    cplx lg = specfun::log_gamma(cplx(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(kPi);
}

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + i t), real for real t
double hardy_z(double t) {
    cplx z = riemann_zeta(cplx(0.5, t));
    cplx rot = std::exp(cplx(0.0, rs_theta(t)));
    return (rot * z).real();
}

// continuous phase variation of f along the parametrized segment [0,1]
double phase_variation(const std::function<cplx(double)>& f, int min_steps) {
    double total = 0.0;
    int n = min_steps;
    cplx prev = f(0.0);
    for (int i = 1; i <= n; ++i) {
        cplx cur = f(static_cast<double>(i) / n);
        double d = std::arg(cur / prev);
        if (std::abs(d) > 1.5) {  // refine locally on fast phase swings
            int extra = 16;
            cplx p = prev;
            for (int j = 1; j <= extra; ++j) {
                cplx q = f((static_cast<double>(i) - 1.0 + static_cast<double>(j) / extra) / n);
                total += std::arg(q / p);
                p = q;
            }
        } else {
            total += d;
        }
        prev = cur;
    }
    return total;
}

}  // namespace

ZeroList zeta_zero_scan(double height_limit) {
    if (height_limit > 120.0) throw domain_error("zeta_zero_scan: desk scale tops out at 120");
    ZeroList list;
    list.source = ZeroList::Source::computed;
    list.height_limit = height_limit;
    if (height_limit <= 2.0) return list;
    double step = 0.06;
    double t = 2.0;
    double prev = hardy_z(t);
    while (t < height_limit) {
        double t2 = std::min(t + step, height_limit);
        double cur = hardy_z(t2);
        if (prev == 0.0) prev = 1e-30;
        if (prev * cur < 0.0) {
            double lo = t, hi = t2, flo = prev;
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = hardy_z(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if (hi - lo < 1e-10) break;
            }
            list.ordinates.push_back(0.5 * (lo + hi));
        }
        t = t2;
        prev = cur;
    }
    return list;
}

int zeta_zero_count_argument(double height) {
    // N(T) = theta(T)/pi + 1 + (1/pi) [Delta arg zeta along 2 -> 2+iT -> 1/2+iT]
    double T = height;
    auto seg1 = [T](double u) { return riemann_zeta(cplx(2.0, u * T)); };
    auto seg2 = [T](double u) { return riemann_zeta(cplx(2.0 - 1.5 * u, T)); };
    int steps = std::max(200, static_cast<int>(T * 8));
    double darg = phase_variation(seg1, steps) + phase_variation(seg2, 120);
    double n = rs_theta(T) / kPi + 1.0 + darg / kPi;
    double rounded = std::round(n);
    if (std::abs(n - rounded) > 0.2)
        throw convergence_error("argument-principle count did not land near an integer");
    return static_cast<int>(rounded);
}

ZeroList load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open zeros file: " + path);
    ZeroList list;
    list.source = ZeroList::Source::file;
    std::string line;
    int lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t from = line.find_first_not_of(" \t\r");
        if (from == std::string::npos) continue;
        if (line[from] == '#') continue;
        std::istringstream ss(line);
        double v;
        if (!(ss >> v)) throw config_error("zeros file " + path + ": parse error at line " +
                                           std::to_string(lineno));
        std::string rest;
        if (ss >> rest) throw config_error("zeros file " + path + ": trailing data at line " +
                                           std::to_string(lineno));
        if (v <= 0.0) throw config_error("zeros file " + path + ": non-positive ordinate at line " +
                                         std::to_string(lineno));
        if (v <= prev) throw config_error("zeros file " + path + ": not strictly increasing at line " +
                                          std::to_string(lineno));
        list.ordinates.push_back(v);
        prev = v;
    }
    list.height_limit = list.ordinates.empty() ? 0.0 : list.ordinates.back();
    return list;
}

}  // namespace mpzeta
