#pragma once

#include "mpzeta/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mpzeta {

// Dirichlet coefficients a_1..a_N (dense, 1-based through operator[]).
struct DirichletCoefficients {
    std::vector<double> values;  // values[0] unused, values[n] = a_n
    double declared_abscissa = 1.0;
    std::size_t length() const { return values.empty() ? 0 : values.size() - 1; }
    double operator[](std::size_t n) const { return values[n]; }
};

struct EllipticCurve {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    long long conductor = 0;
    int sign_omega = 1;  // sign of Lambda(E,s) = omega Lambda(E,2-s)
    std::string label;

    long long discriminant() const;
    static EllipticCurve from_json_file(const std::string& path);
    static EllipticCurve named(const std::string& label);  // 11a1 / 37a1 / 389a1
};

// trace of Frobenius; for bad primes the multiplicative/additive type is
// read off the reduced singular cubic (split +1, nonsplit -1, additive 0)
long long ec_ap(const EllipticCurve& curve, long long p);

// a_n for n <= N via the Euler-product recursion and multiplicativity
std::vector<long long> ec_an_int(const EllipticCurve& curve, std::size_t N);
DirichletCoefficients ec_an(const EllipticCurve& curve, std::size_t N);

// e_k with zeta_E(s) = zeta(s) zeta(s-1) / L(E,s) = sum_k e_k k^{-s}
std::vector<long long> hasse_weil_e(const EllipticCurve& curve, std::size_t K);

// c_m with zeta_E(2s) = sum_m c_m m^{-s}; supported on squares, c_{k^2} = e_k
DirichletCoefficients hasse_weil_coeffs(const EllipticCurve& curve, std::size_t M);

// Dirichlet inverse b of a (a*b = identity), exact integer arithmetic
std::vector<long long> dirichlet_inverse(const std::vector<long long>& a);

// coefficient cache: CSV "n,a_n" rows keyed by (label, depth)
std::vector<long long> ec_an_cached(const EllipticCurve& curve, std::size_t N,
                                    const std::string& cache_dir);

}  // namespace mpzeta
