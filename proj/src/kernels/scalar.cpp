#include "mpzeta/kernels.hpp"
#include "mpzeta/specfun.hpp"

#include <cmath>

namespace mpzeta::kernels::scalar {

double dot_exp(const double* w, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::exp(x[i]);
    return acc;
}

double dot_k0(const double* w, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * specfun::bessel_k0(x[i]);
    return acc;
}

double dot_k1(const double* w, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * specfun::detail::bessel_k1(x[i]);
    return acc;
}

}  // namespace mpzeta::kernels::scalar
