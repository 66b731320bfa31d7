#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mpzeta {

using cplx = std::complex<double>;

// Evaluation hit a pole or left the domain of the operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested tolerance cannot be met (tail bound, cancellation, truncation).
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or series failed to converge.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration or input file.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool finite(cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline cplx require_finite(cplx v, const char* what) {
    if (!finite(v)) throw precision_error(std::string(what) + ": non-finite result");
    return v;
}

inline double require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw precision_error(std::string(what) + ": non-finite result");
    return v;
}

}  // namespace mpzeta
