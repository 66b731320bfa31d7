#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpzeta/kernels.hpp"
#include "mpzeta/specfun.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace mpzeta;

namespace {

struct Arrays {
    std::vector<double> w, x;
};

Arrays random_arrays(std::size_t n, double x_lo, double x_hi, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uw(-3.0, 3.0), ux(x_lo, x_hi);
    Arrays a;
    a.w.resize(n);
    a.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.w[i] = uw(rng);
        a.x[i] = ux(rng);
    }
    return a;
}

}  // namespace

TEST_CASE("scalar kernels match direct formulas") {
    auto a = random_arrays(257, -40.0, 2.0, 1);
    double ref = 0.0;
    for (std::size_t i = 0; i < a.w.size(); ++i) ref += a.w[i] * std::exp(a.x[i]);
    CHECK(std::abs(kernels::scalar::dot_exp(a.w.data(), a.x.data(), a.w.size()) - ref) <
          1e-12 * std::abs(ref) + 1e-14);

    auto b = random_arrays(100, 0.1, 30.0, 2);
    double refk = 0.0;
    for (std::size_t i = 0; i < b.w.size(); ++i) refk += b.w[i] * specfun::bessel_k0(b.x[i]);
    CHECK(std::abs(kernels::scalar::dot_k0(b.w.data(), b.x.data(), b.w.size()) - refk) <
          1e-12 * std::abs(refk) + 1e-14);
}

#if defined(MPZETA_HAVE_AVX2_TU)
TEST_CASE("avx2 kernels agree with scalar reference") {
    if (!kernels::avx2::supported()) {
        MESSAGE("AVX2 not available on this host; dispatch equivalence skipped");
        return;
    }
    for (unsigned seed : {3u, 4u, 5u}) {
        auto a = random_arrays(1023, -60.0, 3.0, seed);
        double s = kernels::scalar::dot_exp(a.w.data(), a.x.data(), a.w.size());
        double v = kernels::avx2::dot_exp(a.w.data(), a.x.data(), a.w.size());
        double l1 = 0.0;
        for (std::size_t i = 0; i < a.w.size(); ++i) l1 += std::abs(a.w[i] * std::exp(a.x[i]));
        CHECK(std::abs(s - v) < 1e-13 * l1 + 1e-300);

        auto b = random_arrays(513, 0.05, 120.0, seed + 10);
        double sk = kernels::scalar::dot_k0(b.w.data(), b.x.data(), b.w.size());
        double vk = kernels::avx2::dot_k0(b.w.data(), b.x.data(), b.w.size());
        double l1k = 0.0;
        for (std::size_t i = 0; i < b.w.size(); ++i)
            l1k += std::abs(b.w[i] * specfun::bessel_k0(b.x[i]));
        CHECK(std::abs(sk - vk) < 1e-12 * l1k + 1e-300);

        double sk1 = kernels::scalar::dot_k1(b.w.data(), b.x.data(), b.w.size());
        double vk1 = kernels::avx2::dot_k1(b.w.data(), b.x.data(), b.w.size());
        double l1k1 = 0.0;
        for (std::size_t i = 0; i < b.w.size(); ++i)
            l1k1 += std::abs(b.w[i] * specfun::detail::bessel_k1(b.x[i]));
        CHECK(std::abs(sk1 - vk1) < 1e-12 * l1k1 + 1e-300);
    }
}

TEST_CASE("avx2 underflow lanes flush to zero like scalar") {
    if (!kernels::avx2::supported()) return;
    std::vector<double> w = {1.0, 1.0, 1.0, 1.0, 1.0};
    std::vector<double> x = {-800.0, -1000.0, -5000.0, -1.0, 0.5};
    double s = kernels::scalar::dot_exp(w.data(), x.data(), w.size());
    double v = kernels::avx2::dot_exp(w.data(), x.data(), w.size());
    CHECK(std::abs(s - v) < 1e-13 * std::abs(s));
}
#endif

TEST_CASE("runtime dispatch selects a backend and can be forced") {
    const char* active = kernels::active_backend();
    CHECK((std::string(active) == "avx2" || std::string(active) == "scalar"));
    CHECK(kernels::force_backend("scalar"));
    CHECK(std::string(kernels::active_backend()) == "scalar");
    auto a = random_arrays(63, -5.0, 1.0, 9);
    double s = kernels::dot_exp(a.w.data(), a.x.data(), a.w.size());
    kernels::force_backend(nullptr);  // back to auto-detect
    double v = kernels::dot_exp(a.w.data(), a.x.data(), a.w.size());
    double l1 = 0.0;
    for (std::size_t i = 0; i < a.w.size(); ++i) l1 += std::abs(a.w[i] * std::exp(a.x[i]));
    CHECK(std::abs(s - v) < 1e-13 * l1);
    CHECK_FALSE(kernels::force_backend("no-such-backend"));
}
