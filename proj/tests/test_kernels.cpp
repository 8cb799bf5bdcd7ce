#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fga/kernels.hpp"
#include "oracles.hpp"

using namespace fga;
using fga::testing::Rng;
namespace k = fga::kernels;

namespace {

// Odd lengths exercise the SIMD remainder paths.
const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 7, 8, 64, 255, 1024};

struct BackendGuard {
    k::Backend previous;
    explicit BackendGuard(k::Backend b) : previous(k::set_backend(b)) {}
    ~BackendGuard() { k::set_backend(previous); }
};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
    Rng rng(101);
    for (std::size_t n : kLengths) {
        auto x = rng.complex_vector(n);
        auto y = rng.complex_vector(n);
        const cplx a = rng.complex_gauss();

        // dotc
        cplx expect(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) expect += x[i] * std::conj(y[i]);
        CHECK(std::abs(k::scalar_impl::dotc(x.data(), y.data(), n) - expect) <=
              1e-12 * (1.0 + std::abs(expect)));

        // axpy
        auto y2 = y;
        k::scalar_impl::axpy(a, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(y2[i] - (y[i] + a * x[i])) < 1e-14);
        }

        // norm2sq
        double nexpect = 0.0;
        for (std::size_t i = 0; i < n; ++i) nexpect += std::norm(x[i]);
        CHECK(k::scalar_impl::norm2sq(x.data(), n) ==
              doctest::Approx(nexpect).epsilon(1e-12));
    }
}

TEST_CASE("dispatched backends agree with the scalar reference") {
    for (k::Backend b : {k::Backend::avx2, k::Backend::neon}) {
        if (!k::backend_available(b)) continue;
        INFO("backend ", k::backend_name(b));
        BackendGuard guard(b);
        Rng rng(202);
        for (std::size_t n : kLengths) {
            auto x = rng.complex_vector(n);
            auto y = rng.complex_vector(n);
            const cplx a = rng.complex_gauss();
            const double scale = 1.0 + std::sqrt(static_cast<double>(n));

            CHECK(std::abs(k::dotc(x.data(), y.data(), n) -
                           k::scalar_impl::dotc(x.data(), y.data(), n)) <= 1e-13 * scale);

            auto y_simd = y;
            auto y_ref = y;
            k::axpy(a, x.data(), y_simd.data(), n);
            k::scalar_impl::axpy(a, x.data(), y_ref.data(), n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(y_simd[i] - y_ref[i]) < 1e-13);
            }

            CHECK(std::abs(k::norm2sq(x.data(), n) -
                           k::scalar_impl::norm2sq(x.data(), n)) <= 1e-12 * scale);

            auto xs = x;
            auto xr = x;
            k::scal(a, xs.data(), n);
            k::scalar_impl::scal(a, xr.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(xs[i] - xr[i]) < 1e-13);

            const cplx c00 = rng.complex_gauss(), c01 = rng.complex_gauss();
            const cplx c10 = rng.complex_gauss(), c11 = rng.complex_gauss();
            auto u1 = x, v1 = y, u2 = x, v2 = y;
            k::rot2(c00, c01, c10, c11, u1.data(), v1.data(), n);
            k::scalar_impl::rot2(c00, c01, c10, c11, u2.data(), v2.data(), n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(u1[i] - u2[i]) < 1e-12);
                CHECK(std::abs(v1[i] - v2[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("set_backend rejects unavailable backends") {
#if !defined(__aarch64__)
    CHECK_THROWS_AS(k::set_backend(k::Backend::neon), InvalidParameterError);
#endif
    const k::Backend prev = k::set_backend(k::Backend::scalar);
    CHECK(k::active_backend() == k::Backend::scalar);
    k::set_backend(prev);
}
