#include "fga/kernels.hpp"

#include <cstdlib>

#include "fga/errors.hpp"

namespace fga::kernels {

namespace scalar_impl {

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx v = x[i] * std::conj(y[i]);
        re += v.real();
        im += v.imag();
    }
    return cplx(re, im);
}

double norm2sq(const cplx* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

void scal(cplx a, cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c00 * xi + c01 * yi;
        y[i] = c10 * xi + c11 * yi;
    }
}

}  // namespace scalar_impl

#if defined(FGA_HAVE_AVX2)
namespace avx2_impl {
bool supported();
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
double norm2sq(const cplx* x, std::size_t n);
void scal(cplx a, cplx* x, std::size_t n);
void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n);
}  // namespace avx2_impl
#endif

#if defined(FGA_HAVE_NEON)
namespace neon_impl {
bool supported();
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
double norm2sq(const cplx* x, std::size_t n);
void scal(cplx a, cplx* x, std::size_t n);
void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n);
}  // namespace neon_impl
#endif

namespace {

struct Dispatch {
    Backend backend;
    void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
    cplx (*dotc)(const cplx*, const cplx*, std::size_t);
    double (*norm2sq)(const cplx*, std::size_t);
    void (*scal)(cplx, cplx*, std::size_t);
    void (*rot2)(cplx, cplx, cplx, cplx, cplx*, cplx*, std::size_t);
};

constexpr Dispatch kScalar{Backend::scalar,    scalar_impl::axpy, scalar_impl::dotc,
                           scalar_impl::norm2sq, scalar_impl::scal, scalar_impl::rot2};

Dispatch make_dispatch(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return kScalar;
#if defined(FGA_HAVE_AVX2)
        case Backend::avx2:
            return Dispatch{Backend::avx2,      avx2_impl::axpy, avx2_impl::dotc,
                            avx2_impl::norm2sq, avx2_impl::scal, avx2_impl::rot2};
#endif
#if defined(FGA_HAVE_NEON)
        case Backend::neon:
            return Dispatch{Backend::neon,      neon_impl::axpy, neon_impl::dotc,
                            neon_impl::norm2sq, neon_impl::scal, neon_impl::rot2};
#endif
        default:
            return kScalar;
    }
}

Backend detect_backend() {
    // FGA_KERNEL=scalar|avx2|neon overrides auto-detection.
    if (const char* env = std::getenv("FGA_KERNEL")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
        if (v == "neon" && backend_available(Backend::neon)) return Backend::neon;
        return Backend::scalar;
    }
#if defined(FGA_HAVE_AVX2)
    if (avx2_impl::supported()) return Backend::avx2;
#endif
#if defined(FGA_HAVE_NEON)
    if (neon_impl::supported()) return Backend::neon;
#endif
    return Backend::scalar;
}

Dispatch& dispatch() {
    static Dispatch table = make_dispatch(detect_backend());
    return table;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

bool backend_available(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return true;
#if defined(FGA_HAVE_AVX2)
        case Backend::avx2:
            return avx2_impl::supported();
#endif
#if defined(FGA_HAVE_NEON)
        case Backend::neon:
            return neon_impl::supported();
#endif
        default:
            return false;
    }
}

Backend set_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw InvalidParameterError("set_backend: backend " + backend_name(backend) +
                                    " is not available on this machine");
    }
    const Backend previous = dispatch().backend;
    dispatch() = make_dispatch(backend);
    return previous;
}

std::string backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) { dispatch().axpy(a, x, y, n); }
cplx dotc(const cplx* x, const cplx* y, std::size_t n) { return dispatch().dotc(x, y, n); }
double norm2sq(const cplx* x, std::size_t n) { return dispatch().norm2sq(x, n); }
void scal(cplx a, cplx* x, std::size_t n) { dispatch().scal(a, x, n); }
void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n) {
    dispatch().rot2(c00, c01, c10, c11, x, y, n);
}

}  // namespace fga::kernels
