// AVX2+FMA variants of the complex kernels.  Two complex doubles per
// 256-bit register, interleaved [re0, im0, re1, im1].  This translation
// unit is compiled with -mavx2 -mfma; callers gate on supported().

#include <immintrin.h>

#include "fga/kernels.hpp"

namespace fga::kernels::avx2_impl {

bool supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

// (cr + i*ci) * v for a constant complex coefficient, elementwise.
// fmaddsub subtracts in even lanes (real parts) and adds in odd lanes.
inline __m256d cmul_const(__m256d cr, __m256d ci, __m256d v) {
    return _mm256_fmaddsub_pd(cr, v, _mm256_mul_pd(ci, _mm256_permute_pd(v, 0x5)));
}

}  // namespace

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_const(ar, ai, xv)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d xr = _mm256_movedup_pd(xv);
        const __m256d xi = _mm256_permute_pd(xv, 0xF);
        const __m256d ys = _mm256_permute_pd(yv, 0x5);
        // even lanes: xr*yr + xi*yi (real part); odd lanes: xr*yi - xi*yr = -imag
        acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(xr, yv, _mm256_mul_pd(xi, ys)));
    }
    // flip the sign of the odd (imaginary) lanes accumulated above
    acc = _mm256_mul_pd(acc, _mm256_set_pd(-1.0, 1.0, -1.0, 1.0));
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d sum = _mm_add_pd(lo, hi);
    double re = _mm_cvtsd_f64(sum);
    double im = _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
    for (; i < n; ++i) {
        const cplx v = x[i] * std::conj(y[i]);
        re += v.real();
        im += v.imag();
    }
    return cplx(re, im);
}

double norm2sq(const cplx* x, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d sum = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(sum) + _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
    for (; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

void scal(cplx a, cplx* x, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_const(ar, ai, xv));
    }
    for (; i < n; ++i) x[i] *= a;
}

void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d r00 = _mm256_set1_pd(c00.real()), i00 = _mm256_set1_pd(c00.imag());
    const __m256d r01 = _mm256_set1_pd(c01.real()), i01 = _mm256_set1_pd(c01.imag());
    const __m256d r10 = _mm256_set1_pd(c10.real()), i10 = _mm256_set1_pd(c10.imag());
    const __m256d r11 = _mm256_set1_pd(c11.real()), i11 = _mm256_set1_pd(c11.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d nx =
            _mm256_add_pd(cmul_const(r00, i00, xv), cmul_const(r01, i01, yv));
        const __m256d ny =
            _mm256_add_pd(cmul_const(r10, i10, xv), cmul_const(r11, i11, yv));
        _mm256_storeu_pd(xd + 2 * i, nx);
        _mm256_storeu_pd(yd + 2 * i, ny);
    }
    for (; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c00 * xi + c01 * yi;
        y[i] = c10 * xi + c11 * yi;
    }
}

}  // namespace fga::kernels::avx2_impl
