// NEON variants of the complex kernels for AArch64.  One complex double per
// 128-bit register, [re, im].

#include <arm_neon.h>

#include "fga/kernels.hpp"

namespace fga::kernels::neon_impl {

bool supported() {
    return true;  // NEON is architecturally guaranteed on AArch64
}

namespace {

const float64x2_t kConjSign = {-1.0, 1.0};

// (cr + i*ci) * v for a constant complex coefficient.
inline float64x2_t cmul_const(float64x2_t cr, float64x2_t ci, float64x2_t v) {
    // [cr*re - ci*im, cr*im + ci*re]
    const float64x2_t swapped = vextq_f64(v, v, 1);
    return vfmaq_f64(vmulq_f64(vmulq_f64(ci, swapped), kConjSign), cr, v);
}

}  // namespace

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t ar = vdupq_n_f64(a.real());
    const float64x2_t ai = vdupq_n_f64(a.imag());
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul_const(ar, ai, xv)));
    }
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        // re: xr*yr + xi*yi, summed across lanes at the end
        acc_re = vfmaq_f64(acc_re, xv, yv);
        // [xi*yr, xr*yi]; im = lane0 - lane1 at the end
        acc_im = vfmaq_f64(acc_im, vextq_f64(xv, xv, 1), yv);
    }
    const double re = vaddvq_f64(acc_re);
    const double im = vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1);
    return cplx(re, im);
}

double norm2sq(const cplx* x, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        acc = vfmaq_f64(acc, xv, xv);
    }
    return vaddvq_f64(acc);
}

void scal(cplx a, cplx* x, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    const float64x2_t ar = vdupq_n_f64(a.real());
    const float64x2_t ai = vdupq_n_f64(a.imag());
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        vst1q_f64(xd + 2 * i, cmul_const(ar, ai, xv));
    }
}

void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t r00 = vdupq_n_f64(c00.real()), i00 = vdupq_n_f64(c00.imag());
    const float64x2_t r01 = vdupq_n_f64(c01.real()), i01 = vdupq_n_f64(c01.imag());
    const float64x2_t r10 = vdupq_n_f64(c10.real()), i10 = vdupq_n_f64(c10.imag());
    const float64x2_t r11 = vdupq_n_f64(c11.real()), i11 = vdupq_n_f64(c11.imag());
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        const float64x2_t nx =
            vaddq_f64(cmul_const(r00, i00, xv), cmul_const(r01, i01, yv));
        const float64x2_t ny =
            vaddq_f64(cmul_const(r10, i10, xv), cmul_const(r11, i11, yv));
        vst1q_f64(xd + 2 * i, nx);
        vst1q_f64(yd + 2 * i, ny);
    }
}

}  // namespace fga::kernels::neon_impl
