#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace fga::kernels {

using cplx = std::complex<double>;

// Data-parallel complex kernels behind the dense matrix routines.  A scalar
// reference implementation is always available; on x86-64 an AVX2+FMA
// variant and on AArch64 a NEON variant are selected at runtime.  The
// backends are equivalence-tested against the scalar reference.

enum class Backend { scalar, avx2, neon };

/// Backend currently used by the dispatched entry points.
Backend active_backend();

/// Force a backend (tests, benchmarking).  Throws InvalidParameterError if
/// the requested backend is not available on this machine.  Returns the
/// previously active backend.
Backend set_backend(Backend backend);

/// True when the named backend can run on this machine.
bool backend_available(Backend backend);

std::string backend_name(Backend backend);

/// y[i] += a * x[i]
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);

/// sum_i x[i] * conj(y[i])
cplx dotc(const cplx* x, const cplx* y, std::size_t n);

/// sum_i |x[i]|^2
double norm2sq(const cplx* x, std::size_t n);

/// x[i] *= a
void scal(cplx a, cplx* x, std::size_t n);

/// Simultaneous two-vector update used by Jacobi rotations:
///   x[i], y[i] <- c00*x[i] + c01*y[i], c10*x[i] + c11*y[i]
void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n);

namespace scalar_impl {
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
double norm2sq(const cplx* x, std::size_t n);
void scal(cplx a, cplx* x, std::size_t n);
void rot2(cplx c00, cplx c01, cplx c10, cplx c11, cplx* x, cplx* y, std::size_t n);
}  // namespace scalar_impl

}  // namespace fga::kernels
