#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fga/errors.hpp"

namespace fga {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
struct OperatorMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> entries;

    OperatorMatrix() = default;
    OperatorMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    cplx& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
    cplx* row(int i) { return entries.data() + static_cast<std::size_t>(i) * cols; }
    const cplx* row(int i) const {
        return entries.data() + static_cast<std::size_t>(i) * cols;
    }

    static OperatorMatrix zero(int r, int c) { return OperatorMatrix(r, c); }
    static OperatorMatrix identity(int n);
};

struct SvdResult {
    OperatorMatrix U;                     // rows x rows, unitary
    std::vector<double> singular_values;  // min(rows, cols), non-increasing
    OperatorMatrix V;                     // cols x cols, unitary
};

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    OperatorMatrix vectors;           // unitary; A = Q diag(l) Q*
};

/// Uniform numerical-rank cutoff: max(rows, cols) * eps * s_max.
double rank_tolerance(int rows, int cols, double s_max);

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix adjoint(const OperatorMatrix& a);
cplx trace(const OperatorMatrix& a);
cplx frobenius_inner(const OperatorMatrix& a, const OperatorMatrix& b);
double frobenius_norm(const OperatorMatrix& a);

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix sub(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scale(cplx s, const OperatorMatrix& a);
std::vector<cplx> matvec(const OperatorMatrix& a, const std::vector<cplx>& x);

/// Full singular value decomposition A = U diag(s) V* by one-sided Jacobi.
SvdResult svd(const OperatorMatrix& a);

/// Schatten p-norm, p in [1, inf]; p = inf is the operator norm.
double schatten_norm(const OperatorMatrix& a, double p);

/// Eigendecomposition of a Hermitian matrix (symmetrized first; inputs
/// farther than 1e-12 * ||A||_F from Hermitian are rejected).
HermitianEig hermitian_eig(const OperatorMatrix& a);

OperatorMatrix inverse(const OperatorMatrix& a);

/// Inverse square root of a Hermitian positive definite matrix, via the
/// eigendecomposition.
OperatorMatrix inv_sqrt(const OperatorMatrix& a);

/// Moore-Penrose pseudoinverse via the SVD with the rank_tolerance cutoff.
OperatorMatrix pinv(const OperatorMatrix& a);

}  // namespace fga
