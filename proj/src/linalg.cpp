#include "fga/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fga/kernels.hpp"

namespace fga {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_shape(bool ok, const char* what) {
    if (!ok) throw ShapeError(what);
}

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

// Unitary 2x2 used by both Jacobi solvers.  Given the Hermitian block
//   [[a, g], [conj(g), b]]   (a, b real, g != 0)
// returns R = [[c, s], [-s*conj(u), c*conj(u)]] with u = g/|g| such that
// R^H B R is diagonal.
struct JacobiRotation {
    double c;
    cplx s_times_u_conj;   // s * conj(u)
    cplx c_times_u_conj;   // c * conj(u)
    cplx s_plain;          // s (real, kept as cplx for kernel calls)
};

JacobiRotation make_rotation(double a, double b, cplx g) {
    const double absg = std::abs(g);
    const cplx u = g / absg;
    const double tau = (b - a) / (2.0 * absg);
    const double t = sign_of(tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    JacobiRotation r;
    r.c = c;
    r.s_plain = cplx(s, 0.0);
    r.s_times_u_conj = s * std::conj(u);
    r.c_times_u_conj = c * std::conj(u);
    return r;
}

}  // namespace

OperatorMatrix OperatorMatrix::identity(int n) {
    OperatorMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

double rank_tolerance(int rows, int cols, double s_max) {
    return static_cast<double>(std::max(rows, cols)) * kEps * s_max;
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_shape(a.cols == b.rows, "matmul: inner dimensions do not match");
    OperatorMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int l = 0; l < a.cols; ++l) {
            const cplx v = a.at(i, l);
            if (v != cplx(0.0, 0.0)) {
                kernels::axpy(v, b.row(l), c.row(i), static_cast<std::size_t>(b.cols));
            }
        }
    }
    return c;
}

OperatorMatrix adjoint(const OperatorMatrix& a) {
    OperatorMatrix b(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            b.at(j, i) = std::conj(a.at(i, j));
        }
    }
    return b;
}

cplx trace(const OperatorMatrix& a) {
    require_shape(a.rows == a.cols, "trace: matrix must be square");
    cplx t(0.0, 0.0);
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

cplx frobenius_inner(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_shape(a.rows == b.rows && a.cols == b.cols,
                  "frobenius_inner: shapes do not match");
    // tr(A B*) = sum_ij a_ij conj(b_ij)
    return kernels::dotc(a.entries.data(), b.entries.data(), a.entries.size());
}

double frobenius_norm(const OperatorMatrix& a) {
    return std::sqrt(kernels::norm2sq(a.entries.data(), a.entries.size()));
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_shape(a.rows == b.rows && a.cols == b.cols, "add: shapes do not match");
    OperatorMatrix c = a;
    kernels::axpy(cplx(1.0, 0.0), b.entries.data(), c.entries.data(), c.entries.size());
    return c;
}

OperatorMatrix sub(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_shape(a.rows == b.rows && a.cols == b.cols, "sub: shapes do not match");
    OperatorMatrix c = a;
    kernels::axpy(cplx(-1.0, 0.0), b.entries.data(), c.entries.data(), c.entries.size());
    return c;
}

OperatorMatrix scale(cplx s, const OperatorMatrix& a) {
    OperatorMatrix c = a;
    kernels::scal(s, c.entries.data(), c.entries.size());
    return c;
}

std::vector<cplx> matvec(const OperatorMatrix& a, const std::vector<cplx>& x) {
    require_shape(static_cast<int>(x.size()) == a.cols,
                  "matvec: vector length does not match matrix columns");
    std::vector<cplx> xc(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xc[i] = std::conj(x[i]);
    std::vector<cplx> y(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        y[i] = kernels::dotc(a.row(i), xc.data(), xc.size());
    }
    return y;
}

namespace {

// Column-major scratch for the one-sided Jacobi sweep.
struct ColMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    ColMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    cplx* col(int j) { return data.data() + static_cast<std::size_t>(j) * rows; }
    const cplx* col(int j) const {
        return data.data() + static_cast<std::size_t>(j) * rows;
    }
};

SvdResult svd_tall(const OperatorMatrix& a) {
    const int m = a.rows;
    const int n = a.cols;

    ColMatrix w(m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w.col(j)[i] = a.at(i, j);
    }
    ColMatrix v(n, n);
    for (int j = 0; j < n; ++j) v.col(j)[j] = cplx(1.0, 0.0);

    const double norm_a = std::sqrt(kernels::norm2sq(w.data.data(), w.data.size()));
    const double off_tol = 1e-15;
    const int max_sweeps = 60;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double ni = kernels::norm2sq(w.col(i), m);
                const double nj = kernels::norm2sq(w.col(j), m);
                // g = (c_i)^H (c_j)
                const cplx g = kernels::dotc(w.col(j), w.col(i), m);
                if (std::abs(g) <= off_tol * std::sqrt(ni * nj) || ni == 0.0 || nj == 0.0) {
                    continue;
                }
                const JacobiRotation r = make_rotation(ni, nj, g);
                // columns <- [c_i, c_j] * R
                kernels::rot2(cplx(r.c, 0.0), -r.s_times_u_conj, r.s_plain,
                              r.c_times_u_conj, w.col(i), w.col(j), m);
                kernels::rot2(cplx(r.c, 0.0), -r.s_times_u_conj, r.s_plain,
                              r.c_times_u_conj, v.col(i), v.col(j), n);
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (sweep == max_sweeps) {
        throw NumericError("svd: one-sided Jacobi did not converge after " +
                               std::to_string(max_sweeps) + " sweeps",
                           max_sweeps);
    }

    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = std::sqrt(kernels::norm2sq(w.col(j), m));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sigma[x] > sigma[y]; });

    SvdResult result;
    result.singular_values.resize(n);
    result.U = OperatorMatrix(m, m);
    result.V = OperatorMatrix(n, n);

    // Normalize the nonzero columns into U; zero columns are filled below.
    const double sigma_floor = norm_a > 0.0 ? norm_a * kEps * m : 0.0;
    int filled = 0;
    for (int pos = 0; pos < n; ++pos) {
        const int j = order[pos];
        result.singular_values[pos] = sigma[j];
        for (int i = 0; i < n; ++i) result.V.at(i, pos) = v.col(j)[i];
        if (sigma[j] > sigma_floor && sigma[j] > 0.0) {
            const double inv = 1.0 / sigma[j];
            for (int i = 0; i < m; ++i) result.U.at(i, pos) = w.col(j)[i] * inv;
            filled = pos + 1;
        }
    }
    // Complete U to a unitary basis (rank-deficient input or m > n).
    std::vector<std::vector<cplx>> basis;
    basis.reserve(m);
    for (int pos = 0; pos < filled; ++pos) {
        std::vector<cplx> col(m);
        for (int i = 0; i < m; ++i) col[i] = result.U.at(i, pos);
        basis.push_back(std::move(col));
    }
    int next = filled;
    for (int e = 0; e < m && next < m; ++e) {
        std::vector<cplx> cand(m, cplx(0.0, 0.0));
        cand[e] = cplx(1.0, 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& bvec : basis) {
                const cplx proj = kernels::dotc(cand.data(), bvec.data(), m);
                kernels::axpy(-proj, bvec.data(), cand.data(), m);
            }
        }
        const double nrm = std::sqrt(kernels::norm2sq(cand.data(), m));
        if (nrm > 1e-6) {
            kernels::scal(cplx(1.0 / nrm, 0.0), cand.data(), m);
            for (int i = 0; i < m; ++i) result.U.at(i, next) = cand[i];
            basis.push_back(std::move(cand));
            ++next;
        }
    }
    return result;
}

}  // namespace

SvdResult svd(const OperatorMatrix& a) {
    require_shape(a.rows > 0 && a.cols > 0, "svd: empty matrix");
    if (a.rows >= a.cols) return svd_tall(a);
    // A = (A*)* : from A* = U1 S V1* we get A = V1 S U1*.
    SvdResult t = svd_tall(adjoint(a));
    SvdResult result;
    result.U = std::move(t.V);
    result.V = std::move(t.U);
    result.singular_values = std::move(t.singular_values);
    return result;
}

double schatten_norm(const OperatorMatrix& a, double p) {
    if (!(p >= 1.0) && !std::isinf(p)) {
        throw InvalidParameterError("schatten_norm: p must satisfy p >= 1 (or p = inf)");
    }
    const SvdResult s = svd(a);
    if (s.singular_values.empty()) return 0.0;
    if (std::isinf(p)) return s.singular_values.front();
    double acc = 0.0;
    for (double v : s.singular_values) acc += std::pow(v, p);
    return std::pow(acc, 1.0 / p);
}

HermitianEig hermitian_eig(const OperatorMatrix& a) {
    require_shape(a.rows == a.cols, "hermitian_eig: matrix must be square");
    const int n = a.rows;
    const double norm_a = frobenius_norm(a);

    // Hermitian defect check, then symmetrize.
    OperatorMatrix h(n, n);
    double defect_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx sym = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            defect_sq += std::norm(a.at(i, j) - sym);
            h.at(i, j) = sym;
        }
    }
    if (std::sqrt(defect_sq) > 1e-12 * std::max(norm_a, 1e-300) && norm_a > 0.0) {
        throw DomainError("hermitian_eig: input is not Hermitian within tolerance");
    }

    OperatorMatrix q = OperatorMatrix::identity(n);
    const double off_tol = 1e-15 * std::max(norm_a, std::numeric_limits<double>::min());
    const int max_sweeps = 60;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const cplx apq = h.at(p, r);
                if (std::abs(apq) <= off_tol) continue;
                const JacobiRotation rot =
                    make_rotation(h.at(p, p).real(), h.at(r, r).real(), apq);
                const cplx c00(rot.c, 0.0);
                const cplx c01 = -rot.s_times_u_conj;
                const cplx c10 = rot.s_plain;
                const cplx c11 = rot.c_times_u_conj;
                // T = H R  (columns p, r)
                for (int i = 0; i < n; ++i) {
                    const cplx hp = h.at(i, p);
                    const cplx hr = h.at(i, r);
                    h.at(i, p) = c00 * hp + c01 * hr;
                    h.at(i, r) = c10 * hp + c11 * hr;
                }
                // H <- R^H T  (rows p, r); R^H = [[c, -s u], [s, c u]]
                kernels::rot2(c00, -std::conj(rot.s_times_u_conj), rot.s_plain,
                              std::conj(rot.c_times_u_conj), h.row(p), h.row(r),
                              static_cast<std::size_t>(n));
                // the rotation annihilates the (p, r) entry; pin it exactly
                h.at(p, r) = cplx(0.0, 0.0);
                h.at(r, p) = cplx(0.0, 0.0);
                h.at(p, p) = cplx(h.at(p, p).real(), 0.0);
                h.at(r, r) = cplx(h.at(r, r).real(), 0.0);
                // Q <- Q R  (columns p, r)
                for (int i = 0; i < n; ++i) {
                    const cplx qp = q.at(i, p);
                    const cplx qr = q.at(i, r);
                    q.at(i, p) = c00 * qp + c01 * qr;
                    q.at(i, r) = c10 * qp + c11 * qr;
                }
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (sweep == max_sweeps) {
        throw NumericError("hermitian_eig: Jacobi iteration did not converge after " +
                               std::to_string(max_sweeps) + " sweeps",
                           max_sweeps);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return h.at(x, x).real() < h.at(y, y).real();
    });

    HermitianEig result;
    result.eigenvalues.resize(n);
    result.vectors = OperatorMatrix(n, n);
    for (int pos = 0; pos < n; ++pos) {
        result.eigenvalues[pos] = h.at(order[pos], order[pos]).real();
        for (int i = 0; i < n; ++i) result.vectors.at(i, pos) = q.at(i, order[pos]);
    }
    return result;
}

OperatorMatrix inverse(const OperatorMatrix& a) {
    require_shape(a.rows == a.cols, "inverse: matrix must be square");
    const int n = a.rows;
    double max_abs = 0.0;
    for (const cplx& v : a.entries) max_abs = std::max(max_abs, std::abs(v));
    const double piv_tol = rank_tolerance(n, n, max_abs);

    // Gauss-Jordan with partial pivoting on [A | I].
    OperatorMatrix w = a;
    OperatorMatrix inv = OperatorMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(w.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(w.at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= piv_tol) {
            throw SingularMatrixError(
                "inverse: matrix is singular to working precision (pivot magnitude " +
                    std::to_string(best) + ")",
                best);
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        }
        const cplx d = w.at(k, k);
        const cplx dinv = cplx(1.0, 0.0) / d;
        kernels::scal(dinv, w.row(k), static_cast<std::size_t>(n));
        kernels::scal(dinv, inv.row(k), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const cplx f = w.at(i, k);
            if (f == cplx(0.0, 0.0)) continue;
            kernels::axpy(-f, w.row(k), w.row(i), static_cast<std::size_t>(n));
            kernels::axpy(-f, inv.row(k), inv.row(i), static_cast<std::size_t>(n));
        }
    }
    return inv;
}

OperatorMatrix inv_sqrt(const OperatorMatrix& a) {
    const HermitianEig eig = hermitian_eig(a);
    const int n = a.rows;
    const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    const double cutoff = rank_tolerance(n, n, lmax);
    for (double l : eig.eigenvalues) {
        if (!(l > cutoff)) {
            throw SingularMatrixError(
                "inv_sqrt: matrix is not positive definite (eigenvalue " +
                    std::to_string(l) + ")",
                l);
        }
    }
    // Q diag(1/sqrt(l)) Q*
    OperatorMatrix w = eig.vectors;
    for (int j = 0; j < n; ++j) {
        const cplx f(1.0 / std::sqrt(eig.eigenvalues[j]), 0.0);
        for (int i = 0; i < n; ++i) w.at(i, j) *= f;
    }
    return matmul(w, adjoint(eig.vectors));
}

OperatorMatrix pinv(const OperatorMatrix& a) {
    const SvdResult s = svd(a);
    const int m = a.rows;
    const int n = a.cols;
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    const double cutoff = rank_tolerance(m, n, smax);
    // V diag(1/s) U*
    OperatorMatrix p(n, m);
    const int k = static_cast<int>(s.singular_values.size());
    for (int l = 0; l < k; ++l) {
        const double sv = s.singular_values[l];
        if (sv <= cutoff || sv == 0.0) continue;
        const double inv = 1.0 / sv;
        for (int i = 0; i < n; ++i) {
            const cplx vi = s.V.at(i, l) * inv;
            for (int j = 0; j < m; ++j) {
                p.at(i, j) += vi * std::conj(s.U.at(j, l));
            }
        }
    }
    return p;
}

}  // namespace fga
