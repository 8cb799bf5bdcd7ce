#include "fga/spreading.hpp"

#include <cmath>

#include "fga/kernels.hpp"

namespace fga {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* where) {
    if (a != b) {
        throw GroupMismatchError(std::string(where) + ": arguments live on different groups");
    }
}

void require_square(const GroupSpec& group, const OperatorMatrix& a, const char* where) {
    if (a.rows != a.cols || a.rows != static_cast<int>(group.order)) {
        throw ShapeError(std::string(where) + ": matrix must be |G| x |G|");
    }
}

std::vector<cplx> root_table(const GroupSpec& group) {
    const std::int64_t l = group.lcm_order();
    std::vector<cplx> roots(static_cast<std::size_t>(l));
    for (std::int64_t m = 0; m < l; ++m) {
        roots[m] = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(l));
    }
    return roots;
}

}  // namespace

SpreadingFunction make_spreading(const GroupSpec& group, std::vector<cplx> values) {
    if (static_cast<std::int64_t>(values.size()) != plane_size(group)) {
        throw ShapeError("make_spreading: value count does not match |G|^2");
    }
    return SpreadingFunction{group, std::move(values)};
}

SpreadingFunction zero_spreading(const GroupSpec& group) {
    return SpreadingFunction{group,
                             std::vector<cplx>(static_cast<std::size_t>(plane_size(group)))};
}

PlaneFunction to_plane(const SpreadingFunction& eta) {
    return PlaneFunction{eta.group, eta.values};
}

SpreadingFunction to_spreading(const PlaneFunction& f) {
    return SpreadingFunction{f.group, f.values};
}

SpreadingFunction spreading_of(const GroupSpec& group, const OperatorMatrix& a) {
    require_square(group, a, "spreading_of");
    const double inv_order = 1.0 / static_cast<double>(group.order);
    SpreadingFunction eta = zero_spreading(group);
    for (std::int64_t idx = 0; idx < plane_size(group); ++idx) {
        const TFPoint p = tf_point_at(group, idx);
        eta.values[static_cast<std::size_t>(idx)] =
            inv_order * frobenius_inner(a, tf_shift_matrix(p, group));
    }
    return eta;
}

OperatorMatrix operator_of(const SpreadingFunction& eta) {
    const GroupSpec& group = eta.group;
    const std::int64_t n = group.order;
    const auto roots = root_table(group);
    OperatorMatrix a(static_cast<int>(n), static_cast<int>(n));
    // accumulate eta(k, r) * pi(k, r); pi(k, r) has c_G(x, r) at (x + k, x)
    for (std::int64_t idx = 0; idx < plane_size(group); ++idx) {
        const cplx c = eta.values[static_cast<std::size_t>(idx)];
        if (c == cplx(0.0, 0.0)) continue;
        const TFPoint p = tf_point_at(group, idx);
        for (std::int64_t x = 0; x < n; ++x) {
            const GroupElement ex = element_at(group, x);
            const std::int64_t row = index_of(add(ex, p.time));
            a.at(static_cast<int>(row), static_cast<int>(x)) +=
                c * roots[character_exponent(ex, p.freq)];
        }
    }
    return a;
}

SpreadingFunction kernel_to_spreading(const GroupSpec& group, const OperatorMatrix& kernel) {
    require_square(group, kernel, "kernel_to_spreading");
    const std::int64_t n = group.order;
    const std::int64_t l = group.lcm_order();
    const auto roots = root_table(group);
    const double inv_order = 1.0 / static_cast<double>(n);
    SpreadingFunction eta = zero_spreading(group);
    for (std::int64_t kt = 0; kt < n; ++kt) {
        const GroupElement k = element_at(group, kt);
        for (std::int64_t rf = 0; rf < n; ++rf) {
            const GroupElement r = element_at(group, rf);
            cplx acc(0.0, 0.0);
            for (std::int64_t i = 0; i < n; ++i) {
                const GroupElement ei = element_at(group, i);
                const GroupElement diag = sub(ei, k);
                const std::int64_t m = character_exponent(diag, r);
                acc += kernel.at(static_cast<int>(i), static_cast<int>(index_of(diag))) *
                       roots[(l - m) % l];
            }
            const TFPoint p{k, r};
            eta.values[static_cast<std::size_t>(index_of(p))] = inv_order * acc;
        }
    }
    return eta;
}

OperatorMatrix spreading_to_kernel(const SpreadingFunction& eta) {
    const GroupSpec& group = eta.group;
    const std::int64_t n = group.order;
    const auto roots = root_table(group);
    OperatorMatrix kernel(static_cast<int>(n), static_cast<int>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement ei = element_at(group, i);
        for (std::int64_t j = 0; j < n; ++j) {
            const GroupElement ej = element_at(group, j);
            const GroupElement diff = sub(ei, ej);
            cplx acc(0.0, 0.0);
            for (std::int64_t rf = 0; rf < n; ++rf) {
                const GroupElement r = element_at(group, rf);
                const TFPoint p{diff, r};
                acc += eta.values[static_cast<std::size_t>(index_of(p))] *
                       roots[character_exponent(ej, r)];
            }
            kernel.at(static_cast<int>(i), static_cast<int>(j)) = acc;
        }
    }
    return kernel;
}

SpreadingFunction twisted_convolution(const SpreadingFunction& a, const SpreadingFunction& b) {
    require_same_group(a.group, b.group, "twisted_convolution");
    const GroupSpec& group = a.group;
    const auto roots = root_table(group);
    SpreadingFunction out = zero_spreading(group);
    for (std::int64_t midx = 0; midx < plane_size(group); ++midx) {
        const TFPoint m = tf_point_at(group, midx);
        cplx acc(0.0, 0.0);
        for (std::int64_t pidx = 0; pidx < plane_size(group); ++pidx) {
            const cplx av = a.values[static_cast<std::size_t>(pidx)];
            if (av == cplx(0.0, 0.0)) continue;
            const TFPoint p = tf_point_at(group, pidx);
            const TFPoint q = sub(m, p);
            const cplx bv = b.values[static_cast<std::size_t>(index_of(q))];
            if (bv == cplx(0.0, 0.0)) continue;
            acc += av * bv * roots[character_exponent(q.time, p.freq)];
        }
        out.values[static_cast<std::size_t>(midx)] = acc;
    }
    return out;
}

SpreadingFunction twisted_involution(const SpreadingFunction& a) {
    const GroupSpec& group = a.group;
    const auto roots = root_table(group);
    SpreadingFunction out = zero_spreading(group);
    for (std::int64_t idx = 0; idx < plane_size(group); ++idx) {
        const TFPoint p = tf_point_at(group, idx);
        const cplx v = a.values[static_cast<std::size_t>(index_of(neg(p)))];
        out.values[static_cast<std::size_t>(idx)] =
            roots[character_exponent(p.time, p.freq)] * std::conj(v);
    }
    return out;
}

OperatorMatrix best_tf_approximation(const GroupSpec& group, const OperatorMatrix& a,
                                     const std::vector<TFPoint>& support) {
    require_square(group, a, "best_tf_approximation");
    const SpreadingFunction eta = spreading_of(group, a);
    SpreadingFunction masked = zero_spreading(group);
    for (const TFPoint& p : support) {
        require_same_group(p.time.group, group, "best_tf_approximation");
        const std::size_t idx = static_cast<std::size_t>(index_of(p));
        masked.values[idx] = eta.values[idx];
    }
    return operator_of(masked);
}

OperatorMatrix conjugate_by_shift(const GroupSpec& group, const OperatorMatrix& a,
                                  const TFPoint& p) {
    require_square(group, a, "conjugate_by_shift");
    require_same_group(p.time.group, group, "conjugate_by_shift");
    const OperatorMatrix u = tf_shift_matrix(p, group);
    return matmul(matmul(u, a), adjoint(u));
}

OperatorMatrix rank_one(const Signal& g, const Signal& h) {
    require_same_group(g.group, h.group, "rank_one");
    const int n = static_cast<int>(g.group.order);
    OperatorMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const cplx gi = g.values[static_cast<std::size_t>(i)];
        if (gi == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = gi * std::conj(h.values[static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

PlaneFunction symplectic_fourier(const PlaneFunction& f) {
    const GroupSpec& group = f.group;
    const std::int64_t np = plane_size(group);
    const auto roots = root_table(group);
    const double scale = 1.0 / static_cast<double>(group.order);  // |GxG^|^{-1/2}
    PlaneFunction out = zero_plane_function(group);

    // cache the plane points once; the transform is O(|G|^4)
    std::vector<TFPoint> pts;
    pts.reserve(static_cast<std::size_t>(np));
    for (std::int64_t idx = 0; idx < np; ++idx) pts.push_back(tf_point_at(group, idx));

    for (std::int64_t i = 0; i < np; ++i) {
        cplx acc(0.0, 0.0);
        for (std::int64_t j = 0; j < np; ++j) {
            const std::int64_t m = symplectic_exponent(pts[i], pts[j]);
            acc += roots[m] * f.values[static_cast<std::size_t>(j)];
        }
        out.values[static_cast<std::size_t>(i)] = scale * acc;
    }
    return out;
}

PlaneFunction symplectic_translate(const PlaneFunction& f, const TFPoint& p) {
    require_same_group(f.group, p.time.group, "symplectic_translate");
    PlaneFunction out = zero_plane_function(f.group);
    for (std::int64_t idx = 0; idx < plane_size(f.group); ++idx) {
        const TFPoint q = tf_point_at(f.group, idx);
        out.values[static_cast<std::size_t>(idx)] =
            f.values[static_cast<std::size_t>(index_of(sub(q, p)))];
    }
    return out;
}

PlaneFunction symplectic_modulate(const PlaneFunction& f, const TFPoint& p) {
    require_same_group(f.group, p.time.group, "symplectic_modulate");
    const auto roots = root_table(f.group);
    PlaneFunction out = f;
    for (std::int64_t idx = 0; idx < plane_size(f.group); ++idx) {
        const TFPoint q = tf_point_at(f.group, idx);
        out.values[static_cast<std::size_t>(idx)] *= roots[symplectic_exponent(q, p)];
    }
    return out;
}

std::pair<cplx, cplx> poisson_sides(const PlaneFunction& f, const Lattice& lattice) {
    require_same_group(f.group, lattice.group, "poisson_sides");
    cplx lhs(0.0, 0.0);
    for (const TFPoint& lam : lattice.elements) {
        lhs += f.values[static_cast<std::size_t>(index_of(lam))];
    }
    const PlaneFunction fhat = symplectic_fourier(f);
    const Lattice adj = adjoint_subgroup(lattice);
    cplx rhs(0.0, 0.0);
    for (const TFPoint& mu : adj.elements) {
        rhs += fhat.values[static_cast<std::size_t>(index_of(mu))];
    }
    rhs *= static_cast<double>(lattice.size()) / static_cast<double>(f.group.order);
    return {lhs, rhs};
}

}  // namespace fga
