#include "fga/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "fga/kernels.hpp"

namespace fga {

namespace {

void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* where) {
    if (a != b) {
        throw GroupMismatchError(std::string(where) + ": arguments live on different groups");
    }
}

}  // namespace

GaborSystem make_gabor_system(std::vector<Signal> windows, Lattice lattice) {
    if (windows.empty()) {
        throw InvalidParameterError("make_gabor_system: at least one window is required");
    }
    for (const Signal& w : windows) {
        require_same_group(w.group, lattice.group, "make_gabor_system");
    }
    GaborSystem sys;
    sys.group = lattice.group;
    sys.windows = std::move(windows);
    sys.lattice = std::move(lattice);
    return sys;
}

GaborSystem make_gabor_system(const Signal& window, const Lattice& lattice) {
    return make_gabor_system(std::vector<Signal>{window}, lattice);
}

OperatorMatrix synthesis_matrix(const GaborSystem& system) {
    const int n = static_cast<int>(system.group.order);
    const int cols = static_cast<int>(system.size());
    OperatorMatrix d(n, cols);
    int col = 0;
    for (const Signal& w : system.windows) {
        for (const TFPoint& lam : system.lattice.elements) {
            const Signal shifted = tf_shift(lam, w);
            for (int i = 0; i < n; ++i) {
                d.at(i, col) = shifted.values[static_cast<std::size_t>(i)];
            }
            ++col;
        }
    }
    return d;
}

std::vector<cplx> analyze(const Signal& f, const GaborSystem& system) {
    require_same_group(f.group, system.group, "analyze");
    std::vector<cplx> coeff;
    coeff.reserve(static_cast<std::size_t>(system.size()));
    for (const Signal& w : system.windows) {
        for (const TFPoint& lam : system.lattice.elements) {
            coeff.push_back(inner(f, tf_shift(lam, w)));
        }
    }
    return coeff;
}

OperatorMatrix frame_operator(const GaborSystem& system) {
    const int n = static_cast<int>(system.group.order);
    OperatorMatrix s(n, n);
    for (const Signal& w : system.windows) {
        for (const TFPoint& lam : system.lattice.elements) {
            const Signal shifted = tf_shift(lam, w);
            // S += shifted * shifted^H, row i accumulated by axpy
            for (int i = 0; i < n; ++i) {
                const cplx gi = shifted.values[static_cast<std::size_t>(i)];
                if (gi == cplx(0.0, 0.0)) continue;
                for (int j = 0; j < n; ++j) {
                    s.at(i, j) += gi * std::conj(shifted.values[static_cast<std::size_t>(j)]);
                }
            }
        }
    }
    return s;
}

OperatorMatrix frame_type_operator(const Signal& g, const Signal& h, const Lattice& lattice) {
    require_same_group(g.group, h.group, "frame_type_operator");
    require_same_group(g.group, lattice.group, "frame_type_operator");
    const int n = static_cast<int>(g.group.order);
    OperatorMatrix s(n, n);
    for (const TFPoint& lam : lattice.elements) {
        const Signal sg = tf_shift(lam, g);
        const Signal sh = tf_shift(lam, h);
        for (int i = 0; i < n; ++i) {
            const cplx gi = sg.values[static_cast<std::size_t>(i)];
            if (gi == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                s.at(i, j) += gi * std::conj(sh.values[static_cast<std::size_t>(j)]);
            }
        }
    }
    return s;
}

OperatorMatrix gram_matrix(const GaborSystem& system) {
    const OperatorMatrix d = synthesis_matrix(system);
    return matmul(adjoint(d), d);
}

FrameDiagnostics frame_bounds(const GaborSystem& system) {
    const HermitianEig eig = hermitian_eig(frame_operator(system));
    FrameDiagnostics diag;
    diag.upper_bound = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    diag.lower_bound = eig.eigenvalues.empty() ? 0.0 : std::max(0.0, eig.eigenvalues.front());
    const double tol = rank_tolerance(static_cast<int>(system.group.order),
                                      static_cast<int>(system.group.order), diag.upper_bound);
    diag.is_frame = diag.lower_bound > tol && diag.upper_bound > 0.0;
    diag.condition_number = diag.is_frame ? diag.upper_bound / diag.lower_bound : 0.0;
    return diag;
}

LatticeCoefficients janssen_coefficients(const Signal& g, const Signal& h,
                                         const Lattice& lattice) {
    require_same_group(g.group, h.group, "janssen_coefficients");
    require_same_group(g.group, lattice.group, "janssen_coefficients");
    LatticeCoefficients out;
    out.lattice = adjoint_subgroup(lattice);
    out.values.reserve(out.lattice.elements.size());
    const double factor =
        static_cast<double>(lattice.size()) / static_cast<double>(g.group.order);
    for (const TFPoint& mu : out.lattice.elements) {
        out.values.push_back(factor * inner(g, tf_shift(mu, h)));
    }
    return out;
}

OperatorMatrix janssen_reconstruction(const LatticeCoefficients& coefficients) {
    const GroupSpec& group = coefficients.lattice.group;
    SpreadingFunction eta = zero_spreading(group);
    for (std::size_t i = 0; i < coefficients.lattice.elements.size(); ++i) {
        eta.values[static_cast<std::size_t>(index_of(coefficients.lattice.elements[i]))] =
            coefficients.values[i];
    }
    return operator_of(eta);
}

bool wexler_raz_is_dual(const Signal& g, const Signal& h, const Lattice& lattice, double tol) {
    require_same_group(g.group, h.group, "wexler_raz_is_dual");
    require_same_group(g.group, lattice.group, "wexler_raz_is_dual");
    const Lattice adj = adjoint_subgroup(lattice);
    const double target =
        static_cast<double>(g.group.order) / static_cast<double>(lattice.size());
    for (const TFPoint& mu : adj.elements) {
        const cplx v = inner(g, tf_shift(mu, h));
        const cplx expect = (index_of(mu) == 0) ? cplx(target, 0.0) : cplx(0.0, 0.0);
        if (std::abs(v - expect) > tol) return false;
    }
    return true;
}

std::pair<cplx, cplx> figa_sides(const Signal& f1, const Signal& f2, const Signal& g1,
                                 const Signal& g2, const Lattice& lattice) {
    require_same_group(f1.group, f2.group, "figa_sides");
    require_same_group(f1.group, g1.group, "figa_sides");
    require_same_group(f1.group, g2.group, "figa_sides");
    require_same_group(f1.group, lattice.group, "figa_sides");

    cplx lhs(0.0, 0.0);
    for (const TFPoint& lam : lattice.elements) {
        lhs += inner(f1, tf_shift(lam, g1)) * std::conj(inner(f2, tf_shift(lam, g2)));
    }
    const Lattice adj = adjoint_subgroup(lattice);
    cplx rhs(0.0, 0.0);
    for (const TFPoint& mu : adj.elements) {
        rhs += inner(g2, tf_shift(mu, g1)) * std::conj(inner(f2, tf_shift(mu, f1)));
    }
    rhs *= static_cast<double>(lattice.size()) / static_cast<double>(f1.group.order);
    return {lhs, rhs};
}

LatticeCoefficients lattice_twisted_convolution(const LatticeCoefficients& a,
                                                const LatticeCoefficients& b) {
    if (a.lattice.group != b.lattice.group || a.lattice.size() != b.lattice.size() ||
        !std::equal(a.lattice.elements.begin(), a.lattice.elements.end(),
                    b.lattice.elements.begin(),
                    [](const TFPoint& x, const TFPoint& y) { return x == y; })) {
        throw GroupMismatchError(
            "lattice_twisted_convolution: coefficient maps live on different lattices");
    }
    const Lattice& lat = a.lattice;
    std::unordered_map<std::int64_t, std::size_t> pos;
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
        pos[index_of(lat.elements[i])] = i;
    }
    LatticeCoefficients out;
    out.lattice = lat;
    out.values.assign(lat.elements.size(), cplx(0.0, 0.0));
    // phase convention inherited from the global twisted convolution:
    // (a nat b)(l) = sum_mu a(l - mu) b(mu) c_G(mu.time, (l - mu).freq)
    for (std::size_t li = 0; li < lat.elements.size(); ++li) {
        const TFPoint& l = lat.elements[li];
        cplx acc(0.0, 0.0);
        for (std::size_t mi = 0; mi < lat.elements.size(); ++mi) {
            const TFPoint& mu = lat.elements[mi];
            const TFPoint diff = sub(l, mu);
            const auto it = pos.find(index_of(diff));
            if (it == pos.end()) continue;  // cannot happen on a subgroup
            acc += a.values[it->second] * b.values[mi] * character(mu.time, diff.freq);
        }
        out.values[li] = acc;
    }
    return out;
}

RonShenReport ron_shen_report(const Signal& g, const Lattice& lattice) {
    require_same_group(g.group, lattice.group, "ron_shen_report");
    RonShenReport report;

    const GaborSystem primal = make_gabor_system(g, lattice);
    const FrameDiagnostics diag = frame_bounds(primal);
    report.frame_lower = diag.lower_bound;
    report.frame_upper = diag.upper_bound;
    report.is_frame = diag.is_frame;

    const Lattice adj = adjoint_subgroup(lattice);
    const GaborSystem dual = make_gabor_system(g, adj);
    const HermitianEig gram_eig = hermitian_eig(gram_matrix(dual));
    report.riesz_upper = gram_eig.eigenvalues.empty() ? 0.0 : gram_eig.eigenvalues.back();
    report.riesz_lower =
        gram_eig.eigenvalues.empty() ? 0.0 : std::max(0.0, gram_eig.eigenvalues.front());
    const double tol = rank_tolerance(static_cast<int>(adj.size()),
                                      static_cast<int>(adj.size()), report.riesz_upper);
    report.adjoint_is_riesz = report.riesz_lower > tol && report.riesz_upper > 0.0;
    report.ratio = report.frame_lower > 0.0 ? report.riesz_lower / report.frame_lower : 0.0;
    return report;
}

}  // namespace fga
