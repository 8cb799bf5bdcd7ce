#include "fga/windows.hpp"

#include <cmath>
#include <random>
#include <string>

#include "fga/kernels.hpp"

namespace fga {

namespace {

FrameDiagnostics require_frame(const Signal& g, const Lattice& lattice, const char* where) {
    const FrameDiagnostics diag = frame_bounds(make_gabor_system(g, lattice));
    if (!diag.is_frame) {
        throw NotAFrameError(std::string(where) + ": the Gabor system is not a frame (A=" +
                                 std::to_string(diag.lower_bound) + ", B=" +
                                 std::to_string(diag.upper_bound) + ")",
                             diag);
    }
    return diag;
}

double identity_residual(const OperatorMatrix& s) {
    return frobenius_norm(sub(s, OperatorMatrix::identity(s.rows)));
}

}  // namespace

DualWindowResult canonical_dual(const Signal& g, const Lattice& lattice) {
    require_frame(g, lattice, "canonical_dual");
    const OperatorMatrix s = frame_operator(make_gabor_system(g, lattice));
    DualWindowResult result;
    result.window = make_signal(g.group, matvec(inverse(s), g.values));
    result.residual = identity_residual(frame_type_operator(g, result.window, lattice));
    result.method = DualWindowResult::Method::canonical;
    return result;
}

Signal canonical_tight(const Signal& g, const Lattice& lattice) {
    require_frame(g, lattice, "canonical_tight");
    const OperatorMatrix s = frame_operator(make_gabor_system(g, lattice));
    return make_signal(g.group, matvec(inv_sqrt(s), g.values));
}

std::vector<Signal> dual_window_space(const Signal& g, const Lattice& lattice) {
    require_frame(g, lattice, "dual_window_space");
    const Lattice adj = adjoint_subgroup(lattice);
    const OperatorMatrix d = synthesis_matrix(make_gabor_system(g, adj));
    const SvdResult s = svd(d);
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    const double cutoff = rank_tolerance(d.rows, d.cols, smax);
    int rank = 0;
    for (double v : s.singular_values) {
        if (v > cutoff) ++rank;
    }
    std::vector<Signal> basis;
    for (int j = rank; j < d.rows; ++j) {
        std::vector<cplx> col(static_cast<std::size_t>(d.rows));
        for (int i = 0; i < d.rows; ++i) col[static_cast<std::size_t>(i)] = s.U.at(i, j);
        basis.push_back(make_signal(g.group, std::move(col)));
    }
    return basis;
}

DualOptimalityReport dual_optimality_report(const Signal& g, const Lattice& lattice,
                                            int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameterError("dual_optimality_report: trials must be >= 1");
    }
    const DualWindowResult canonical = canonical_dual(g, lattice);
    const Signal& gd = canonical.window;
    const std::vector<Signal> complement = dual_window_space(g, lattice);
    const GaborSystem dual_sys = make_gabor_system(gd, lattice);

    std::mt19937_64 engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double spread = norm(gd);

    // fixed random probe for the coefficient criterion
    Signal probe = zero_signal(g.group);
    for (auto& v : probe.values) v = cplx(gauss(engine), gauss(engine));
    double probe_coeff_norm = 0.0;
    for (const cplx& c : analyze(probe, dual_sys)) probe_coeff_norm += std::norm(c);

    const double slack = 1e-12;
    DualOptimalityReport report;
    report.trials = trials;
    report.minimal_norm = true;
    report.minimal_coefficients = true;
    report.closest_to_atom = true;
    report.most_likely = true;

    const Signal g_unit = scale(1.0 / norm(g), g);
    const Signal gd_unit = scale(1.0 / norm(gd), gd);
    const double base_norm = norm(gd);
    const double base_dist = norm(sub(g, gd));
    const double base_angle = norm(sub(g_unit, gd_unit));

    for (int t = 0; t < trials; ++t) {
        Signal h = gd;
        for (const Signal& b : complement) {
            const cplx c = spread * cplx(gauss(engine), gauss(engine));
            h = add(h, scale(c, b));
        }
        const double tol = slack * (1.0 + norm(h));
        if (!(base_norm <= norm(h) + tol)) report.minimal_norm = false;
        if (!(base_dist <= norm(sub(g, h)) + tol)) report.closest_to_atom = false;
        const Signal h_unit = scale(1.0 / norm(h), h);
        if (!(base_angle <= norm(sub(g_unit, h_unit)) + tol)) report.most_likely = false;
        double h_coeff_norm = 0.0;
        for (const cplx& c : analyze(probe, make_gabor_system(h, lattice))) {
            h_coeff_norm += std::norm(c);
        }
        if (!(probe_coeff_norm <= h_coeff_norm + slack * (1.0 + h_coeff_norm))) {
            report.minimal_coefficients = false;
        }
    }
    return report;
}

double moore_penrose_check(const GaborSystem& system) {
    const FrameDiagnostics diag = frame_bounds(system);
    if (!diag.is_frame) {
        throw NotAFrameError("moore_penrose_check: the Gabor system is not a frame", diag);
    }
    const OperatorMatrix s = frame_operator(system);
    const OperatorMatrix sinv = inverse(s);
    std::vector<Signal> duals;
    duals.reserve(system.windows.size());
    for (const Signal& w : system.windows) {
        duals.push_back(make_signal(system.group, matvec(sinv, w.values)));
    }
    const GaborSystem dual_sys = make_gabor_system(duals, system.lattice);
    const OperatorMatrix analysis_dual = adjoint(synthesis_matrix(dual_sys));
    const OperatorMatrix synth_pinv = pinv(synthesis_matrix(system));
    return frobenius_norm(sub(analysis_dual, synth_pinv));
}

double moore_penrose_check(const Signal& g, const Lattice& lattice) {
    return moore_penrose_check(make_gabor_system(g, lattice));
}

std::vector<Signal> lowdin_orthonormalize(const std::vector<Signal>& vectors) {
    if (vectors.empty()) {
        throw InvalidParameterError("lowdin_orthonormalize: empty input");
    }
    const GroupSpec& group = vectors.front().group;
    const int m = static_cast<int>(group.order);
    const int n = static_cast<int>(vectors.size());
    OperatorMatrix c(m, n);
    for (int j = 0; j < n; ++j) {
        if (vectors[static_cast<std::size_t>(j)].group != group) {
            throw GroupMismatchError("lowdin_orthonormalize: mixed groups");
        }
        for (int i = 0; i < m; ++i) {
            c.at(i, j) = vectors[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(i)];
        }
    }
    const SvdResult s = svd(c);
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    const double cutoff = rank_tolerance(m, n, smax);
    int rank = 0;
    for (double v : s.singular_values) {
        if (v > cutoff) ++rank;
    }
    if (rank < n) {
        throw RankDeficiencyError(
            "lowdin_orthonormalize: input vectors are linearly dependent (numerical rank " +
                std::to_string(rank) + " of " + std::to_string(n) + ")",
            rank);
    }
    // L = U V*: the first n columns of U rotated by V*.
    std::vector<Signal> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> col(static_cast<std::size_t>(m), cplx(0.0, 0.0));
        for (int l = 0; l < n; ++l) {
            const cplx vlj = std::conj(s.V.at(j, l));
            for (int i = 0; i < m; ++i) {
                col[static_cast<std::size_t>(i)] += s.U.at(i, l) * vlj;
            }
        }
        out.push_back(make_signal(group, std::move(col)));
    }
    return out;
}

OperatorMatrix tight_connecting_isometry(const Signal& h1, const Signal& h2,
                                         const Lattice& lattice) {
    const FrameDiagnostics d1 = frame_bounds(make_gabor_system(h1, lattice));
    const FrameDiagnostics d2 = frame_bounds(make_gabor_system(h2, lattice));
    const double scale = std::max({d1.upper_bound, d2.upper_bound, 1e-300});
    const double tol = 1e-6 * scale;
    const bool tight1 = d1.is_frame && (d1.upper_bound - d1.lower_bound) <= tol;
    const bool tight2 = d2.is_frame && (d2.upper_bound - d2.lower_bound) <= tol;
    if (!tight1 || !tight2 || std::abs(d1.upper_bound - d2.upper_bound) > tol) {
        throw DomainError(
            "tight_connecting_isometry: windows must be tight with equal frame constants "
            "(measured A1=" +
            std::to_string(d1.lower_bound) + " B1=" + std::to_string(d1.upper_bound) +
            " A2=" + std::to_string(d2.lower_bound) + " B2=" + std::to_string(d2.upper_bound) +
            ")");
    }
    const OperatorMatrix c1 = adjoint(synthesis_matrix(make_gabor_system(h1, lattice)));
    const OperatorMatrix c2 = adjoint(synthesis_matrix(make_gabor_system(h2, lattice)));
    return matmul(c2, pinv(c1));
}

}  // namespace fga
