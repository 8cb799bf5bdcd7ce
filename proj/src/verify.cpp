#include "fga/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fga/windows.hpp"

namespace fga {

namespace {

struct SuiteRng {
    std::mt19937_64 engine;
    std::normal_distribution<double> gauss{0.0, 1.0};

    explicit SuiteRng(std::uint64_t seed) : engine(seed) {}

    cplx next() { return cplx(gauss(engine), gauss(engine)); }

    Signal signal(const GroupSpec& g) {
        Signal f = zero_signal(g);
        for (auto& v : f.values) v = next();
        return f;
    }

    PlaneFunction plane(const GroupSpec& g) {
        PlaneFunction f = zero_plane_function(g);
        for (auto& v : f.values) v = next();
        return f;
    }

    OperatorMatrix matrix(int n) {
        OperatorMatrix m(n, n);
        for (auto& v : m.entries) v = next();
        return m;
    }

    TFPoint point(const GroupSpec& g) {
        std::uniform_int_distribution<std::int64_t> d(0, plane_size(g) - 1);
        return tf_point_at(g, d(engine));
    }
};

double rel(double err, double scale) { return err / (scale > 0.0 ? scale : 1.0); }

Lattice full_plane_lattice(const GroupSpec& g) {
    std::vector<TFPoint> gens;
    for (std::size_t j = 0; j < g.orders.size(); ++j) {
        std::vector<std::int64_t> e(g.orders.size(), 0);
        e[j] = 1;
        gens.push_back(TFPoint{make_element(g, e), zero_element(g)});
        gens.push_back(TFPoint{zero_element(g), make_element(g, e)});
    }
    return enumerate_subgroup(g, gens);
}

}  // namespace

std::vector<Lattice> lattice_battery(const GroupSpec& group, std::uint64_t seed,
                                     int random_sets) {
    std::vector<Lattice> battery;
    battery.push_back(enumerate_subgroup(group, {}));
    battery.push_back(full_plane_lattice(group));
    if (group.orders.size() == 1) {
        const std::int64_t n = group.orders[0];
        for (std::int64_t a = 1; a <= n; ++a) {
            if (n % a != 0) continue;
            for (std::int64_t b = 1; b <= n; ++b) {
                if (n % b != 0) continue;
                battery.push_back(separable_lattice(group, a, b));
            }
        }
    }
    SuiteRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < random_sets; ++t) {
        std::vector<TFPoint> gens;
        std::uniform_int_distribution<int> count(1, 2);
        const int c = count(rng.engine);
        for (int i = 0; i < c; ++i) gens.push_back(rng.point(group));
        battery.push_back(enumerate_subgroup(group, gens));
    }
    return battery;
}

std::vector<IdentityResult> run_identity_suite(const GroupSpec& group, std::uint64_t seed,
                                               double tolerance) {
    SuiteRng rng(seed);
    const int n = static_cast<int>(group.order);
    const double order = static_cast<double>(group.order);
    const std::vector<Lattice> battery = lattice_battery(group, seed);

    std::vector<IdentityResult> results;
    auto push = [&](const std::string& name, double residual) {
        results.push_back({name, residual, residual <= tolerance});
    };

    // moyal
    {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Signal f1 = rng.signal(group), f2 = rng.signal(group);
            const Signal g1 = rng.signal(group), g2 = rng.signal(group);
            const PlaneFunction v1 = stft(f1, g1), v2 = stft(f2, g2);
            cplx lhs(0.0, 0.0);
            for (std::size_t i = 0; i < v1.values.size(); ++i) {
                lhs += v1.values[i] * std::conj(v2.values[i]);
            }
            const cplx rhs = order * inner(f1, f2) * std::conj(inner(g1, g2));
            worst = std::max(worst, rel(std::abs(lhs - rhs), 1.0 + std::abs(rhs)));
        }
        push("moyal", worst);
    }

    // commutation (both the symplectic commutation and the composition rule)
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const TFPoint p = rng.point(group), q = rng.point(group);
            const OperatorMatrix mp = tf_shift_matrix(p, group);
            const OperatorMatrix mq = tf_shift_matrix(q, group);
            const OperatorMatrix pq = matmul(mp, mq);
            const double scale = std::sqrt(order);
            worst = std::max(
                worst, rel(frobenius_norm(
                               sub(pq, fga::scale(symplectic_character(p, q), matmul(mq, mp)))),
                           scale));
            worst = std::max(
                worst,
                rel(frobenius_norm(sub(pq, fga::scale(character(q.time, p.freq),
                                                      tf_shift_matrix(add(p, q), group)))),
                    scale));
        }
        push("commutation", worst);
    }

    // twisted algebra homomorphism (products and adjoints)
    {
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            const OperatorMatrix a = rng.matrix(n), b = rng.matrix(n);
            const SpreadingFunction lhs = spreading_of(group, matmul(a, b));
            const SpreadingFunction rhs =
                twisted_convolution(spreading_of(group, a), spreading_of(group, b));
            double dist = 0.0, nrm = 0.0;
            for (std::size_t i = 0; i < lhs.values.size(); ++i) {
                dist += std::norm(lhs.values[i] - rhs.values[i]);
                nrm += std::norm(lhs.values[i]);
            }
            worst = std::max(worst, rel(std::sqrt(dist), 1.0 + std::sqrt(nrm)));

            const SpreadingFunction li = twisted_involution(spreading_of(group, a));
            const SpreadingFunction ri = spreading_of(group, adjoint(a));
            double dist2 = 0.0;
            for (std::size_t i = 0; i < li.values.size(); ++i) {
                dist2 += std::norm(li.values[i] - ri.values[i]);
            }
            worst = std::max(worst, rel(std::sqrt(dist2), 1.0 + std::sqrt(nrm)));
        }
        push("twisted-homomorphism", worst);
    }

    // symplectic Fourier transform is self-inverse
    {
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            const PlaneFunction f = rng.plane(group);
            const PlaneFunction g2 = symplectic_fourier(symplectic_fourier(f));
            double dist = 0.0, nrm = 0.0;
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                dist += std::norm(g2.values[i] - f.values[i]);
                nrm += std::norm(f.values[i]);
            }
            worst = std::max(worst, rel(std::sqrt(dist), std::sqrt(nrm)));
        }
        push("symplectic-self-inverse", worst);
    }

    // Poisson summation over the battery
    {
        double worst = 0.0;
        for (const Lattice& lat : battery) {
            for (int t = 0; t < 3; ++t) {
                const PlaneFunction f = rng.plane(group);
                const auto [lhs, rhs] = poisson_sides(f, lat);
                worst = std::max(worst, rel(std::abs(lhs - rhs), 1.0 + std::abs(lhs)));
            }
        }
        push("poisson", worst);
    }

    // FIGA over the battery
    {
        double worst = 0.0;
        for (const Lattice& lat : battery) {
            const Signal f1 = rng.signal(group), f2 = rng.signal(group);
            const Signal g1 = rng.signal(group), g2 = rng.signal(group);
            const auto [lhs, rhs] = figa_sides(f1, f2, g1, g2, lat);
            worst = std::max(worst, rel(std::abs(lhs - rhs), 1.0 + std::abs(lhs)));
        }
        push("figa", worst);
    }

    // Janssen representation over the battery
    {
        double worst = 0.0;
        for (const Lattice& lat : battery) {
            const Signal g = rng.signal(group), h = rng.signal(group);
            const OperatorMatrix dense = frame_type_operator(g, h, lat);
            const OperatorMatrix rec = janssen_reconstruction(janssen_coefficients(g, h, lat));
            worst = std::max(worst, rel(frobenius_norm(sub(dense, rec)),
                                        1.0 + frobenius_norm(dense)));
        }
        push("janssen", worst);
    }

    // Frame-dependent identities share one window per lattice.
    std::vector<std::pair<Signal, const Lattice*>> frames;
    for (const Lattice& lat : battery) {
        if (lat.size() < group.order) continue;
        const Signal g = rng.signal(group);
        if (frame_bounds(make_gabor_system(g, lat)).is_frame) {
            frames.push_back({g, &lat});
        }
    }

    // Wexler-Raz delta condition for the canonical dual
    {
        double worst = 0.0;
        for (const auto& [g, lat] : frames) {
            const DualWindowResult dual = canonical_dual(g, *lat);
            const Lattice adj = adjoint_subgroup(*lat);
            const double target = order / static_cast<double>(lat->size());
            for (const TFPoint& mu : adj.elements) {
                const cplx v = inner(g, tf_shift(mu, dual.window));
                const cplx expect = (index_of(mu) == 0) ? cplx(target, 0.0) : cplx(0.0, 0.0);
                worst = std::max(worst, rel(std::abs(v - expect), target));
            }
        }
        push("wexler-raz", worst);
    }

    // Ron-Shen duality: flag agreement on all lattices, bound ratio on frames
    {
        double worst = 0.0;
        for (const Lattice& lat : battery) {
            const Signal g = rng.signal(group);
            const RonShenReport report = ron_shen_report(g, lat);
            if (report.is_frame != report.adjoint_is_riesz) worst = std::max(worst, 1.0);
            if (report.is_frame) {
                const double expect = order / static_cast<double>(lat.size());
                worst = std::max(worst, rel(std::abs(report.ratio - expect), expect));
            }
        }
        push("ron-shen", worst);
    }

    // dual window optimality (violation margins; zero when the inequalities hold)
    {
        double worst = 0.0;
        int used = 0;
        for (const auto& [g, lat] : frames) {
            if (++used > 3) break;
            const DualWindowResult dual = canonical_dual(g, *lat);
            const auto basis = dual_window_space(g, *lat);
            const Signal probe = rng.signal(group);
            double probe_base = 0.0;
            for (const cplx& c : analyze(probe, make_gabor_system(dual.window, *lat))) {
                probe_base += std::norm(c);
            }
            const Signal gu = scale(1.0 / norm(g), g);
            const Signal du = scale(1.0 / norm(dual.window), dual.window);
            for (int t = 0; t < 20; ++t) {
                Signal h = dual.window;
                for (const Signal& b : basis) {
                    h = add(h, scale(norm(dual.window) * rng.next(), b));
                }
                worst = std::max(worst, rel(std::max(0.0, norm(dual.window) - norm(h)),
                                            1.0 + norm(h)));
                worst = std::max(
                    worst, rel(std::max(0.0, norm(sub(g, dual.window)) - norm(sub(g, h))),
                               1.0 + norm(h)));
                const Signal hu = scale(1.0 / norm(h), h);
                worst = std::max(
                    worst,
                    rel(std::max(0.0, norm(sub(gu, du)) - norm(sub(gu, hu))), 1.0));
                double hw = 0.0;
                for (const cplx& c : analyze(probe, make_gabor_system(h, *lat))) {
                    hw += std::norm(c);
                }
                worst = std::max(worst, rel(std::max(0.0, probe_base - hw), 1.0 + hw));
            }
        }
        push("optimality", worst);
    }

    // Loewdin orthonormalization: minimality and permutation equivariance
    {
        double worst = 0.0;
        const int count = std::min<std::int64_t>(4, group.order);
        std::vector<Signal> vecs;
        for (int i = 0; i < count; ++i) vecs.push_back(rng.signal(group));
        const auto lw = lowdin_orthonormalize(vecs);
        auto dist = [&](const std::vector<Signal>& a, const std::vector<Signal>& b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) acc += norm_sq(sub(a[i], b[i]));
            return std::sqrt(acc);
        };
        const double best = dist(vecs, lw);
        for (int t = 0; t < 50; ++t) {
            std::vector<Signal> q;
            for (int i = 0; i < count; ++i) {
                Signal v = rng.signal(group);
                for (const Signal& u : q) v = sub(v, scale(inner(v, u), u));
                q.push_back(scale(1.0 / norm(v), v));
            }
            worst = std::max(worst, rel(std::max(0.0, best - dist(vecs, q)), 1.0 + best));
        }
        std::vector<std::size_t> perm(vecs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 1) % perm.size();
        std::vector<Signal> permuted;
        for (std::size_t i : perm) permuted.push_back(vecs[i]);
        const auto lp = lowdin_orthonormalize(permuted);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            worst = std::max(worst, rel(norm(sub(lp[i], lw[perm[i]])), 1.0));
        }
        push("lowdin", worst);
    }

    return results;
}

}  // namespace fga
