#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fga/tfa.hpp"
#include "oracles.hpp"

using namespace fga;
using fga::testing::Rng;

namespace {

const std::vector<std::vector<std::int64_t>> kGroups = {{8}, {12}, {2, 3}, {4, 4}};

Signal random_signal(Rng& rng, const GroupSpec& g) {
    return make_signal(g, rng.complex_vector(static_cast<std::size_t>(g.order)));
}

TFPoint pt(const GroupSpec& g, std::int64_t k, std::int64_t r) {
    return TFPoint{make_element(g, {k}), make_element(g, {r})};
}

}  // namespace

TEST_CASE("translate") {
    const GroupSpec z8 = make_group({8});
    Rng rng(1);
    const Signal f = random_signal(rng, z8);

    const GroupElement k = make_element(z8, {3});
    CHECK(norm(sub(translate(delta(z8, zero_element(z8)), k), delta(z8, k))) == 0.0);
    CHECK(norm(sub(translate(f, zero_element(z8)), f)) == 0.0);
    CHECK(norm(sub(translate(translate(f, k), neg(k)), f)) == 0.0);
    CHECK_THROWS_AS(translate(f, zero_element(make_group({4}))), GroupMismatchError);
}

TEST_CASE("modulate") {
    const GroupSpec z4 = make_group({4});
    Rng rng(2);
    const Signal f = random_signal(rng, z4);
    CHECK(norm(sub(modulate(f, zero_element(z4)), f)) == 0.0);

    const Signal d1 = delta(z4, make_element(z4, {1}));
    const Signal md = modulate(d1, make_element(z4, {1}));
    CHECK(std::abs(md.values[1] - cplx(0.0, 1.0)) < 1e-15);

    const Signal mf = modulate(f, make_element(z4, {3}));
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(std::abs(std::abs(mf.values[j]) - std::abs(f.values[j])) < 1e-14);
    }
}

TEST_CASE("tf_shift basics") {
    Rng rng(3);
    for (const auto& orders : kGroups) {
        const GroupSpec g = make_group(orders);
        const Signal f = random_signal(rng, g);
        CHECK(norm(sub(tf_shift(zero_tf_point(g), f), f)) == 0.0);
        const TFPoint p = rng.tf_point(g);
        CHECK(norm(tf_shift(p, f)) == doctest::Approx(norm(f)).epsilon(1e-12));
    }
}

TEST_CASE("M_1 T_1 = exp(2 pi i / N) T_1 M_1") {
    const GroupSpec z8 = make_group({8});
    Rng rng(4);
    const Signal f = random_signal(rng, z8);
    const GroupElement one = make_element(z8, {1});
    const Signal lhs = modulate(translate(f, one), one);
    const Signal rhs = scale(std::polar(1.0, 2.0 * 3.14159265358979323846 / 8.0),
                             translate(modulate(f, one), one));
    CHECK(norm(sub(lhs, rhs)) < 1e-13 * norm(f));
}

TEST_CASE("commutation phase pi(1,0) pi(0,1) = exp(-2 pi i/N) pi(0,1) pi(1,0)") {
    const GroupSpec z8 = make_group({8});
    Rng rng(5);
    const Signal f = random_signal(rng, z8);
    const Signal lhs = tf_shift(pt(z8, 1, 0), tf_shift(pt(z8, 0, 1), f));
    const Signal rhs = scale(std::polar(1.0, -2.0 * 3.14159265358979323846 / 8.0),
                             tf_shift(pt(z8, 0, 1), tf_shift(pt(z8, 1, 0), f)));
    CHECK(norm(sub(lhs, rhs)) < 1e-13 * norm(f));
}

TEST_CASE("tf_shift_matrix acts like tf_shift on every basis vector") {
    Rng rng(6);
    for (const auto& orders : kGroups) {
        const GroupSpec g = make_group(orders);
        const TFPoint p = rng.tf_point(g);
        const OperatorMatrix m = tf_shift_matrix(p, g);
        for (std::int64_t x = 0; x < g.order; ++x) {
            const Signal dx = delta(g, element_at(g, x));
            const auto via_matrix = matvec(m, dx.values);
            const Signal via_action = tf_shift(p, dx);
            for (std::size_t i = 0; i < via_matrix.size(); ++i) {
                CHECK(std::abs(via_matrix[i] - via_action.values[i]) < 1e-14);
            }
        }
        CHECK(frobenius_norm(sub(tf_shift_matrix(zero_tf_point(g), g),
                                 OperatorMatrix::identity(static_cast<int>(g.order)))) == 0.0);
    }
}

TEST_CASE("Frobenius orthogonality of time-frequency shifts") {
    Rng rng(7);
    for (const auto& orders : {std::vector<std::int64_t>{8}, {2, 3}}) {
        const GroupSpec g = make_group(orders);
        for (int t = 0; t < 10; ++t) {
            const TFPoint p = rng.tf_point(g);
            const TFPoint q = rng.tf_point(g);
            const cplx ip = frobenius_inner(tf_shift_matrix(p, g), tf_shift_matrix(q, g));
            const double expected = (index_of(p) == index_of(q)) ? static_cast<double>(g.order) : 0.0;
            CHECK(std::abs(ip - cplx(expected, 0.0)) < 1e-11);
        }
    }
}

TEST_CASE("commutation and composition against dense matrices") {
    Rng rng(8);
    for (const auto& orders : kGroups) {
        const GroupSpec g = make_group(orders);
        for (int t = 0; t < 20; ++t) {
            const TFPoint p = rng.tf_point(g);
            const TFPoint q = rng.tf_point(g);
            const OperatorMatrix mp = tf_shift_matrix(p, g);
            const OperatorMatrix mq = tf_shift_matrix(q, g);
            const OperatorMatrix pq = matmul(mp, mq);

            // pi(p) pi(q) = c^s(p, q) pi(q) pi(p)
            const OperatorMatrix qp = scale(symplectic_character(p, q), matmul(mq, mp));
            CHECK(frobenius_norm(sub(pq, qp)) < 1e-12);

            // pi(p) pi(q) = c_G(q.time, p.freq) pi(p + q)
            const OperatorMatrix comp =
                scale(character(q.time, p.freq), tf_shift_matrix(add(p, q), g));
            CHECK(frobenius_norm(sub(pq, comp)) < 1e-12);

            // pi(p)* = c_G(p.time, p.freq) pi(-p)
            const OperatorMatrix adj = adjoint(mp);
            const OperatorMatrix rule =
                scale(character(p.time, p.freq), tf_shift_matrix(neg(p), g));
            CHECK(frobenius_norm(sub(adj, rule)) < 1e-12);
        }
    }
}

TEST_CASE("stft examples") {
    const GroupSpec z8 = make_group({8});
    const Signal d0 = delta(z8, zero_element(z8));
    const PlaneFunction v = stft(d0, d0);
    for (std::int64_t idx = 0; idx < plane_size(z8); ++idx) {
        const TFPoint p = tf_point_at(z8, idx);
        const double expected = (index_of(p.time) == 0) ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(v.values[static_cast<std::size_t>(idx)]) - expected) < 1e-14);
    }

    Rng rng(9);
    const Signal f = random_signal(rng, z8);
    const PlaneFunction vf = stft(f, f);
    CHECK(std::abs(vf.values[0] - cplx(norm_sq(f), 0.0)) < 1e-12 * norm_sq(f));
}

TEST_CASE("stft energy: sum over the plane is |G| ||f||^2 ||g||^2") {
    Rng rng(10);
    for (const auto& orders : kGroups) {
        const GroupSpec g = make_group(orders);
        const Signal f = random_signal(rng, g);
        const Signal w = random_signal(rng, g);
        const PlaneFunction v = stft(f, w);
        double total = 0.0;
        for (const auto& c : v.values) total += std::norm(c);
        const double expected = static_cast<double>(g.order) * norm_sq(f) * norm_sq(w);
        CHECK(total == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("Moyal identity with plain sums") {
    Rng rng(11);
    for (const auto& orders : kGroups) {
        const GroupSpec g = make_group(orders);
        for (int t = 0; t < 5; ++t) {
            const Signal f1 = random_signal(rng, g);
            const Signal f2 = random_signal(rng, g);
            const Signal g1 = random_signal(rng, g);
            const Signal g2 = random_signal(rng, g);
            const PlaneFunction v1 = stft(f1, g1);
            const PlaneFunction v2 = stft(f2, g2);
            cplx lhs(0.0, 0.0);
            for (std::size_t i = 0; i < v1.values.size(); ++i) {
                lhs += v1.values[i] * std::conj(v2.values[i]);
            }
            const cplx rhs = static_cast<double>(g.order) * inner(f1, f2) *
                             std::conj(inner(g1, g2));
            const double scale = 1.0 + std::abs(rhs);
            CHECK(std::abs(lhs - rhs) < 1e-10 * scale);
        }
    }
}

TEST_CASE("stft_adjoint") {
    const GroupSpec z8 = make_group({8});
    Rng rng(12);
    const Signal g = random_signal(rng, z8);

    // delta coefficient at (0,0) reproduces the window
    PlaneFunction d = zero_plane_function(z8);
    d.values[0] = cplx(1.0, 0.0);
    CHECK(norm(sub(stft_adjoint(d, g), g)) < 1e-14 * norm(g));

    // adjointness <stft(f,g), F> = <f, stft_adjoint(F,g)>
    const Signal f = random_signal(rng, z8);
    PlaneFunction coeff = zero_plane_function(z8);
    for (auto& c : coeff.values) c = rng.complex_gauss();
    const PlaneFunction vf = stft(f, g);
    cplx lhs(0.0, 0.0);
    for (std::size_t i = 0; i < vf.values.size(); ++i) {
        lhs += vf.values[i] * std::conj(coeff.values[i]);
    }
    const cplx rhs = inner(f, stft_adjoint(coeff, g));
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));

    // full-plane frame operator is |G| ||g||^2 times the identity
    const Signal unit = scale(1.0 / norm(g), g);
    const Signal rec = stft_adjoint(stft(f, unit), unit);
    const Signal expect = scale(static_cast<double>(z8.order) * norm_sq(unit), f);
    CHECK(norm(sub(rec, expect)) < 1e-10 * norm(expect));
}

TEST_CASE("zero window and three-factor groups") {
    const GroupSpec z8 = make_group({8});
    Rng rng(14);
    const Signal f = random_signal(rng, z8);
    const PlaneFunction v = stft(f, zero_signal(z8));
    for (const auto& c : v.values) CHECK(c == cplx(0.0, 0.0));

    // unitarity and Moyal on a three-factor group
    const GroupSpec z222 = make_group({2, 2, 2});
    const Signal a = random_signal(rng, z222);
    const Signal b = random_signal(rng, z222);
    const TFPoint p = rng.tf_point(z222);
    CHECK(norm(tf_shift(p, a)) == doctest::Approx(norm(a)).epsilon(1e-12));
    double total = 0.0;
    for (const auto& c : stft(a, b).values) total += std::norm(c);
    CHECK(total == doctest::Approx(8.0 * norm_sq(a) * norm_sq(b)).epsilon(1e-10));
}

TEST_CASE("resolution of identity with a second window") {
    const GroupSpec z8 = make_group({8});
    Rng rng(13);
    Signal g = random_signal(rng, z8);
    g = scale(1.0 / norm(g), g);
    Signal h = random_signal(rng, z8);
    if (std::abs(inner(g, h)) < 0.1) h = add(h, g);

    const Signal f = random_signal(rng, z8);
    const Signal rec = stft_adjoint(stft(f, g), h);
    const cplx c = static_cast<double>(z8.order) * inner(h, g);
    CHECK(norm(sub(rec, scale(c, f))) < 1e-9 * std::abs(c) * norm(f));
}
