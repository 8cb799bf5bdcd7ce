#include "fga/tfa.hpp"

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

// Roots of unity exp(2 pi i m / L) for the group's character values.
std::vector<cplx> root_table(const GroupSpec& group) {
    const std::int64_t l = group.lcm_order();
    std::vector<cplx> roots(static_cast<std::size_t>(l));
    for (std::int64_t m = 0; m < l; ++m) {
        roots[m] = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(l));
    }
    return roots;
}

}  // namespace

Signal make_signal(const GroupSpec& group, std::vector<cplx> values) {
    if (static_cast<std::int64_t>(values.size()) != group.order) {
        throw ShapeError("make_signal: value count does not match the group order");
    }
    return Signal{group, std::move(values)};
}

Signal zero_signal(const GroupSpec& group) {
    return Signal{group, std::vector<cplx>(static_cast<std::size_t>(group.order))};
}

Signal delta(const GroupSpec& group, const GroupElement& at) {
    require_same_group(group, at.group, "delta");
    Signal f = zero_signal(group);
    f.values[static_cast<std::size_t>(index_of(at))] = cplx(1.0, 0.0);
    return f;
}

cplx inner(const Signal& f, const Signal& g) {
    require_same_group(f.group, g.group, "inner");
    return kernels::dotc(f.values.data(), g.values.data(), f.values.size());
}

double norm_sq(const Signal& f) { return kernels::norm2sq(f.values.data(), f.values.size()); }

double norm(const Signal& f) { return std::sqrt(norm_sq(f)); }

Signal add(const Signal& f, const Signal& g) {
    require_same_group(f.group, g.group, "add");
    Signal h = f;
    kernels::axpy(cplx(1.0, 0.0), g.values.data(), h.values.data(), h.values.size());
    return h;
}

Signal sub(const Signal& f, const Signal& g) {
    require_same_group(f.group, g.group, "sub");
    Signal h = f;
    kernels::axpy(cplx(-1.0, 0.0), g.values.data(), h.values.data(), h.values.size());
    return h;
}

Signal scale(cplx s, const Signal& f) {
    Signal h = f;
    kernels::scal(s, h.values.data(), h.values.size());
    return h;
}

Signal translate(const Signal& f, const GroupElement& k) {
    require_same_group(f.group, k.group, "translate");
    Signal g = zero_signal(f.group);
    for (std::int64_t j = 0; j < f.group.order; ++j) {
        const GroupElement x = element_at(f.group, j);
        g.values[static_cast<std::size_t>(j)] =
            f.values[static_cast<std::size_t>(index_of(sub(x, k)))];
    }
    return g;
}

Signal modulate(const Signal& f, const GroupElement& r) {
    require_same_group(f.group, r.group, "modulate");
    const auto roots = root_table(f.group);
    Signal g = f;
    for (std::int64_t j = 0; j < f.group.order; ++j) {
        const GroupElement x = element_at(f.group, j);
        g.values[static_cast<std::size_t>(j)] *= roots[character_exponent(x, r)];
    }
    return g;
}

Signal tf_shift(const TFPoint& p, const Signal& f) {
    require_same_group(p.time.group, f.group, "tf_shift");
    return translate(modulate(f, p.freq), p.time);
}

OperatorMatrix tf_shift_matrix(const TFPoint& p, const GroupSpec& group) {
    require_same_group(p.time.group, group, "tf_shift_matrix");
    const std::int64_t n = group.order;
    const auto roots = root_table(group);
    OperatorMatrix m(static_cast<int>(n), static_cast<int>(n));
    // pi(k, r) delta_x = c_G(x, r) delta_{x+k}
    for (std::int64_t x = 0; x < n; ++x) {
        const GroupElement ex = element_at(group, x);
        const std::int64_t row = index_of(add(ex, p.time));
        m.at(static_cast<int>(row), static_cast<int>(x)) =
            roots[character_exponent(ex, p.freq)];
    }
    return m;
}

PlaneFunction make_plane_function(const GroupSpec& group, std::vector<cplx> values) {
    if (static_cast<std::int64_t>(values.size()) != plane_size(group)) {
        throw ShapeError("make_plane_function: value count does not match |G|^2");
    }
    return PlaneFunction{group, std::move(values)};
}

PlaneFunction zero_plane_function(const GroupSpec& group) {
    return PlaneFunction{group, std::vector<cplx>(static_cast<std::size_t>(plane_size(group)))};
}

PlaneFunction stft(const Signal& f, const Signal& g) {
    require_same_group(f.group, g.group, "stft");
    PlaneFunction out = zero_plane_function(f.group);
    for (std::int64_t idx = 0; idx < plane_size(f.group); ++idx) {
        out.values[static_cast<std::size_t>(idx)] =
            inner(f, tf_shift(tf_point_at(f.group, idx), g));
    }
    return out;
}

Signal stft_adjoint(const PlaneFunction& coefficients, const Signal& g) {
    require_same_group(coefficients.group, g.group, "stft_adjoint");
    Signal out = zero_signal(g.group);
    for (std::int64_t idx = 0; idx < plane_size(g.group); ++idx) {
        const cplx c = coefficients.values[static_cast<std::size_t>(idx)];
        if (c == cplx(0.0, 0.0)) continue;
        const Signal shifted = tf_shift(tf_point_at(g.group, idx), g);
        kernels::axpy(c, shifted.values.data(), out.values.data(), out.values.size());
    }
    return out;
}

}  // namespace fga
