#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fga/errors.hpp"

namespace fga {

using cplx = std::complex<double>;

/// A finite abelian group given as an ordered product of cyclic factors
/// Z_{n_1} x ... x Z_{n_k}.  Elements are indexed mixed-radix with the
/// last coordinate running fastest, so the single-factor case is the
/// familiar 0..N-1 indexing.
struct GroupSpec {
    std::vector<std::int64_t> orders;
    std::int64_t order = 1;  // |G|, cached product of the orders

    bool operator==(const GroupSpec& other) const { return orders == other.orders; }
    bool operator!=(const GroupSpec& other) const { return !(*this == other); }

    std::size_t factor_count() const { return orders.size(); }

    /// lcm of the cyclic orders; every character value is an L-th root of unity.
    std::int64_t lcm_order() const;
};

/// An element of a GroupSpec, stored with canonical coordinates
/// 0 <= coords[j] < n_j.
struct GroupElement {
    GroupSpec group;
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement& other) const {
        return group == other.group && coords == other.coords;
    }
    bool operator!=(const GroupElement& other) const { return !(*this == other); }
};

GroupSpec make_group(const std::vector<std::int64_t>& orders);

GroupElement make_element(const GroupSpec& group, std::vector<std::int64_t> coords);
GroupElement zero_element(const GroupSpec& group);

/// Mixed-radix linear index, last coordinate fastest.
std::int64_t index_of(const GroupElement& x);
GroupElement element_at(const GroupSpec& group, std::int64_t index);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement sub(const GroupElement& x, const GroupElement& y);

/// Exponent m such that character(x, omega) = exp(2*pi*i * m / L) with
/// L = lcm_order().  Exact integer arithmetic; m is reduced mod L.
std::int64_t character_exponent(const GroupElement& x, const GroupElement& omega);

/// c_G(x, omega) = prod_j exp(2*pi*i * x_j * omega_j / n_j).
cplx character(const GroupElement& x, const GroupElement& omega);

/// A point (k, r) of the time-frequency plane G x G^.  The dual group is
/// represented by G itself, coordinatewise.
struct TFPoint {
    GroupElement time;
    GroupElement freq;

    bool operator==(const TFPoint& other) const {
        return time == other.time && freq == other.freq;
    }
    bool operator!=(const TFPoint& other) const { return !(*this == other); }
};

TFPoint make_tf_point(const GroupElement& time, const GroupElement& freq);
TFPoint zero_tf_point(const GroupSpec& group);

/// Number of plane points, |G|^2.
std::int64_t plane_size(const GroupSpec& group);
/// Linear index over the plane: index_of(time) * |G| + index_of(freq).
std::int64_t index_of(const TFPoint& p);
TFPoint tf_point_at(const GroupSpec& group, std::int64_t index);

TFPoint add(const TFPoint& p, const TFPoint& q);
TFPoint neg(const TFPoint& p);
TFPoint sub(const TFPoint& p, const TFPoint& q);

/// Exact exponent of the symplectic character, reduced mod lcm_order().
std::int64_t symplectic_exponent(const TFPoint& p, const TFPoint& q);

/// c^s(p, q) = c_G(q.time, p.freq) * conj(c_G(p.time, q.freq)).
/// For G = Z_N with p = (k, r), q = (l, s) this is exp(2*pi*i (l r - k s)/N).
cplx symplectic_character(const TFPoint& p, const TFPoint& q);

/// A subgroup of the time-frequency plane: generators plus the full,
/// deduplicated element list (sorted by plane index).
struct Lattice {
    GroupSpec group;
    std::vector<TFPoint> generators;
    std::vector<TFPoint> elements;

    std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }
    bool contains(const TFPoint& p) const;
};

/// Closure of the generators under the group law.  Empty generator list
/// yields the trivial subgroup {(0,0)}.
Lattice enumerate_subgroup(const GroupSpec& group,
                           const std::vector<TFPoint>& generators);

/// Separable lattice aZ_N x bZ_N on a single cyclic factor; requires a | N
/// and b | N.
Lattice separable_lattice(const GroupSpec& group, std::int64_t a, std::int64_t b);

/// Adjoint subgroup: all plane points whose symplectic character is trivial
/// on the lattice.  Testing against the generators suffices.
Lattice adjoint_subgroup(const Lattice& lattice);

/// True iff the symplectic form vanishes identically on the lattice.
bool is_isotropic(const Lattice& lattice);

/// Element (tau, k, r) of the finite Heisenberg group: a unimodular phase
/// together with a time-frequency point.
struct HeisenbergElement {
    cplx phase;
    GroupElement time;
    GroupElement freq;
};

HeisenbergElement heisenberg_identity(const GroupSpec& group);

/// (tau1, k1, r1) * (tau2, k2, r2)
///   = (tau1 tau2 c_G(k2, r1), k1 + k2, r1 + r2).
/// The cocycle is normalized through the group character; the unnormalized
/// exponent fails associativity for N > 1.
HeisenbergElement heisenberg_multiply(const HeisenbergElement& h1,
                                      const HeisenbergElement& h2);

HeisenbergElement heisenberg_inverse(const HeisenbergElement& h);

}  // namespace fga
