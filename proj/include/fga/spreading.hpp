#pragma once

#include <utility>
#include <vector>

#include "fga/tfa.hpp"

namespace fga {

/// Spreading coefficients of an operator: the coordinates of a |G| x |G|
/// matrix in the orthogonal basis of time-frequency shifts.  Shares the
/// PlaneFunction layout; kept as its own type because the roles differ.
struct SpreadingFunction {
    GroupSpec group;
    std::vector<cplx> values;
};

SpreadingFunction make_spreading(const GroupSpec& group, std::vector<cplx> values);
SpreadingFunction zero_spreading(const GroupSpec& group);

PlaneFunction to_plane(const SpreadingFunction& eta);
SpreadingFunction to_spreading(const PlaneFunction& f);

/// eta_A(p) = |G|^{-1} <A, pi(p)>_Fro ; the expansion
/// A = sum_p eta_A(p) pi(p) recovers A.
SpreadingFunction spreading_of(const GroupSpec& group, const OperatorMatrix& a);

/// sum_p eta(p) pi(p); inverse of spreading_of.
OperatorMatrix operator_of(const SpreadingFunction& eta);

/// Closed-form kernel-to-spreading map (the kernel IS the matrix under the
/// library's conventions):
///   eta_A(k, r) = |G|^{-1} sum_i k_A(i, i-k) conj(c_G(i-k, r)).
/// Agrees with spreading_of; kept as an independent O(|G|^3) route.
SpreadingFunction kernel_to_spreading(const GroupSpec& group, const OperatorMatrix& kernel);

/// Inverse closed form: k_A(i, j) = sum_r eta(i-j, r) c_G(j, r).
OperatorMatrix spreading_to_kernel(const SpreadingFunction& eta);

/// Twisted convolution: the unique c with
/// operator_of(c) = operator_of(a) * operator_of(b).  Closed form
///   (a natural b)(m, t) = sum_{(k,r)} a(k, r) b(m-k, t-r) c_G(m-k, r).
SpreadingFunction twisted_convolution(const SpreadingFunction& a,
                                      const SpreadingFunction& b);

/// a*(p) = c_G(p.time, p.freq) conj(a(-p));
/// operator_of(a*) = adjoint(operator_of(a)).
SpreadingFunction twisted_involution(const SpreadingFunction& a);

/// Best Frobenius-norm approximation of A in span{pi(p) : p in support}:
/// sum over the retained points of eta_A(p) pi(p).
OperatorMatrix best_tf_approximation(const GroupSpec& group, const OperatorMatrix& a,
                                     const std::vector<TFPoint>& support);

/// pi(p) A pi(p)*.  The spreading coefficients pick up the symplectic phase
/// c^s(p, q) at each plane point q, i.e. a symplectic modulation by -p.
OperatorMatrix conjugate_by_shift(const GroupSpec& group, const OperatorMatrix& a,
                                  const TFPoint& p);

/// Rank-one operator P_{g,h} f = <f, h> g; its spreading coefficients are
/// |G|^{-1} <g, pi(p) h>.
OperatorMatrix rank_one(const Signal& g, const Signal& h);

/// Symplectic Fourier transform, self-inverse:
///   F^(p) = |GxG^|^{-1/2} sum_q c^s(p, q) F(q).
PlaneFunction symplectic_fourier(const PlaneFunction& f);

/// (T^s_p F)(q) = F(q - p)
PlaneFunction symplectic_translate(const PlaneFunction& f, const TFPoint& p);

/// (M^s_p F)(q) = c^s(q, p) F(q)
PlaneFunction symplectic_modulate(const PlaneFunction& f, const TFPoint& p);

/// Both sides of the symplectic Poisson summation formula:
///   sum_{l in L} F(l)  and  (|L| / |G|) sum_{l° in L°} F^(l°).
std::pair<cplx, cplx> poisson_sides(const PlaneFunction& f, const Lattice& lattice);

}  // namespace fga
