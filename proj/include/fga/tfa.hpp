#pragma once

#include <vector>

#include "fga/group.hpp"
#include "fga/linalg.hpp"

namespace fga {

/// A complex vector indexed by the group's linear index (a window or a
/// signal).  Norms and inner products are plain, unnormalized sums.
struct Signal {
    GroupSpec group;
    std::vector<cplx> values;
};

Signal make_signal(const GroupSpec& group, std::vector<cplx> values);
Signal zero_signal(const GroupSpec& group);
Signal delta(const GroupSpec& group, const GroupElement& at);

cplx inner(const Signal& f, const Signal& g);
double norm_sq(const Signal& f);
double norm(const Signal& f);

Signal add(const Signal& f, const Signal& g);
Signal sub(const Signal& f, const Signal& g);
Signal scale(cplx s, const Signal& f);

/// (T_k f)(j) = f(j - k), cyclic per coordinate.
Signal translate(const Signal& f, const GroupElement& k);

/// (M_r f)(j) = c_G(j, r) f(j).
Signal modulate(const Signal& f, const GroupElement& r);

/// Time-frequency shift pi(k, r).  Phases throughout the library are pinned
/// by dense-matrix oracles, which fix the operator order as translation
/// applied last:
///   pi(k, r) f = T_k M_r f,   (pi(k, r) f)(j) = c_G(j - k, r) f(j - k).
/// With this order the composition rule reads
///   pi(p) pi(q) = c_G(q.time, p.freq) pi(p + q)
/// and the adjoint rule pi(p)* = c_G(p.time, p.freq) pi(-p).
Signal tf_shift(const TFPoint& p, const Signal& f);

/// Dense |G| x |G| matrix of tf_shift(p, .); unitary.
OperatorMatrix tf_shift_matrix(const TFPoint& p, const GroupSpec& group);

/// A complex function on the time-frequency plane, indexed by the TFPoint
/// linear index.
struct PlaneFunction {
    GroupSpec group;
    std::vector<cplx> values;
};

PlaneFunction make_plane_function(const GroupSpec& group, std::vector<cplx> values);
PlaneFunction zero_plane_function(const GroupSpec& group);

/// Short-time Fourier transform V_g f(p) = <f, pi(p) g>.
PlaneFunction stft(const Signal& f, const Signal& g);

/// Synthesis from plane coefficients: sum_p F(p) pi(p) g; the adjoint of
/// stft(., g) with respect to plain inner products.
Signal stft_adjoint(const PlaneFunction& coefficients, const Signal& g);

}  // namespace fga
