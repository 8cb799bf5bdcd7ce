#pragma once

#include <cstdint>
#include <vector>

#include "fga/gabor.hpp"

namespace fga {

struct DualWindowResult {
    Signal window;
    double residual = 0.0;  // ||S_{g,h,L} - I||_Fro
    enum class Method { canonical, parametrized } method = Method::canonical;
};

/// Canonical dual window S^{-1} g.  Requires a frame; failure carries the
/// measured FrameDiagnostics.
DualWindowResult canonical_dual(const Signal& g, const Lattice& lattice);

/// Canonical tight window S^{-1/2} g; its frame operator is the identity.
Signal canonical_tight(const Signal& g, const Lattice& lattice);

/// Orthonormal basis of span{pi(l°) g : l° in L°}^perp.  Every dual window
/// is the canonical dual plus a combination of these, and conversely.
std::vector<Signal> dual_window_space(const Signal& g, const Lattice& lattice);

struct DualOptimalityReport {
    bool minimal_norm = false;
    bool minimal_coefficients = false;
    bool closest_to_atom = false;
    bool most_likely = false;  // normalized-distance inequality
    int trials = 0;
};

/// Samples alternative duals from the affine dual set and checks the four
/// optimality inequalities with the canonical dual on the smaller side.
DualOptimalityReport dual_optimality_report(const Signal& g, const Lattice& lattice,
                                            int trials, std::uint64_t seed = 0);

/// || analysis-with-canonical-dual - pinv(synthesis-with-g) ||_Fro.
/// The canonical dual's analysis map is the Moore-Penrose inverse of the
/// synthesis map.
double moore_penrose_check(const GaborSystem& system);
double moore_penrose_check(const Signal& g, const Lattice& lattice);

/// Symmetric (Loewdin) orthonormalization: the orthonormal set U V* from
/// the SVD of the column matrix; the closest orthonormal set in Frobenius
/// norm.  Input must be linearly independent.
std::vector<Signal> lowdin_orthonormalize(const std::vector<Signal>& vectors);

/// For two tight windows with the same frame constant, the partial isometry
/// W with W C_{h1} = C_{h2} and W* W the projection onto range(C_{h1}).
OperatorMatrix tight_connecting_isometry(const Signal& h1, const Signal& h2,
                                         const Lattice& lattice);

}  // namespace fga
