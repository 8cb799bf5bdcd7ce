#pragma once

#include <utility>
#include <vector>

#include "fga/spreading.hpp"

namespace fga {

/// One or more windows shifted over a lattice.
struct GaborSystem {
    std::vector<Signal> windows;
    Lattice lattice;
    GroupSpec group;

    std::int64_t size() const {
        return static_cast<std::int64_t>(windows.size()) * lattice.size();
    }
};

GaborSystem make_gabor_system(std::vector<Signal> windows, Lattice lattice);
GaborSystem make_gabor_system(const Signal& window, const Lattice& lattice);

struct FrameDiagnostics {
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool is_frame = false;
    double condition_number = 0.0;  // B/A when A > 0
};

/// Thrown by window computations that require a frame; carries the measured
/// bounds.
class NotAFrameError : public Error {
public:
    NotAFrameError(const std::string& what, FrameDiagnostics diagnostics)
        : Error(what), diagnostics_(diagnostics) {}
    const FrameDiagnostics& diagnostics() const { return diagnostics_; }

private:
    FrameDiagnostics diagnostics_;
};

/// |G| x (#windows * |L|) matrix whose column j*|L|+i is pi(lambda_i) g_j,
/// lattice elements in canonical sorted order (windows outer, lattice
/// inner).
OperatorMatrix synthesis_matrix(const GaborSystem& system);

/// Coefficients <f, pi(lambda_i) g_j> in synthesis column order; equals
/// adjoint(synthesis_matrix) * f.
std::vector<cplx> analyze(const Signal& f, const GaborSystem& system);

/// S f = sum_j sum_l <f, pi(l) g_j> pi(l) g_j; Hermitian PSD, commutes with
/// pi(l) for l in the lattice.
OperatorMatrix frame_operator(const GaborSystem& system);

/// S_{g,h} f = sum_l <f, pi(l) h> pi(l) g.
OperatorMatrix frame_type_operator(const Signal& g, const Signal& h, const Lattice& lattice);

/// adjoint(D) * D; Hermitian PSD, system-size square.
OperatorMatrix gram_matrix(const GaborSystem& system);

/// Extreme eigenvalues of the frame operator and the frame decision.
FrameDiagnostics frame_bounds(const GaborSystem& system);

/// Coefficients on an adjoint lattice, aligned with lattice.elements.
struct LatticeCoefficients {
    Lattice lattice;
    std::vector<cplx> values;
};

/// Janssen representation of S_{g,h,L}: coefficient (|L|/|G|) <g, pi(l°) h>
/// at each adjoint-lattice point; the reconstruction
/// sum coeff(l°) pi(l°) equals frame_type_operator(g, h, L).
LatticeCoefficients janssen_coefficients(const Signal& g, const Signal& h,
                                         const Lattice& lattice);

/// Dense operator sum coeff(l°) pi(l°) from adjoint-lattice coefficients.
OperatorMatrix janssen_reconstruction(const LatticeCoefficients& coefficients);

/// Wexler-Raz biorthogonality: <g, pi(l°) h> = (|G|/|L|) delta_{l°,0}
/// within tol, for all l° in the adjoint lattice.
bool wexler_raz_is_dual(const Signal& g, const Signal& h, const Lattice& lattice, double tol);

/// Both sides of the fundamental identity of Gabor analysis:
///   sum_l V_{g1}f1(l) conj(V_{g2}f2(l))
///   (|L|/|G|) sum_{l°} V_{g1}g2(l°) conj(V_{f1}f2(l°)).
std::pair<cplx, cplx> figa_sides(const Signal& f1, const Signal& f2, const Signal& g1,
                                 const Signal& g2, const Lattice& lattice);

/// Twisted convolution of adjoint-lattice coefficient maps, inherited from
/// the global twisted convolution restricted to the sublattice.
LatticeCoefficients lattice_twisted_convolution(const LatticeCoefficients& a,
                                                const LatticeCoefficients& b);

struct RonShenReport {
    double frame_lower = 0.0;
    double frame_upper = 0.0;
    double riesz_lower = 0.0;
    double riesz_upper = 0.0;
    bool is_frame = false;
    bool adjoint_is_riesz = false;
    double ratio = 0.0;  // riesz_lower / frame_lower on frames; equals |G|/|L|
};

/// Ron-Shen duality: G(g, L) is a frame iff G(g, L°) is a Riesz basis for
/// its span with invertible Gram matrix.
RonShenReport ron_shen_report(const Signal& g, const Lattice& lattice);

}  // namespace fga
