#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fga/group.hpp"

namespace fga {

struct IdentityResult {
    std::string name;
    double max_residual = 0.0;
    bool pass = false;
};

/// Runs the named identities (Moyal, commutation, twisted-algebra
/// homomorphism, symplectic self-inverse, Poisson, FIGA, Janssen,
/// Wexler-Raz, Ron-Shen, dual optimality, Loewdin) on seeded random data
/// over a standard lattice battery: trivial, full plane, separable divisor
/// pairs on cyclic groups, and five random generator sets.  Residuals are
/// relative; each identity passes when its worst residual is within
/// tolerance.  Output order is fixed.
std::vector<IdentityResult> run_identity_suite(const GroupSpec& group, std::uint64_t seed,
                                               double tolerance);

/// The lattice battery used by the suite (also used by the CLI).
std::vector<Lattice> lattice_battery(const GroupSpec& group, std::uint64_t seed,
                                     int random_sets = 5);

}  // namespace fga
