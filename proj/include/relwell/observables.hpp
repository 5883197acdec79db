#pragma once

#include <functional>
#include <vector>

#include "relwell/core.hpp"
#include "relwell/oracle.hpp"

// Densities, currents, the continuity-law residual and momentum expectation
// values over spatial intervals.  The momentum of a wavefunction restricted
// to a sub-interval is reported as the raw ratio
//   <p> = Int psi^dag (-i hbar d_z) psi dz / Int psi^dag psi dz
// and is allowed to be complex; no hermitisation is applied.

namespace relwell {

using SpinorSampler = std::function<SpinorSample(double z, double t)>;

struct IntervalGrid {
    double z_lo = 0.0;
    double z_hi = 1.0;
    int n_points = 513;
    double t = 1.0;

    void validate() const {
        if (!(z_lo < z_hi)) throw DomainError("IntervalGrid: requires z_lo < z_hi");
        if (n_points < 16) throw DomainError("IntervalGrid: requires n_points >= 16");
    }
};

/// rho = |phi0|^2 + |phi2|^2
double density(const SpinorSample& s);

/// j_z = c psi^dag alpha^3 psi = 2 c Re(conj(phi0) phi2) for this component
/// layout.
double current(const SpinorSample& s, const PhysicalParams& p);

/// max |d_t rho + d_z j| over the grid, each point normalized by the local
/// magnitude of the two terms.
ResidualReport continuity_residual(const SpinorSampler& f, const IntervalGrid& grid,
                                   const PhysicalParams& p, const HPolicy& h = {});

struct MomentumResult {
    Complex p{0.0, 0.0};
    std::vector<Complex> history;  ///< value at each refinement level
};

/// Composite-Simpson momentum expectation over the interval at the grid's
/// time, with the sampler derivative taken by 4th-order central FD.  Runs
/// three refinement levels; raises ConvergenceError if the last two differ
/// by more than 1e-4 relative.
MomentumResult momentum_expectation(const SpinorSampler& f, const IntervalGrid& grid,
                                    const PhysicalParams& p, const HPolicy& h = {});

}  // namespace relwell
