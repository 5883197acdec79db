#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "relwell/core.hpp"

// Independent verification engines: 4th-order finite-difference residuals
// of the governing PDEs applied to black-box samplers, and a transcendental
// nonrelativistic finite-well reference solver.  Nothing in this module
// calls the special-function kernel or the analytic mode modules; samplers
// come in as opaque callables.

namespace relwell {

using ScalarSampler = std::function<Complex(double z, double t)>;
using PairSampler = std::function<std::array<Complex, 2>(double z, double t)>;
using PotentialFn = std::function<double(double z)>;

enum class PDEKind {
    KleinGordon,  ///< hbar^2 f_tt - hbar^2 c^2 f_zz + m^2 c^4 f = 0 (scalar)
    DiracSystem,  ///< coupled first-order system for (phi0, phi2), optional V(z)
    USystem,      ///< decoupled first-order system for (U1, U2)
    KGonU1        ///< Klein-Gordon operator applied to a scalar U1
};

/// Rectangular evaluation grid, interior points only; the caller is
/// responsible for leaving room for the stencil inside the sampler domain.
struct Grid2D {
    double z_lo = 0.0, z_hi = 1.0;
    double t_lo = 1.0, t_hi = 2.0;
    int nz = 16, nt = 16;
};

/// Step-size policy for the 4th-order stencils.
struct HPolicy {
    double rel = 3e-3;        ///< h = rel * max(|coord|, 1)
    double freq_scale = 0.0;  ///< when > 0, cap h at 4.4e-3 / freq_scale
    double fixed_h = 0.0;     ///< when > 0, use exactly this h everywhere

    double h_for(double coord) const {
        if (fixed_h > 0.0) return fixed_h;
        double h = rel * std::max(std::abs(coord), 1.0);
        if (freq_scale > 0.0) h = std::min(h, 4.4e-3 / freq_scale);
        return h;
    }
};

struct WorstPoint {
    double z = 0.0, t = 0.0;
    double resid = 0.0;
};

struct ResidualReport {
    std::string grid_desc;
    double max_rel = 0.0;
    double mean_rel = 0.0;
    std::vector<WorstPoint> worst;  ///< up to 10 largest offenders
    int n_points = 0;
};

/// Relative-residual normalization floor, preventing 0/0 on near-nodes.
inline constexpr double residual_floor = 1e-30;

ResidualReport fd_residual(PDEKind kind, const ScalarSampler& f, const Grid2D& grid,
                           const HPolicy& h, const PhysicalParams& params);

ResidualReport fd_residual(PDEKind kind, const PairSampler& f, const Grid2D& grid,
                           const HPolicy& h, const PhysicalParams& params,
                           const PotentialFn& potential = nullptr);

/// 4th-order central first derivative of a sampler along z or t.
Complex fd_dz(const ScalarSampler& f, double z, double t, double h);
Complex fd_dt(const ScalarSampler& f, double z, double t, double h);

/// Bound energies (above the well bottom) of the nonrelativistic finite
/// square well of depth V0_nr and width L: solutions of
/// k L + 2 asin(k / k_max) = n pi with k_max = sqrt(2 m V0_nr) / hbar.
/// Always returns at least one state for V0_nr > 0.
std::vector<double> schrodinger_well_oracle(double V0_nr, double L, double m, double hbar = 1.0);

}  // namespace relwell
