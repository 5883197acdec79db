#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "relwell/core.hpp"

// Stationary Dirac solutions in the static finite well: plane-wave spinors,
// interface matching at z = 0 and z = L0, bound-state search and scattering
// coefficients.
//
// Both interfaces carry the same matching ratio
//   rho = k1 (E - V0 + m c^2) / (k2 (E + m c^2)),
// forced by continuity of the two spinor components.  (The well-known
// alternative with the reciprocal ratio at z = 0 is inconsistent with
// continuity and with the z = L0 system.)

namespace relwell {

enum class Region { I, II, III };

/// Time-phase convention for assembled stationary solutions:
///   Global      e^{-i E t / hbar} in all three regions (self-consistent,
///               interfaces match at every t);
///   RegionShift e^{-i (E - V0) t / hbar} in the outer regions.  Interfaces
///               then match only at t = 0.
enum class PhaseConvention { Global, RegionShift };

enum class SolutionKind { Bound, Scattering };

struct WaveNumbers {
    Complex k1{0.0, 0.0};  ///< inner wave number, branch Re >= 0 (Im >= 0 on the cut)
    Complex k2{0.0, 0.0};  ///< outer wave number, same branch: evanescent <=> Im > 0
    double E = 0.0;

    static WaveNumbers at(double E, const PhysicalParams& p);
};

struct StaticSolution {
    double E = 0.0;
    Complex s, b, h, J, q, r;        ///< region amplitudes (I: s,b  II: h,J  III: q,r)
    Complex k1, k2;                  ///< k2 is the signed outer wave number actually used
    SolutionKind kind = SolutionKind::Bound;
    PhysicalParams params;
    PhaseConvention phase = PhaseConvention::Global;

    /// Assembled piecewise spinor at (z, t).
    SpinorSample sample(double z, double t) const;

    /// The region's own formula evaluated at (z, t), without region
    /// selection (used for interface plug-back checks).
    SpinorSample sample_in(Region region, double z, double t) const;

    /// Largest relative mismatch of the interface conditions (both
    /// components, both interfaces) at t = 0.
    double plugback_residual() const;
};

/// Matching ratio rho at energy E (see header comment).
Complex matching_ratio(double E, const PhysicalParams& p);

/// Lower-component amplitude hbar c k / (E - V + m c^2) of the region's
/// plane-wave spinor.
Complex spinor_lower_amplitude(Complex k, double E, Region region, const PhysicalParams& p);

/// Single travelling plane-wave spinor sampler
/// e^{i direction k z} (1, direction * amplitude), with the configured
/// time phase.
std::function<SpinorSample(double z, double t)> spinor_plane_wave(
    Complex k, double E, int direction, Region region, const PhysicalParams& p,
    PhaseConvention phase = PhaseConvention::Global);

/// Solve the z = 0 interface for (s, b) given the inner amplitudes (h, J).
std::pair<Complex, Complex> match_at_zero(Complex h, Complex J, double E,
                                          const PhysicalParams& p);

/// Solve the z = L0 interface for (q, r) given the inner amplitudes (h, J).
std::pair<Complex, Complex> match_at_L(Complex h, Complex J, double E, const PhysicalParams& p);

/// Real determinant-equivalent of the homogeneous system obtained by
/// imposing decaying outer solutions; zeros inside the bound window
/// m c^2 < E < V0 + m c^2, |E - V0| < m c^2 are the bound energies.
/// The returned function is sin(k1 L0 + 2 atan2(k1 (E - V0 + m c^2),
/// |k2| (E + m c^2))), bounded and pole-free across the window.
double bound_state_determinant(double E, const PhysicalParams& p);

/// All bound states found by scan + bisection + Newton polish.
std::vector<StaticSolution> bound_states(const PhysicalParams& p, int grid_density = 2000,
                                         int threads = 1);

struct ScatteringResult {
    double R = 0.0;
    double T = 0.0;
    StaticSolution solution;
};

/// Unit-flux-from-the-left scattering at energy E (requires real k2).
/// In the Klein zone the transmitted branch is chosen by the sign of the
/// current, not of the wave number.
ScatteringResult scattering_coefficients(double E, const PhysicalParams& p);

}  // namespace relwell
