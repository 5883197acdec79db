#pragma once

#include <functional>

#include "relwell/core.hpp"

// Dirac spinor modes in the moving-wall well via the U1/U2 decoupling:
//
//   U1 = x^{nu} [d1 J_nu(w) + d2 Y_nu(w)] + x^{-nu} [d3 J_nu(w) + d4 Y_nu(w)]
//   U2 = i x^{nu-1} [d1 J_{nu-1}(w) + d2 Y_{nu-1}(w)]
//      - i x^{-nu-1} [d3 J_{nu+1}(w) + d4 Y_{nu+1}(w)]
//
// with w = m c y / hbar, (x, y) light-cone coordinates, and the spinor
// components phi0 = (U1 + U2)/2, phi2 = (U1 - U2)/2.  Only the coefficient
// products d1..d4 are observable; the mode stores those.
//
// U1 satisfies the Klein-Gordon equation and U2 follows from the first
// line of the decoupled first-order system, which divides by m c^2 -- all
// moving-well Dirac modes therefore require m > 0.

namespace relwell {

struct DiracMovingMode {
    Complex nu{0.0, 1.0};     ///< order (i k_n for the quantized family)
    Complex d1, d2, d3, d4;   ///< collapsed coefficients
    PhysicalParams params;
    bool quantized = false;   ///< restrict evaluation to the well slab [0, vt]
};

/// General mode with caller-chosen order and coefficients.
DiracMovingMode make_dirac_mode(Complex nu, Complex d1, Complex d2, Complex d3, Complex d4,
                                const PhysicalParams& p);

/// Quantized family member: nu = i k_n and the coefficient pairing that
/// collapses the x-powers to sin(k_n ln x), so U1 vanishes on both walls.
DiracMovingMode quantized_dirac_mode(int n, const PhysicalParams& p);

Complex u1_value(const DiracMovingMode& mode, SpacetimePoint pt);
Complex u2_value(const DiracMovingMode& mode, SpacetimePoint pt);
SpinorSample spinor_value(const DiracMovingMode& mode, SpacetimePoint pt);

/// Local oscillation rate over t in [t_min, t_max] for FD step control.
double dirac_freq_scale(const DiracMovingMode& mode, double t_min, double t_max);

/// The explicit fixed-time example field
///   phi0 = (c1/2) [x^nu J_nu(w) + i x^{nu-1} J_{nu-1}(w)]
///   phi2 = (c1/2) [x^nu J_nu(w) - i x^{nu-1} J_{nu-1}(w)]
/// at t = t0 on z in (-c t0, c t0), with nu a positive real integer.
/// The underlying (z, t) mode is kept for derivative checks.
struct Section4Example {
    DiracMovingMode mode;
    double t0 = 1.0;

    SpinorSample at(double z) const;
};

Section4Example section4_example(const PhysicalParams& p, double nu_integer, Complex c1);

}  // namespace relwell
