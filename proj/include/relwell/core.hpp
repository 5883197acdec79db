#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

// Shared domain types, units policy and error taxonomy.
//
// All formulas carry hbar and c explicitly, so any consistent unit system
// works; natural_units() rescales a parameter set to hbar = c = 1 and
// m in {0, 1} for well-conditioned numerics, with an exact inverse map.

namespace relwell {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------------------
// Error taxonomy

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A precondition on the inputs was violated.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Geometry that makes the requested construction meaningless (e.g. v = 0
/// in a mode-quantization context, where both walls coincide in the mapped
/// coordinate).
class DegenerateGeometry : public DomainError {
  public:
    explicit DegenerateGeometry(const std::string& msg) : DomainError(msg) {}
};

/// An iteration failed to converge.
class ConvergenceError : public Error {
  public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// A certified accuracy target could not be met.
class AccuracyError : public Error {
  public:
    explicit AccuracyError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Domain types

/// Particle constants and well geometry.
///
/// The well is V = V0 for z <= 0 (region I), V = 0 for
/// 0 < z < L0 + v (t - t0) (region II) and V = V0 beyond (region III).
/// With L0 = v t0 the free region is exactly [0, v t]; the closed-form
/// moving-well modes exist only in that convention.
struct PhysicalParams {
    double m = 1.0;     ///< rest mass (mc^2 is the rest energy)
    double hbar = 1.0;  ///< reduced Planck constant
    double c = 1.0;     ///< speed of light
    double V0 = 0.0;    ///< well depth (energy)
    double L0 = 1.0;    ///< initial well width (length)
    double v = 0.0;     ///< wall speed (length / time)
    double t0 = 0.0;    ///< time at which the wall motion starts

    /// Width of the free region at time t.
    double width_at(double t) const { return L0 + v * (t - t0); }

    /// True when L0 = v t0 holds to a relative tolerance, i.e. the free
    /// region is [0, v t].
    bool zero_to_vt_convention(double rel_tol = 1e-12) const {
        return std::abs(L0 - v * t0) <= rel_tol * std::max(std::abs(L0), 1.0);
    }

    void validate() const {
        if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("PhysicalParams: m must be >= 0 and finite");
        if (!(hbar > 0.0)) throw DomainError("PhysicalParams: hbar must be > 0");
        if (!(c > 0.0)) throw DomainError("PhysicalParams: c must be > 0");
        if (!(L0 > 0.0)) throw DomainError("PhysicalParams: L0 must be > 0");
        if (!std::isfinite(V0) || !std::isfinite(v) || !std::isfinite(t0))
            throw DomainError("PhysicalParams: V0, v, t0 must be finite");
    }
};

/// A point (z, t) in the lab frame.
struct SpacetimePoint {
    double z = 0.0;
    double t = 0.0;
};

/// The two nonzero components of the up-spin, z-propagating Dirac spinor.
struct SpinorSample {
    Complex phi0{0.0, 0.0};
    Complex phi2{0.0, 0.0};
};

// ---------------------------------------------------------------------------
// Units

/// Scale factors mapping user units to natural units (hbar = c = 1,
/// m in {0, 1}).  Quantities rescale as q_nat = q_user / unit.
struct UnitScales {
    double energy = 1.0;
    double length = 1.0;
    double time = 1.0;

    double to_natural_energy(double e) const { return e / energy; }
    double to_natural_length(double l) const { return l / length; }
    double to_natural_time(double t) const { return t / time; }
    double to_user_energy(double e) const { return e * energy; }
    double to_user_length(double l) const { return l * length; }
    double to_user_time(double t) const { return t * time; }
};

struct NaturalisedParams {
    PhysicalParams params;  ///< hbar = c = 1, m in {0, 1}
    UnitScales scales;      ///< maps back to the original units
};

/// Rescale a parameter set to natural units.
///
/// The energy unit is the rest energy m c^2 when m > 0, else V0 when
/// V0 != 0, else hbar * c / L0.  Lengths are measured in hbar c / E_unit
/// and times in hbar / E_unit, so the rescaled set has hbar = c = 1
/// exactly and m becomes 0 or 1.
inline NaturalisedParams natural_units(const PhysicalParams& p) {
    p.validate();
    double e_unit;
    if (p.m > 0.0)
        e_unit = p.m * p.c * p.c;
    else if (p.V0 != 0.0)
        e_unit = std::abs(p.V0);
    else
        e_unit = p.hbar * p.c / p.L0;

    UnitScales s;
    s.energy = e_unit;
    s.length = p.hbar * p.c / e_unit;
    s.time = p.hbar / e_unit;

    PhysicalParams q;
    q.m = (p.m > 0.0) ? 1.0 : 0.0;
    q.hbar = 1.0;
    q.c = 1.0;
    q.V0 = p.V0 / e_unit;
    q.L0 = p.L0 / s.length;
    q.v = (p.v / p.c);  // velocities in units of c
    q.t0 = p.t0 / s.time;
    return {q, s};
}

/// Invert natural_units: rebuild the user-unit parameter set from the
/// rescaled one and the stored scales (plus the original constants).
inline PhysicalParams restore_units(const PhysicalParams& nat, const UnitScales& s,
                                    double hbar_user, double c_user) {
    PhysicalParams p;
    p.hbar = hbar_user;
    p.c = c_user;
    p.m = nat.m * s.energy / (c_user * c_user);
    p.V0 = nat.V0 * s.energy;
    p.L0 = nat.L0 * s.length;
    p.v = nat.v * c_user;
    p.t0 = nat.t0 * s.time;
    return p;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace relwell
