#pragma once

#include <cmath>

#include "relwell/core.hpp"

// The coordinate substitution x = sqrt((ct+z)/(ct-z)), y = sqrt(c^2 t^2 - z^2)
// and its algebraic inverse.  The moving wall z = v t maps to the fixed line
// x = sqrt((c+v)/(c-v)); the fixed wall z = 0 maps to x = 1.

namespace relwell {

struct LightConePoint {
    double x = 1.0;  ///< dimensionless ratio coordinate, > 0
    double y = 0.0;  ///< invariant-interval coordinate (length), > 0
};

/// Partial derivatives of (x, y) with respect to (z, t).
struct LightConeJacobian {
    double dx_dz = 0.0, dx_dt = 0.0;
    double dy_dz = 0.0, dy_dt = 0.0;
};

/// Points closer to the cone boundary than this (relative to ct) are
/// rejected: Y_nu diverges as y -> 0 and x blows up as z -> ct, so grids
/// that touch the cone are ill-conditioned by construction.
inline constexpr double lightcone_edge_tol = 1e-12;

inline LightConePoint to_lightcone(SpacetimePoint p, double c = 1.0) {
    const double ct = c * p.t;
    if (!(ct > 0.0) || ct - std::abs(p.z) <= lightcone_edge_tol * ct)
        throw DomainError("to_lightcone: point must lie strictly inside the forward light cone");
    // y via the product form, which keeps accuracy near the cone.
    const double plus = ct + p.z;
    const double minus = ct - p.z;
    return {std::sqrt(plus / minus), std::sqrt(plus * minus)};
}

inline SpacetimePoint from_lightcone(LightConePoint q, double c = 1.0) {
    if (!(q.x > 0.0) || !(q.y > 0.0))
        throw DomainError("from_lightcone: requires x > 0 and y > 0");
    const double ct = 0.5 * q.y * (q.x + 1.0 / q.x);
    const double z = 0.5 * q.y * (q.x - 1.0 / q.x);
    return {z, ct / c};
}

inline LightConeJacobian lightcone_jacobian(SpacetimePoint p, double c = 1.0) {
    const LightConePoint q = to_lightcone(p, c);
    const double ct = c * p.t;
    const double y2 = q.y * q.y;
    LightConeJacobian j;
    j.dx_dz = q.x * ct / y2;
    j.dx_dt = -q.x * c * p.z / y2;
    j.dy_dz = -p.z / q.y;
    j.dy_dt = c * ct / q.y;
    return j;
}

/// The fixed x-image of the moving wall z = v t.
inline double wall_image(const PhysicalParams& p) {
    if (!(std::abs(p.v) < p.c)) throw DomainError("wall_image: requires |v| < c");
    return std::sqrt((p.c + p.v) / (p.c - p.v));
}

}  // namespace relwell
