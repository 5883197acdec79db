#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "relwell/core.hpp"

// Klein-Gordon mode solutions in the infinite well with one fixed and one
// uniformly moving wall, in the [0, vt] convention:
//
//   phi_n(z, t) = sin(k_n ln x) [cJ J_{i k_n}(m c y / hbar) + cY Y_{i k_n}(...)]
//
// with (x, y) the light-cone coordinates and k_n = n pi / ln sqrt((c+v)/(c-v)).
// For m = 0 the radial factor degenerates to the Euler pair y^{+- i k_n},
// making the mode an explicit d'Alembert superposition of log-light-cone
// plane waves.

namespace relwell {

using FieldSampler = std::function<Complex(double z, double t)>;

struct KGMode {
    int n = 1;
    double k_n = 0.0;
    Complex cJ{1.0, 0.0};
    Complex cY{0.0, 0.0};
    PhysicalParams params;
};

/// Quantized wave parameter k_n = n pi / ln sqrt((c+v)/(c-v)); strictly
/// increasing and exactly linear in n.
double kn(int n, const PhysicalParams& p);

KGMode make_kg_mode(int n, const PhysicalParams& p, Complex cJ = Complex(1.0, 0.0),
                    Complex cY = Complex(0.0, 0.0));

/// Mode value at a spacetime point strictly inside the light cone and
/// inside the well slab 0 <= z <= vt (tolerance-padded).
Complex kg_mode_value(const KGMode& mode, SpacetimePoint pt);

/// Linear combination of modes; delegates pointwise to kg_mode_value.
FieldSampler kg_superposition(std::vector<std::pair<KGMode, Complex>> modes);

/// Local oscillation rate of the mode over t in [t_min, t_max], used to
/// cap finite-difference steps.
double kg_freq_scale(const KGMode& mode, double t_min, double t_max);

}  // namespace relwell
