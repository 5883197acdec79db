#include "relwell/kg_moving.hpp"

#include <cmath>

#include "relwell/bessel.hpp"
#include "relwell/lightcone.hpp"

namespace relwell {

namespace {

void check_mode_geometry(const PhysicalParams& p) {
    p.validate();
    if (p.v == 0.0) throw DegenerateGeometry("kg_moving: v = 0, both walls map to x = 1");
    if (!(p.v > 0.0) || !(p.v < p.c))
        throw DomainError("kg_moving: mode quantization requires 0 < v < c");
}

void check_well_slab(SpacetimePoint pt, const PhysicalParams& p) {
    const double width = p.v * pt.t;
    const double pad = 1e-9 * width;
    if (pt.z < -pad || pt.z > width + pad)
        throw DomainError("kg_moving: point outside the well slab [0, vt]");
}

}  // namespace

double kn(int n, const PhysicalParams& p) {
    check_mode_geometry(p);
    if (n < 1) throw DomainError("kn: mode index must be a positive integer");
    const double eta = std::log(std::sqrt((p.c + p.v) / (p.c - p.v)));
    return (n * pi) / eta;
}

KGMode make_kg_mode(int n, const PhysicalParams& p, Complex cJ, Complex cY) {
    check_mode_geometry(p);
    if (!p.zero_to_vt_convention())
        throw DomainError("make_kg_mode: closed-form modes require L0 = v t0 (range [0, vt])");
    KGMode m;
    m.n = n;
    m.k_n = kn(n, p);
    m.cJ = cJ;
    m.cY = cY;
    m.params = p;
    return m;
}

Complex kg_mode_value(const KGMode& mode, SpacetimePoint pt) {
    const PhysicalParams& p = mode.params;
    check_well_slab(pt, p);
    const LightConePoint q = to_lightcone(pt, p.c);
    const Complex angular = std::sin(mode.k_n * std::log(q.x));
    Complex radial;
    if (p.m > 0.0) {
        const Order order(Complex(0.0, mode.k_n));
        const double arg = p.m * p.c * q.y / p.hbar;
        radial = mode.cJ * bessel_j(order, arg);
        if (mode.cY != Complex(0.0, 0.0)) radial += mode.cY * bessel_y(order, arg);
    } else {
        // massless limit: Euler pair y^{+- i k_n} (d'Alembert modes in
        // log-light-cone coordinates)
        const Complex ik(0.0, mode.k_n);
        radial = mode.cJ * std::exp(ik * std::log(q.y));
        if (mode.cY != Complex(0.0, 0.0)) radial += mode.cY * std::exp(-ik * std::log(q.y));
    }
    return angular * radial;
}

FieldSampler kg_superposition(std::vector<std::pair<KGMode, Complex>> modes) {
    return [modes = std::move(modes)](double z, double t) {
        Complex acc(0.0, 0.0);
        for (const auto& [mode, weight] : modes) acc += weight * kg_mode_value(mode, {z, t});
        return acc;
    };
}

double kg_freq_scale(const KGMode& mode, double t_min, double t_max) {
    const PhysicalParams& p = mode.params;
    if (!(t_min > 0.0) || !(t_max >= t_min)) throw DomainError("kg_freq_scale: bad time range");
    const double beta = p.v / p.c;
    const double gamma2 = 1.0 / (1.0 - beta * beta);
    const double mass_rate = p.m * p.c * p.c / p.hbar;
    return (mode.k_n / t_min) * gamma2 + mass_rate * std::max(1.0, p.c * t_max);
}

}  // namespace relwell
