#include "relwell/dirac_moving.hpp"

#include <cmath>

#include "relwell/bessel.hpp"
#include "relwell/kg_moving.hpp"
#include "relwell/lightcone.hpp"

namespace relwell {

namespace {

void check_mode_params(const PhysicalParams& p) {
    p.validate();
    if (!(p.m > 0.0))
        throw DomainError("dirac_moving: moving-well Dirac modes require m > 0");
}

void check_point(const DiracMovingMode& mode, SpacetimePoint pt) {
    if (mode.quantized) {
        const double width = mode.params.v * pt.t;
        const double pad = 1e-9 * width;
        if (pt.z < -pad || pt.z > width + pad)
            throw DomainError("dirac_moving: point outside the well slab [0, vt]");
    }
}

Complex cpow(double base, Complex expo) { return std::exp(expo * std::log(base)); }

}  // namespace

DiracMovingMode make_dirac_mode(Complex nu, Complex d1, Complex d2, Complex d3, Complex d4,
                                const PhysicalParams& p) {
    check_mode_params(p);
    DiracMovingMode m;
    m.nu = nu;
    m.d1 = d1;
    m.d2 = d2;
    m.d3 = d3;
    m.d4 = d4;
    m.params = p;
    m.quantized = false;
    return m;
}

DiracMovingMode quantized_dirac_mode(int n, const PhysicalParams& p) {
    check_mode_params(p);
    if (!p.zero_to_vt_convention())
        throw DomainError("quantized_dirac_mode: requires the [0, vt] convention (L0 = v t0)");
    const double k = kn(n, p);  // validates 0 < v < c and n >= 1
    DiracMovingMode m;
    m.nu = Complex(0.0, k);
    // x^{i k} d1 + x^{-i k} d3 with d3 = -d1 = i/2 gives sin(k ln x)
    m.d1 = Complex(0.0, -0.5);
    m.d3 = Complex(0.0, 0.5);
    m.d2 = Complex(0.0, 0.0);
    m.d4 = Complex(0.0, 0.0);
    m.params = p;
    m.quantized = true;
    return m;
}

Complex u1_value(const DiracMovingMode& mode, SpacetimePoint pt) {
    check_point(mode, pt);
    const PhysicalParams& p = mode.params;
    const LightConePoint q = to_lightcone(pt, p.c);
    const double w = p.m * p.c * q.y / p.hbar;
    const Order order(mode.nu);
    Complex rad_plus = mode.d1 * bessel_j(order, w);
    if (mode.d2 != Complex(0.0, 0.0)) rad_plus += mode.d2 * bessel_y(order, w);
    Complex rad_minus = mode.d3 * bessel_j(order, w);
    if (mode.d4 != Complex(0.0, 0.0)) rad_minus += mode.d4 * bessel_y(order, w);
    return cpow(q.x, mode.nu) * rad_plus + cpow(q.x, -mode.nu) * rad_minus;
}

Complex u2_value(const DiracMovingMode& mode, SpacetimePoint pt) {
    check_point(mode, pt);
    const PhysicalParams& p = mode.params;
    const LightConePoint q = to_lightcone(pt, p.c);
    const double w = p.m * p.c * q.y / p.hbar;
    const Complex i(0.0, 1.0);
    const Order lower(mode.nu - 1.0), upper(mode.nu + 1.0);
    Complex rad_plus = mode.d1 * bessel_j(lower, w);
    if (mode.d2 != Complex(0.0, 0.0)) rad_plus += mode.d2 * bessel_y(lower, w);
    Complex rad_minus = mode.d3 * bessel_j(upper, w);
    if (mode.d4 != Complex(0.0, 0.0)) rad_minus += mode.d4 * bessel_y(upper, w);
    return i * cpow(q.x, mode.nu - 1.0) * rad_plus - i * cpow(q.x, -mode.nu - 1.0) * rad_minus;
}

SpinorSample spinor_value(const DiracMovingMode& mode, SpacetimePoint pt) {
    const Complex u1 = u1_value(mode, pt);
    const Complex u2 = u2_value(mode, pt);
    return {0.5 * (u1 + u2), 0.5 * (u1 - u2)};
}

double dirac_freq_scale(const DiracMovingMode& mode, double t_min, double t_max) {
    const PhysicalParams& p = mode.params;
    if (!(t_min > 0.0) || !(t_max >= t_min)) throw DomainError("dirac_freq_scale: bad time range");
    const double beta = std::min(std::abs(p.v) / p.c, 0.999);
    const double gamma2 = 1.0 / (1.0 - beta * beta);
    const double mass_rate = p.m * p.c * p.c / p.hbar;
    return ((std::abs(mode.nu) + 1.0) / t_min) * gamma2 + mass_rate * std::max(1.0, p.c * t_max);
}

SpinorSample Section4Example::at(double z) const {
    return spinor_value(mode, {z, t0});
}

Section4Example section4_example(const PhysicalParams& p, double nu_integer, Complex c1) {
    check_mode_params(p);
    if (!(p.t0 > 0.0)) throw DomainError("section4_example: requires t0 > 0");
    const double r = std::nearbyint(nu_integer);
    if (!(nu_integer > 0.0) || std::abs(nu_integer - r) > 1e-9)
        throw DomainError("section4_example: nu must be a positive real integer");
    Section4Example ex;
    ex.mode = make_dirac_mode(Complex(r, 0.0), c1, Complex(0.0, 0.0), Complex(0.0, 0.0),
                              Complex(0.0, 0.0), p);
    ex.t0 = p.t0;
    return ex;
}

}  // namespace relwell
