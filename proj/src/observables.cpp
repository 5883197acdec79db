#include "relwell/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relwell {

namespace {

Complex fd4(const std::function<Complex(double)>& f, double q, double h) {
    return (-f(q + 2.0 * h) + 8.0 * f(q + h) - 8.0 * f(q - h) + f(q - 2.0 * h)) / (12.0 * h);
}

template <typename F>
auto simpson(double a, double b, int n_odd, F&& f) {
    const double h = (b - a) / (n_odd - 1);
    auto acc = f(a) + f(b);
    for (int i = 1; i < n_odd - 1; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

}  // namespace

double density(const SpinorSample& s) { return std::norm(s.phi0) + std::norm(s.phi2); }

double current(const SpinorSample& s, const PhysicalParams& p) {
    return 2.0 * p.c * std::real(std::conj(s.phi0) * s.phi2);
}

ResidualReport continuity_residual(const SpinorSampler& f, const IntervalGrid& grid,
                                   const PhysicalParams& p, const HPolicy& h) {
    grid.validate();
    double max_rel = 0.0, sum = 0.0;
    std::vector<WorstPoint> worst;
    for (int i = 0; i < grid.n_points; ++i) {
        const double z = grid.z_lo + (grid.z_hi - grid.z_lo) * i / (grid.n_points - 1);
        const double hz = h.h_for(z), ht = h.h_for(grid.t);
        const Complex drho = fd4([&](double q) { return Complex(density(f(z, q)), 0.0); },
                                 grid.t, ht);
        const Complex dj = fd4([&](double q) { return Complex(current(f(q, grid.t), p), 0.0); },
                               z, hz);
        const double scale =
            std::max({std::abs(drho), std::abs(dj), residual_floor});
        const double r = std::abs(drho + dj) / scale;
        max_rel = std::max(max_rel, r);
        sum += r;
        worst.push_back({z, grid.t, r});
        std::sort(worst.begin(), worst.end(),
                  [](const WorstPoint& a, const WorstPoint& b) { return a.resid > b.resid; });
        if (worst.size() > 10) worst.resize(10);
    }
    ResidualReport rep;
    std::ostringstream os;
    os << grid.n_points << " points, z in [" << grid.z_lo << ", " << grid.z_hi << "], t = "
       << grid.t;
    rep.grid_desc = os.str();
    rep.max_rel = max_rel;
    rep.mean_rel = sum / grid.n_points;
    rep.worst = worst;
    rep.n_points = grid.n_points;
    return rep;
}

MomentumResult momentum_expectation(const SpinorSampler& f, const IntervalGrid& grid,
                                    const PhysicalParams& p, const HPolicy& h) {
    grid.validate();
    const double t = grid.t;

    auto integrand = [&](double z) -> Complex {
        const double hz = h.h_for(z);
        const SpinorSample s = f(z, t);
        const Complex d0 = fd4([&](double q) { return f(q, t).phi0; }, z, hz);
        const Complex d2 = fd4([&](double q) { return f(q, t).phi2; }, z, hz);
        const Complex mihbar(0.0, -p.hbar);
        return std::conj(s.phi0) * mihbar * d0 + std::conj(s.phi2) * mihbar * d2;
    };
    auto rho = [&](double z) -> Complex { return Complex(density(f(z, t)), 0.0); };

    MomentumResult res;
    int n = grid.n_points | 1;  // Simpson needs an odd count
    for (int level = 0; level < 3; ++level) {
        const Complex num = simpson(grid.z_lo, grid.z_hi, n, integrand);
        const Complex den = simpson(grid.z_lo, grid.z_hi, n, rho);
        if (!(den.real() > 1e-12))
            throw DomainError("momentum_expectation: field norm over the interval is too small");
        res.history.push_back(num / den);
        n = 2 * (n - 1) + 1;
    }
    const Complex p2 = res.history[1], p3 = res.history[2];
    const double disc = std::abs(p2 - p3) / std::max(std::abs(p3), 1e-300);
    if (disc > 1e-4)
        throw ConvergenceError(
            "momentum_expectation: refinement changed the result by more than 1e-4 relative");
    res.p = p3;
    return res;
}

}  // namespace relwell
