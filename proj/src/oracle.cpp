#include "relwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relwell {

namespace {

// 4th-order central stencils.
Complex d1(const std::function<Complex(double)>& f, double q, double h) {
    return (-f(q + 2.0 * h) + 8.0 * f(q + h) - 8.0 * f(q - h) + f(q - 2.0 * h)) / (12.0 * h);
}

Complex d2(const std::function<Complex(double)>& f, double q, double h) {
    return (-f(q + 2.0 * h) + 16.0 * f(q + h) - 30.0 * f(q) + 16.0 * f(q - h) - f(q - 2.0 * h)) /
           (12.0 * h * h);
}

double norm_scale(std::initializer_list<Complex> terms) {
    double s = residual_floor;
    for (const Complex& t : terms) s = std::max(s, std::abs(t));
    return s;
}

struct Accumulator {
    double max_rel = 0.0;
    double sum = 0.0;
    int n = 0;
    std::vector<WorstPoint> worst;

    void add(double z, double t, double r) {
        max_rel = std::max(max_rel, r);
        sum += r;
        ++n;
        worst.push_back({z, t, r});
        std::sort(worst.begin(), worst.end(),
                  [](const WorstPoint& a, const WorstPoint& b) { return a.resid > b.resid; });
        if (worst.size() > 10) worst.resize(10);
    }

    ResidualReport report(const Grid2D& g) const {
        ResidualReport rep;
        std::ostringstream os;
        os << g.nz << "x" << g.nt << " grid, z in [" << g.z_lo << ", " << g.z_hi << "], t in ["
           << g.t_lo << ", " << g.t_hi << "]";
        rep.grid_desc = os.str();
        rep.max_rel = max_rel;
        rep.mean_rel = (n > 0) ? sum / n : 0.0;
        rep.worst = worst;
        rep.n_points = n;
        return rep;
    }
};

template <typename PointFn>
ResidualReport sweep(const Grid2D& g, PointFn&& point_residual) {
    if (g.nz < 1 || g.nt < 1) throw DomainError("fd_residual: grid must have at least one point");
    Accumulator acc;
    for (int it = 0; it < g.nt; ++it) {
        const double t = (g.nt == 1) ? g.t_lo : g.t_lo + (g.t_hi - g.t_lo) * it / (g.nt - 1);
        for (int iz = 0; iz < g.nz; ++iz) {
            const double z = (g.nz == 1) ? g.z_lo : g.z_lo + (g.z_hi - g.z_lo) * iz / (g.nz - 1);
            acc.add(z, t, point_residual(z, t));
        }
    }
    return acc.report(g);
}

}  // namespace

Complex fd_dz(const ScalarSampler& f, double z, double t, double h) {
    return d1([&](double q) { return f(q, t); }, z, h);
}

Complex fd_dt(const ScalarSampler& f, double z, double t, double h) {
    return d1([&](double q) { return f(z, q); }, t, h);
}

ResidualReport fd_residual(PDEKind kind, const ScalarSampler& f, const Grid2D& grid,
                           const HPolicy& h, const PhysicalParams& params) {
    if (kind != PDEKind::KleinGordon && kind != PDEKind::KGonU1)
        throw DomainError("fd_residual: scalar sampler requires a scalar PDE kind");
    const double hb2 = params.hbar * params.hbar;
    const double c2 = params.c * params.c;
    const double m2c4 = params.m * params.m * c2 * c2;
    return sweep(grid, [&](double z, double t) {
        const double hz = h.h_for(z), ht = h.h_for(t);
        const Complex ftt = d2([&](double q) { return f(z, q); }, t, ht);
        const Complex fzz = d2([&](double q) { return f(q, t); }, z, hz);
        const Complex t1 = hb2 * ftt;
        const Complex t2 = -hb2 * c2 * fzz;
        const Complex t3 = m2c4 * f(z, t);
        return std::abs(t1 + t2 + t3) / norm_scale({t1, t2, t3});
    });
}

ResidualReport fd_residual(PDEKind kind, const PairSampler& f, const Grid2D& grid,
                           const HPolicy& h, const PhysicalParams& params,
                           const PotentialFn& potential) {
    if (kind != PDEKind::DiracSystem && kind != PDEKind::USystem)
        throw DomainError("fd_residual: pair sampler requires a pair PDE kind");
    const Complex ihbar(0.0, params.hbar);
    const double mc2 = params.m * params.c * params.c;
    const double c = params.c;

    return sweep(grid, [&](double z, double t) {
        const double hz = h.h_for(z), ht = h.h_for(t);
        const auto val = f(z, t);
        const Complex a_t = d1([&](double q) { return f(z, q)[0]; }, t, ht);
        const Complex b_t = d1([&](double q) { return f(z, q)[1]; }, t, ht);
        const Complex a_z = d1([&](double q) { return f(q, t)[0]; }, z, hz);
        const Complex b_z = d1([&](double q) { return f(q, t)[1]; }, z, hz);
        const double V = potential ? potential(z) : 0.0;

        Complex r1, r2;
        double s1, s2;
        if (kind == PDEKind::DiracSystem) {
            // i hbar d_t phi0 = -i hbar c d_z phi2 + (m c^2 + V) phi0
            // i hbar d_t phi2 = -i hbar c d_z phi0 + (V - m c^2) phi2
            const Complex u1 = ihbar * a_t, u2 = ihbar * c * b_z, u3 = (mc2 + V) * val[0];
            const Complex w1 = ihbar * b_t, w2 = ihbar * c * a_z, w3 = (V - mc2) * val[1];
            r1 = u1 + u2 - u3;
            r2 = w1 + w2 - w3;
            s1 = norm_scale({u1, u2, u3});
            s2 = norm_scale({w1, w2, w3});
        } else {
            // i hbar d_t U1 = -i hbar c d_z U1 + m c^2 U2
            // i hbar d_t U2 = +i hbar c d_z U2 + m c^2 U1
            const Complex u1 = ihbar * a_t, u2 = ihbar * c * a_z, u3 = mc2 * val[1];
            const Complex w1 = ihbar * b_t, w2 = ihbar * c * b_z, w3 = mc2 * val[0];
            r1 = u1 + u2 - u3;
            r2 = w1 - w2 - w3;
            s1 = norm_scale({u1, u2, u3});
            s2 = norm_scale({w1, w2, w3});
        }
        return std::max(std::abs(r1) / s1, std::abs(r2) / s2);
    });
}

std::vector<double> schrodinger_well_oracle(double V0_nr, double L, double m, double hbar) {
    if (!(V0_nr > 0.0)) throw DomainError("schrodinger_well_oracle: requires V0 > 0");
    if (!(L > 0.0) || !(m > 0.0) || !(hbar > 0.0))
        throw DomainError("schrodinger_well_oracle: requires L, m, hbar > 0");

    const double k_max = std::sqrt(2.0 * m * V0_nr) / hbar;
    auto g = [&](double k, int n) { return k * L + 2.0 * std::asin(std::min(k / k_max, 1.0)) - n * pi; };

    std::vector<double> energies;
    for (int n = 1;; ++n) {
        if (g(k_max, n) <= 0.0) break;  // no further roots
        double lo = 0.0, hi = k_max;
        // g is increasing in k; bisect to relative precision 1e-14.
        for (int it = 0; it < 200 && (hi - lo) > 1e-15 * k_max; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g(mid, n) < 0.0 ? lo : hi) = mid;
        }
        const double k = 0.5 * (lo + hi);
        energies.push_back(hbar * hbar * k * k / (2.0 * m));
    }
    return energies;
}

}  // namespace relwell
