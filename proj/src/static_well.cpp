#include "relwell/static_well.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace relwell {

namespace {

Complex branch_sqrt(double radicand) {
    // principal sqrt with the +i|.| branch on the negative axis
    return std::sqrt(Complex(radicand, 0.0));
}

double mc2(const PhysicalParams& p) { return p.m * p.c * p.c; }

void check_pole(double denom, double scale, const char* what) {
    if (std::abs(denom) <= 1e-14 * scale)
        throw DomainError(std::string("static_well: spinor amplitude pole (") + what + ")");
}

struct BoundWindow {
    double lo, hi;
};

BoundWindow bound_window(const PhysicalParams& p) {
    if (!(p.V0 > 0.0)) throw DomainError("static_well: bound window requires V0 > 0");
    const double lo = std::max(mc2(p), p.V0 - mc2(p));
    const double hi = p.V0 + mc2(p);
    return {lo, hi};
}

void check_bound_window(double E, const PhysicalParams& p) {
    if (!(E > mc2(p)) || !(std::abs(E - p.V0) < mc2(p)))
        throw DomainError("static_well: E outside the bound window");
}

double time_phase_energy(Region region, double E, const PhysicalParams& p, PhaseConvention ph) {
    if (ph == PhaseConvention::RegionShift && region != Region::II) return E - p.V0;
    return E;
}

}  // namespace

WaveNumbers WaveNumbers::at(double E, const PhysicalParams& p) {
    p.validate();
    const double hc = p.hbar * p.c;
    WaveNumbers wn;
    wn.E = E;
    wn.k1 = branch_sqrt(E * E - mc2(p) * mc2(p)) / hc;
    wn.k2 = branch_sqrt((E - p.V0) * (E - p.V0) - mc2(p) * mc2(p)) / hc;
    return wn;
}

Complex spinor_lower_amplitude(Complex k, double E, Region region, const PhysicalParams& p) {
    const double V = (region == Region::II) ? 0.0 : p.V0;
    const double denom = E - V + mc2(p);
    check_pole(denom, std::abs(E) + mc2(p) + std::abs(V), "E - V + mc^2");
    return p.hbar * p.c * k / denom;
}

Complex matching_ratio(double E, const PhysicalParams& p) {
    const WaveNumbers wn = WaveNumbers::at(E, p);
    const double num_den = E + mc2(p);
    const double out_den = E - p.V0 + mc2(p);
    check_pole(num_den, std::abs(E) + mc2(p), "E + mc^2");
    check_pole(out_den, std::abs(E) + mc2(p) + std::abs(p.V0), "E - V0 + mc^2");
    const Complex denom = wn.k2 * num_den;
    if (std::abs(denom) <= 1e-14 * (std::abs(wn.k1) * std::abs(out_den) + 1e-30))
        throw DomainError("static_well: matching ratio singular (k2 ~ 0)");
    return wn.k1 * out_den / denom;
}

std::function<SpinorSample(double z, double t)> spinor_plane_wave(Complex k, double E,
                                                                  int direction, Region region,
                                                                  const PhysicalParams& p,
                                                                  PhaseConvention phase) {
    if (direction != 1 && direction != -1)
        throw DomainError("spinor_plane_wave: direction must be +1 or -1");
    const Complex amp = spinor_lower_amplitude(k, E, region, p);
    const double Eph = time_phase_energy(region, E, p, phase);
    const double hbar = p.hbar;
    const double dir = static_cast<double>(direction);
    return [=](double z, double t) -> SpinorSample {
        const Complex ph = std::exp(Complex(0.0, dir * 1.0) * k * z - Complex(0.0, Eph * t / hbar));
        return {ph, dir * amp * ph};
    };
}

std::pair<Complex, Complex> match_at_zero(Complex h, Complex J, double E,
                                          const PhysicalParams& p) {
    const Complex rho = matching_ratio(E, p);
    const Complex sum = h + J;
    const Complex dif = rho * (h - J);
    return {0.5 * (sum + dif), 0.5 * (sum - dif)};
}

std::pair<Complex, Complex> match_at_L(Complex h, Complex J, double E, const PhysicalParams& p) {
    const Complex rho = matching_ratio(E, p);
    const WaveNumbers wn = WaveNumbers::at(E, p);
    const Complex ep1 = std::exp(Complex(0.0, 1.0) * wn.k1 * p.L0);
    const Complex ep2 = std::exp(Complex(0.0, 1.0) * wn.k2 * p.L0);
    const Complex sum = h * ep1 + J / ep1;
    const Complex dif = rho * (h * ep1 - J / ep1);
    return {0.5 * (sum + dif) / ep2, 0.5 * (sum - dif) * ep2};
}

double bound_state_determinant(double E, const PhysicalParams& p) {
    check_bound_window(E, p);
    const double hc = p.hbar * p.c;
    const double k1 = std::sqrt(E * E - mc2(p) * mc2(p)) / hc;
    const double k2a = std::sqrt(mc2(p) * mc2(p) - (E - p.V0) * (E - p.V0)) / hc;
    const double theta = 2.0 * std::atan2(k1 * (E - p.V0 + mc2(p)), k2a * (E + mc2(p)));
    return std::sin(k1 * p.L0 + theta);
}

namespace {

// phase whose zeros (mod pi) are the bound states, plus its dE-derivative
struct DetPhase {
    double phi, dphi;
};

DetPhase det_phase(double E, const PhysicalParams& p) {
    const double hc = p.hbar * p.c;
    const double M = mc2(p);
    const double k1 = std::sqrt(E * E - M * M) / hc;
    const double k2a = std::sqrt(M * M - (E - p.V0) * (E - p.V0)) / hc;
    const double N = k1 * (E - p.V0 + M);
    const double D = k2a * (E + M);
    const double dk1 = E / (hc * hc * k1);
    const double dk2a = -(E - p.V0) / (hc * hc * k2a);
    const double dN = dk1 * (E - p.V0 + M) + k1;
    const double dD = dk2a * (E + M) + k2a;
    DetPhase r;
    r.phi = k1 * p.L0 + 2.0 * std::atan2(N, D);
    r.dphi = dk1 * p.L0 + 2.0 * (dN * D - N * dD) / (N * N + D * D);
    return r;
}

StaticSolution build_bound_solution(double E, const PhysicalParams& p) {
    const WaveNumbers wn = WaveNumbers::at(E, p);
    const Complex rho = matching_ratio(E, p);
    StaticSolution sol;
    sol.E = E;
    sol.params = p;
    sol.kind = SolutionKind::Bound;
    sol.k1 = wn.k1;
    sol.k2 = wn.k2;  // Im k2 > 0: e^{+i k2 z} decays rightward, e^{-i k2 z} leftward
    sol.h = 1.0 - rho;
    sol.J = -(1.0 + rho);
    sol.s = 0.0;
    sol.b = sol.h + sol.J;
    const Complex ep1 = std::exp(Complex(0.0, 1.0) * wn.k1 * p.L0);
    const Complex ep2 = std::exp(Complex(0.0, 1.0) * wn.k2 * p.L0);
    sol.q = (sol.h * ep1 + sol.J / ep1) / ep2;
    sol.r = 0.0;
    // normalise the largest amplitude to 1 for reproducible output
    double scale = 0.0;
    for (const Complex* a : {&sol.s, &sol.b, &sol.h, &sol.J, &sol.q, &sol.r})
        scale = std::max(scale, std::abs(*a));
    for (Complex* a : {&sol.s, &sol.b, &sol.h, &sol.J, &sol.q, &sol.r}) *a /= scale;
    return sol;
}

}  // namespace

std::vector<StaticSolution> bound_states(const PhysicalParams& p, int grid_density, int threads) {
    const BoundWindow w = bound_window(p);
    if (!(w.lo < w.hi)) return {};
    if (grid_density < 16) throw DomainError("bound_states: grid_density must be >= 16");
    const double eps = 1e-9 * (w.hi - w.lo);
    const double lo = w.lo + eps, hi = w.hi - eps;

    auto det = [&](double E) { return bound_state_determinant(E, p); };

    // scan for sign changes, optionally in parallel panels
    std::vector<std::pair<double, double>> brackets;
    const int n = grid_density;
    auto scan_panel = [&](int i0, int i1) {
        std::vector<std::pair<double, double>> local;
        double e_prev = lo + (hi - lo) * i0 / n;
        double f_prev = det(e_prev);
        for (int i = i0 + 1; i <= i1; ++i) {
            const double e = lo + (hi - lo) * i / n;
            const double f = det(e);
            if ((f_prev < 0.0 && f > 0.0) || (f_prev > 0.0 && f < 0.0)) local.push_back({e_prev, e});
            e_prev = e;
            f_prev = f;
        }
        return local;
    };
    if (threads > 1) {
        const int panels = std::min(threads, 8);
        std::vector<std::future<std::vector<std::pair<double, double>>>> futs;
        for (int pnl = 0; pnl < panels; ++pnl) {
            const int i0 = pnl * n / panels, i1 = (pnl + 1) * n / panels;
            futs.push_back(std::async(std::launch::async, scan_panel, i0, i1));
        }
        for (auto& f : futs) {
            auto part = f.get();
            brackets.insert(brackets.end(), part.begin(), part.end());
        }
    } else {
        brackets = scan_panel(0, n);
    }

    std::vector<StaticSolution> out;
    const double M = mc2(p);
    for (auto [a, b] : brackets) {
        double fa = det(a);
        for (int it = 0; it < 120 && (b - a) > 1e-15 * M; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = det(mid);
            if ((fa < 0.0) == (fm < 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        double E = 0.5 * (a + b);
        // two Newton steps on the analytically differentiated phase
        for (int it = 0; it < 2; ++it) {
            const DetPhase d = det_phase(E, p);
            const double step = -std::sin(d.phi) / (std::cos(d.phi) * d.dphi);
            const double En = E + step;
            if (En > w.lo && En < w.hi) E = En;
        }
        StaticSolution sol = build_bound_solution(E, p);
        const double resid = sol.plugback_residual();
        if (resid > 1e-10)
            throw ConvergenceError("bound_states: root at E=" + std::to_string(E) +
                                   " failed plug-back (residual " + std::to_string(resid) +
                                   ", bracket [" + std::to_string(a) + ", " + std::to_string(b) +
                                   "])");
        out.push_back(sol);
    }
    // deduplicate roots found twice across panel edges
    std::sort(out.begin(), out.end(),
              [](const StaticSolution& x, const StaticSolution& y) { return x.E < y.E; });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const StaticSolution& x, const StaticSolution& y) {
                              return std::abs(x.E - y.E) < 1e-10 * M;
                          }),
              out.end());
    return out;
}

ScatteringResult scattering_coefficients(double E, const PhysicalParams& p) {
    p.validate();
    const double M = mc2(p);
    const double k2sq = (E - p.V0) * (E - p.V0) - M * M;
    if (!(k2sq > 0.0)) throw DomainError("scattering_coefficients: k2 not real at this energy");
    const double out_den = E - p.V0 + M;
    check_pole(out_den, std::abs(E) + M + std::abs(p.V0), "E - V0 + mc^2");
    check_pole(E + M, std::abs(E) + M, "E + mc^2");

    const double hc = p.hbar * p.c;
    const double k2mag = std::sqrt(k2sq) / hc;
    // transmitted branch with positive current (Klein zone flips the sign)
    const double kt = (out_den > 0.0) ? k2mag : -k2mag;
    const Complex k1 = branch_sqrt(E * E - M * M) / hc;

    const Complex rho = k1 * out_den / (kt * (E + M));
    if (!is_finite(rho)) throw DomainError("scattering_coefficients: matching ratio not finite");

    // q = 1, r = 0; peel back to region I
    const Complex ep1 = std::exp(Complex(0.0, 1.0) * k1 * p.L0);
    const Complex ept = std::exp(Complex(0.0, 1.0) * kt * p.L0);
    const Complex h = 0.5 * ept * (1.0 + 1.0 / rho) / ep1;
    const Complex J = 0.5 * ept * (1.0 - 1.0 / rho) * ep1;
    const Complex s = 0.5 * ((h + J) + rho * (h - J));
    const Complex b = 0.5 * ((h + J) - rho * (h - J));

    ScatteringResult res;
    res.R = std::norm(b) / std::norm(s);
    res.T = 1.0 / std::norm(s);

    StaticSolution& sol = res.solution;
    sol.E = E;
    sol.params = p;
    sol.kind = SolutionKind::Scattering;
    sol.k1 = k1;
    sol.k2 = kt;
    sol.s = s / s;  // unit incident amplitude
    sol.b = b / s;
    sol.h = h / s;
    sol.J = J / s;
    sol.q = 1.0 / s;
    sol.r = 0.0;
    return res;
}

SpinorSample StaticSolution::sample_in(Region region, double z, double t) const {
    const double M = params.m * params.c * params.c;
    Complex k, ca, cb;
    if (region == Region::II) {
        k = k1;
        ca = h;
        cb = J;
    } else {
        k = k2;
        ca = (region == Region::I) ? s : q;
        cb = (region == Region::I) ? b : r;
    }
    const double V = (region == Region::II) ? 0.0 : params.V0;
    const Complex amp = params.hbar * params.c * k / (E - V + M);
    const double Eph = time_phase_energy(region, E, params, phase);
    const Complex tfac = std::exp(Complex(0.0, -Eph * t / params.hbar));
    const Complex epl = std::exp(Complex(0.0, 1.0) * k * z);
    const Complex emi = 1.0 / epl;
    SpinorSample out;
    out.phi0 = (ca * epl + cb * emi) * tfac;
    out.phi2 = amp * (ca * epl - cb * emi) * tfac;
    return out;
}

SpinorSample StaticSolution::sample(double z, double t) const {
    const Region region = (z <= 0.0) ? Region::I : (z < params.L0 ? Region::II : Region::III);
    return sample_in(region, z, t);
}

double StaticSolution::plugback_residual() const {
    auto diff_at = [&](Region left, Region right, double zi) {
        const SpinorSample a = sample_in(left, zi, 0.0);
        const SpinorSample bb = sample_in(right, zi, 0.0);
        const double scale = std::max(
            {std::abs(a.phi0), std::abs(a.phi2), std::abs(bb.phi0), std::abs(bb.phi2), 1e-30});
        return std::max(std::abs(a.phi0 - bb.phi0), std::abs(a.phi2 - bb.phi2)) / scale;
    };
    return std::max(diff_at(Region::I, Region::II, 0.0),
                    diff_at(Region::II, Region::III, params.L0));
}

}  // namespace relwell
