#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "relwell/bessel.hpp"

using relwell::bessel_j;
using relwell::bessel_j_checked;
using relwell::bessel_j_dx;
using relwell::bessel_y;
using relwell::bessel_y_checked;
using relwell::bessel_y_dx;
using relwell::Complex;
using relwell::log_gamma;
using relwell::Order;
using relwell::pi;

namespace {

// Brute-force oracle: direct term-by-term summation of the ascending series
// with per-term exp/log-gamma evaluation.  Only valid where cancellation is
// mild (x <= 8); independent of the recurrence/compensation path used by
// the implementation.
Complex brute_series_j(Complex nu, double x) {
    Complex sum = 0.0;
    for (int k = 0; k < 80; ++k) {
        const Complex lt = (nu + 2.0 * k) * std::log(0.5 * x) - log_gamma(Complex(k + 1.0, 0.0)) -
                           log_gamma(nu + Complex(k + 1.0, 0.0));
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * std::exp(lt);
    }
    return sum;
}

// Tanh-sinh (double-exponential) quadrature on (-1, 1); handles endpoint
// log singularities.
template <typename F>
double tanh_sinh(F&& f) {
    const double h = 1.0 / 64.0;
    double sum = 0.0;
    for (int k = -400; k <= 400; ++k) {
        const double t = k * h;
        const double u = 0.5 * pi * std::sinh(t);
        const double x = std::tanh(u);
        const double w = 0.5 * pi * std::cosh(t) / std::pow(std::cosh(u), 2);
        if (1.0 - std::abs(x) < 1e-17 || w < 1e-20) continue;
        sum += w * f(x);
    }
    return sum * h;
}

// Y_0(x) by independent quadrature of the integral representation
//   Y_0(x) = (4/pi^2) Int_0^{pi/2} cos(x cos th) (gamma + ln(2 x sin^2 th)) dth.
double y0_quadrature(double x) {
    const double gamma = 0.5772156649015328606;
    auto integrand = [&](double s) {
        // map s in (-1,1) -> th in (0, pi/2)
        const double th = 0.25 * pi * (s + 1.0);
        const double st = std::sin(th);
        return std::cos(x * std::cos(th)) * (gamma + std::log(2.0 * x * st * st)) * (0.25 * pi);
    };
    return (4.0 / (pi * pi)) * tanh_sinh(integrand);
}

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("log_gamma: known values and recursion") {
    CHECK(std::abs(std::exp(log_gamma(Complex(0.5, 0.0))) - std::sqrt(pi)) < 1e-14);
    // integer factorials
    double f = 1.0;
    for (int n = 1; n <= 15; ++n) {
        f *= n;
        const Complex g = std::exp(log_gamma(Complex(n + 1.0, 0.0)));
        CHECK(std::abs(g - f) / f < 1e-13);
    }
    // |Gamma(1 + i y)|^2 = pi y / sinh(pi y)
    for (double y : {0.3, 1.0, 5.0, 20.0, 50.0}) {
        const Complex lg = log_gamma(Complex(1.0, y));
        const double mod2 = std::exp(2.0 * lg.real());
        const double want = pi * y / std::sinh(pi * y);
        CHECK(std::abs(mod2 - want) / want < 1e-12);
    }
    // recursion Gamma(z+1) = z Gamma(z) across the reflection boundary
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(-4.0, 4.0), im(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        Complex z(re(rng), im(rng));
        if (std::abs(z - std::nearbyint(z.real())) < 1e-3 && std::abs(z.imag()) < 1e-3) continue;
        const Complex lhs = std::exp(log_gamma(z + 1.0));
        const Complex rhs = z * std::exp(log_gamma(z));
        CHECK(rel_err(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("bessel_j: trivial and closed-form values") {
    // J_0(0+) -> 1
    CHECK(std::abs(bessel_j(Order(0.0), 1e-12) - 1.0) < 1e-15);
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x at x = pi/2  ->  2/pi
    const Complex j_half = bessel_j(Order(0.5), 0.5 * pi);
    CHECK(std::abs(j_half - 2.0 / pi) < 1e-12);
    // generic half-integer closed form on a range of x
    for (double x : {0.1, 1.0, 7.7, 30.0, 90.0}) {
        const double want = std::sqrt(2.0 / (pi * x)) * std::sin(x);
        CHECK(std::abs(bessel_j(Order(0.5), x) - want) < 1e-11 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("bessel_y: closed-form half-integer and quadrature oracle") {
    // Y_{1/2}(x) = -sqrt(2/(pi x)) cos x
    for (double x : {0.1, 0.5 * pi, 2.3, 40.0}) {
        const double want = -std::sqrt(2.0 / (pi * x)) * std::cos(x);
        CHECK(std::abs(bessel_y(Order(0.5), x) - want) < 1e-11);
    }
    // Y_0 against the independent integral-representation quadrature
    for (double x : {0.4, 1.0, 2.9}) {
        const double want = y0_quadrature(x);
        CHECK(std::abs(bessel_y(Order(0.0), x) - want) < 1e-10);
    }
}

TEST_CASE("bessel_j: brute-force series oracle, complex orders") {
    const std::vector<Complex> orders = {{0.0, 1.0}, {0.0, -1.0}, {0.0, 5.0}, {2.0, 1.0},
                                         {-2.3, 0.7}, {0.3, 0.0}, {-0.5, 0.0}, {3.0, 0.0}};
    for (const Complex nu : orders) {
        for (double x : {0.05, 0.7, 2.0, 6.0}) {
            const Complex want = brute_series_j(nu, x);
            const Complex got = bessel_j(Order(nu), x);
            CHECK(rel_err(got, want) < 5e-11);
        }
    }
}

TEST_CASE("bessel_j: conjugation symmetry J_conj(nu)(x) = conj(J_nu(x))") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.1, 20.0), xs(0.1, 40.0);
    for (int i = 0; i < 60; ++i) {
        const Complex nu(re(rng), im(rng));
        const double x = xs(rng);
        const Complex a = bessel_j(Order(std::conj(nu)), x);
        const Complex b = std::conj(bessel_j(Order(nu), x));
        CHECK(rel_err(a, b) < 1e-12);
    }
    // the spec's named instance: J_i(1) vs conj(J_{-i}(1))
    CHECK(rel_err(bessel_j(Order(Complex(0.0, 1.0)), 1.0),
                  std::conj(bessel_j(Order(Complex(0.0, -1.0)), 1.0))) < 1e-13);
}

TEST_CASE("wronskian identity across order types and the x range") {
    const std::vector<Complex> orders = {{0.0, 0.0},  {0.5, 0.0}, {3.0, 0.0}, {0.0, 0.5},
                                         {0.0, 5.0},  {0.0, 20.0}, {2.0, 1.0}, {-2.5, 0.0},
                                         {7.0, 0.0},  {0.25, -3.0}};
    for (const Complex nu : orders) {
        for (int i = 0; i < 40; ++i) {
            const double x = 0.1 * std::pow(1000.0, i / 39.0);
            const Complex j = bessel_j(Order(nu), x);
            const Complex jp = bessel_j_dx(Order(nu), x);
            const Complex y = bessel_y(Order(nu), x);
            const Complex yp = bessel_y_dx(Order(nu), x);
            const Complex w = j * yp - jp * y;
            const double scale =
                std::max(1.0, std::abs(j * yp) + std::abs(jp * y));
            CHECK(std::abs(w - 2.0 / (pi * x)) / scale < 1e-10);
        }
    }
}

TEST_CASE("three-term recurrence J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu") {
    const std::vector<Complex> orders = {{0.0, 0.0}, {1.5, 0.0}, {5.0, 0.0},
                                         {0.0, 3.0}, {2.0, 1.0}, {0.0, 20.0}};
    for (const Complex nu : orders) {
        for (double x : {0.1, 1.0, 3.3, 17.0, 64.0}) {
            const Complex a = bessel_j(Order(nu - 1.0), x);
            const Complex b = bessel_j(Order(nu + 1.0), x);
            const Complex c = bessel_j(Order(nu), x);
            const double scale = std::max({1.0, std::abs(c), std::abs(a), std::abs(b)});
            CHECK(std::abs(a + b - (2.0 * nu / x) * c) < 1e-9 * scale);
        }
    }
}

TEST_CASE("derivatives: recurrence form agrees with finite differences") {
    const std::vector<Complex> orders = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 3.0}, {2.0, 1.0}};
    for (const Complex nu : orders) {
        for (double x : {0.5, 1.6, 5.0, 20.0}) {
            const double h = 1e-4 * std::max(1.0, x);
            auto fd = [&](auto&& f) {
                return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
            };
            const Complex jd = fd([&](double q) { return bessel_j(Order(nu), q); });
            const Complex yd = fd([&](double q) { return bessel_y(Order(nu), q); });
            const Complex jda = bessel_j_dx(Order(nu), x);
            const Complex yda = bessel_y_dx(Order(nu), x);
            CHECK(std::abs(jda - jd) < 1e-8 * std::max(1.0, std::abs(jda)));
            CHECK(std::abs(yda - yd) < 1e-8 * std::max(1.0, std::abs(yda)));
        }
    }
    // J_0' = -J_1
    for (double x : {0.3, 2.0, 11.0}) {
        CHECK(rel_err(bessel_j_dx(Order(0.0), x), -bessel_j(Order(1.0), x)) < 1e-12);
    }
    // J_{i3}' recurrence vs FD, spec instance
    const Complex nu(0.0, 3.0);
    const double x = 5.0, h = 2e-4 * x;
    const Complex fd = (-bessel_j(Order(nu), x + 2 * h) + 8.0 * bessel_j(Order(nu), x + h) -
                        8.0 * bessel_j(Order(nu), x - h) + bessel_j(Order(nu), x - 2 * h)) /
                       (12.0 * h);
    CHECK(rel_err(bessel_j_dx(Order(nu), x), fd) < 1e-8);
}

#if defined(__GLIBCXX__)
TEST_CASE("cross-check against libstdc++ real-order implementations") {
    for (double nu : {0.0, 1.0, 2.0, 3.0, 0.5, 4.5, 7.0}) {
        for (double x : {0.1, 0.9, 3.7, 12.5, 33.0, 80.0}) {
            const double jref = std::cyl_bessel_j(nu, x);
            const double yref = std::cyl_neumann(nu, x);
            const Complex jgot = bessel_j(Order(nu), x);
            const Complex ygot = bessel_y(Order(nu), x);
            CHECK(std::abs(jgot - jref) < 2e-10 * std::max(1.0, std::abs(jref)));
            CHECK(std::abs(ygot - yref) < 2e-10 * std::max(1.0, std::abs(yref)));
            CHECK(std::abs(jgot.imag()) < 1e-12 * std::max(1.0, std::abs(jref)));
        }
    }
}
#endif

TEST_CASE("series/asymptotic overlap certification") {
    // In the band where both branches are viable they must agree to 1e-11
    // relative; this certifies the imaginary-order real-pair series against
    // the Hankel route.
    const std::vector<Complex> orders = {{0.0, 5.0}, {0.0, 20.0}, {3.0, 0.0}, {2.0, 1.0}};
    for (const Complex nu : orders) {
        for (double x = 25.0; x <= 60.0; x += 7.0) {
            const auto s = relwell::bessel_detail::series_j(nu, x);
            const auto a = relwell::bessel_detail::asymptotic_j(nu, x);
            const double scale = std::max(std::abs(s.value), std::abs(a.value));
            if (s.abs_err < 1e-12 * scale && a.abs_err < 1e-12 * scale) {
                CHECK(std::abs(s.value - a.value) < 1e-11 * scale);
            }
        }
    }
}

TEST_CASE("near-integer order handling for Y") {
    // Y at order n +/- eps must approach the integer-order value smoothly.
    for (int n : {0, 1, 3}) {
        const double x = 8.0;
        const Complex y0 = bessel_y(Order(double(n)), x);
        for (double eps : {1e-7, 1e-6, 3e-6}) {
            const Complex yp = bessel_y(Order(n + eps), x);
            const Complex ym = bessel_y(Order(n - eps), x);
            CHECK(std::abs(yp - y0) < 1e-5 * std::max(1.0, std::abs(y0)));
            CHECK(std::abs(0.5 * (yp + ym) - y0) < 1e-9 * std::max(1.0, std::abs(y0)));
        }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS((void)bessel_j(Order(1.0), 0.0), relwell::DomainError);
    CHECK_THROWS_AS((void)bessel_j(Order(1.0), -2.0), relwell::DomainError);
    CHECK_THROWS_AS((void)bessel_y(Order(0.5), 0.0), relwell::DomainError);
    // checked API returns a usable error estimate
    const auto e = bessel_j_checked(Order(Complex(0.0, 5.0)), 2.0);
    CHECK(e.abs_err < 1e-10 * std::abs(e.value));
}

TEST_CASE("order classification") {
    CHECK(Order(3.0).kind() == Order::Kind::Real);
    CHECK(Order(Complex(0.0, 2.0)).kind() == Order::Kind::Imaginary);
    CHECK(Order(Complex(1.0, 1.0)).kind() == Order::Kind::General);
    CHECK(Order(Complex(20.0, 1e-13)).kind() == Order::Kind::Real);
}
