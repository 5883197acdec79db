#pragma once

#include <complex>

#include "relwell/core.hpp"

// Bessel functions J_nu, Y_nu and their x-derivatives for real, purely
// imaginary and general complex order at real positive argument.
//
// Evaluation strategy:
//   * ascending power series, accumulated in double-double arithmetic so
//     that the alternating-sum cancellation (which grows like exp(x) for
//     real order and exp(x^2 / 4|nu|) for large imaginary order) is paid
//     out of ~32 carried digits instead of 16.  For purely imaginary
//     order the complex-dd accumulation carries Re J and Im J as two
//     independent compensated real series, which is the cancellation-free
//     real-pair evaluation of J_{i kappa};
//   * Hankel large-argument expansion assembled from H1 = A e^{i w} S1 and
//     H2 = A e^{-i w} S2 (each free of internal cancellation), truncated
//     at its smallest term;
//   * Y from J via the connection formula, with a dedicated integer-order
//     series (log + finite + digamma-weighted sums) and a first-order
//     Taylor correction for near-integer real orders.
//
// Every evaluation carries an absolute error estimate; the plain entry
// points raise AccuracyError when the estimate exceeds the certification
// gate relative to both the value and the local oscillation envelope.

namespace relwell {

/// Bessel order, classified against the axes with a 1e-14 tolerance.
struct Order {
    Complex nu{0.0, 0.0};

    Order() = default;
    Order(double real_nu) : nu(real_nu, 0.0) {}
    Order(Complex n) : nu(n) {}

    enum class Kind { Real, Imaginary, General };

    Kind kind(double tol = 1e-14) const {
        const double scale = std::max(1.0, std::abs(nu));
        if (std::abs(nu.imag()) <= tol * scale) return Kind::Real;
        if (std::abs(nu.real()) <= tol * scale) return Kind::Imaginary;
        return Kind::General;
    }
};

/// Value plus an absolute error estimate (branch disagreement / truncation
/// / rounding model, whichever the chosen branch reports).
struct BesselEval {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
};

/// log Gamma for complex argument (Lanczos, reflection for Re z < 0.5).
/// The imaginary part may differ from the principal branch by multiples
/// of 2 pi i; all internal uses go through exp().
Complex log_gamma(Complex z);

Complex bessel_j(Order nu, double x);
Complex bessel_y(Order nu, double x);
Complex bessel_j_dx(Order nu, double x);
Complex bessel_y_dx(Order nu, double x);

BesselEval bessel_j_checked(Order nu, double x);
BesselEval bessel_y_checked(Order nu, double x);
BesselEval bessel_j_dx_checked(Order nu, double x);
BesselEval bessel_y_dx_checked(Order nu, double x);

namespace bessel_detail {
/// Individual evaluation branches, exposed so tests can certify the
/// overlap band between them.
BesselEval series_j(Complex nu, double x);
BesselEval asymptotic_j(Complex nu, double x);
BesselEval asymptotic_y(Complex nu, double x);
}  // namespace bessel_detail

}  // namespace relwell
