#pragma once

#include <cmath>
#include <complex>

// Double-double arithmetic (~32 significant digits) for the compensated
// Bessel power series.  Only the handful of operations the series needs:
// add, sub, mul, div, and the complex combinations built on them.
// Algorithms follow the usual error-free transformations (Dekker/Knuth,
// as in the QD library).

namespace relwell::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    q.lo += q3;
    return quick_two_sum(q.hi, q.lo);
}

inline dd dd_from(double x) { return {x, 0.0}; }

// Complex double-double: re and im carried as independent dd values.
struct cdd {
    dd re;
    dd im;
};

inline cdd cdd_from(std::complex<double> z) { return {dd_from(z.real()), dd_from(z.imag())}; }

inline std::complex<double> to_complex(cdd z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline cdd cdd_mul(cdd a, dd s) { return {dd_mul(a.re, s), dd_mul(a.im, s)}; }

/// a / b with b given as an exact complex-dd; uses a * conj(b) / |b|^2.
inline cdd cdd_div(cdd a, cdd b) {
    dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    cdd num = cdd_mul(a, cdd{b.re, dd_neg(b.im)});
    return {dd_div(num.re, den), dd_div(num.im, den)};
}

inline double cdd_abs(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace relwell::detail
