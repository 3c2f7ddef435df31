#pragma once

#include <cmath>

// Minimal double-double arithmetic (an unevaluated sum of two doubles, about
// 106 bits of significand). The alternating series in this library have
// intermediate terms that dwarf the final sum; carrying the compensation term
// through every product and quotient keeps that cancellation harmless where a
// plain Kahan accumulator would not.

namespace muqm::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by design
    constexpr DD(double h, double l) : hi(h), lo(l) {}
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

#if defined(FP_FAST_FMA)
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
#else
// Dekker splitting; exact product without relying on a fast fma.
inline DD two_prod(double a, double b) {
    constexpr double splitter = 134217729.0;  // 2^27 + 1
    double p = a * b;
    double ca = splitter * a;
    double a_hi = ca - (ca - a);
    double a_lo = a - a_hi;
    double cb = splitter * b;
    double b_hi = cb - (cb - b);
    double b_lo = b - b_hi;
    double err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
    return {p, err};
}
#endif

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }

inline double to_double(DD a) { return a.hi + a.lo; }

}  // namespace muqm::detail
