#pragma once

// Forward-mode dual numbers with a two-component gradient (∂/∂t, ∂/∂ρ).

#include <cmath>

namespace nearsymp::detail {

struct Dual {
    double v = 0.0;
    double dt = 0.0;
    double dr = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value) : v(value) {}  // NOLINT: implicit constants are intended
    constexpr Dual(double value, double d_t, double d_r) : v(value), dt(d_t), dr(d_r) {}

    static constexpr Dual var_t(double value) { return {value, 1.0, 0.0}; }
    static constexpr Dual var_r(double value) { return {value, 0.0, 1.0}; }
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.dt + b.dt, a.dr + b.dr}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.dt - b.dt, a.dr - b.dr}; }
inline Dual operator-(Dual a) { return {-a.v, -a.dt, -a.dr}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.dt * b.v + a.v * b.dt, a.dr * b.v + a.v * b.dr}; }
inline Dual operator/(Dual a, Dual b) {
    const double inv = 1.0 / b.v;
    const double q = a.v * inv;
    return {q, (a.dt - q * b.dt) * inv, (a.dr - q * b.dr) * inv};
}

// Applies a scalar function with value fv and derivative fd at a.v.
inline Dual chain(Dual a, double fv, double fd) { return {fv, fd * a.dt, fd * a.dr}; }

inline Dual exp(Dual a) {
    const double e = std::exp(a.v);
    return chain(a, e, e);
}
inline Dual log(Dual a) { return chain(a, std::log(a.v), 1.0 / a.v); }
inline Dual sqrt(Dual a) {
    const double s = std::sqrt(a.v);
    return chain(a, s, 0.5 / s);
}
inline Dual sin(Dual a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
inline Dual cos(Dual a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }
inline Dual atan(Dual a) { return chain(a, std::atan(a.v), 1.0 / (1.0 + a.v * a.v)); }
inline Dual atan2(Dual y, Dual x) {
    const double r2 = x.v * x.v + y.v * y.v;
    return {std::atan2(y.v, x.v), (x.v * y.dt - y.v * x.dt) / r2, (x.v * y.dr - y.v * x.dr) / r2};
}

// Flat-at-zero function e^{-1/x} (x > 0), 0 otherwise.
inline Dual flat(Dual a) {
    if (a.v <= 0.0) return Dual{};
    const double e = std::exp(-1.0 / a.v);
    return chain(a, e, e / (a.v * a.v));
}

// Smooth monotone step: 0 for x ≤ lo, 1 for x ≥ hi.
inline Dual smooth_step(Dual x, double lo, double hi) {
    const Dual s = (x - lo) / (hi - lo);
    if (s.v <= 0.0) return Dual{};
    if (s.v >= 1.0) return Dual{1.0};
    const Dual a = flat(s);
    const Dual b = flat(1.0 - s);
    return a / (a + b);
}

}  // namespace nearsymp::detail
