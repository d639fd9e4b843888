#pragma once

#include <cmath>

namespace clairaut {

// First-order dual number: value + derivative with respect to one seed
// variable. Arithmetic carries the chain rule exactly, so derivatives of
// parsed expressions come out to machine precision instead of O(h^2).
struct DualValue {
    double value = 0.0;
    double derivative = 0.0;
};

inline DualValue constant(double v) { return {v, 0.0}; }
inline DualValue seeded(double v) { return {v, 1.0}; }

inline DualValue operator-(const DualValue& a) { return {-a.value, -a.derivative}; }

inline DualValue operator+(const DualValue& a, const DualValue& b) {
    return {a.value + b.value, a.derivative + b.derivative};
}

inline DualValue operator-(const DualValue& a, const DualValue& b) {
    return {a.value - b.value, a.derivative - b.derivative};
}

inline DualValue operator*(const DualValue& a, const DualValue& b) {
    return {a.value * b.value, a.derivative * b.value + a.value * b.derivative};
}

inline DualValue operator/(const DualValue& a, const DualValue& b) {
    const double v = a.value / b.value;
    // (a/b)' = (a' - (a/b) b') / b
    return {v, (a.derivative - v * b.derivative) / b.value};
}

inline DualValue sqrt(const DualValue& a) {
    const double r = std::sqrt(a.value);
    return {r, a.derivative / (2.0 * r)};
}

inline DualValue sin(const DualValue& a) {
    return {std::sin(a.value), std::cos(a.value) * a.derivative};
}

inline DualValue cos(const DualValue& a) {
    return {std::cos(a.value), -std::sin(a.value) * a.derivative};
}

inline DualValue log(const DualValue& a) {
    return {std::log(a.value), a.derivative / a.value};
}

inline DualValue exp(const DualValue& a) {
    const double e = std::exp(a.value);
    return {e, e * a.derivative};
}

// Base raised to a constant exponent: d(u^c) = c u^(c-1) u'. Kept separate
// from the general case so integer powers of negative bases stay defined.
inline DualValue pow_const(const DualValue& a, double c) {
    const double v = std::pow(a.value, c);
    return {v, c * std::pow(a.value, c - 1.0) * a.derivative};
}

// General u^w for positive u: u^w = exp(w ln u).
inline DualValue pow(const DualValue& a, const DualValue& b) {
    const double v = std::pow(a.value, b.value);
    const double dv = v * (b.derivative * std::log(a.value) + b.value * a.derivative / a.value);
    return {v, dv};
}

} // namespace clairaut
