#pragma once
#include <cmath>
#include <limits>

namespace qc {

// Sign + natural-log magnitude.  Keeps quantities like sinh(M*gamma) usable
// far beyond double exponent range; M = 4096 means magnitudes around e^8000.
struct ScaledReal {
    int sign = 0;                                            // -1, 0, +1
    double lg = -std::numeric_limits<double>::infinity();    // ln|x|

    static ScaledReal zero() { return {}; }
    static ScaledReal from(double x) {
        if (x == 0.0) return {};
        return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
    }
    static ScaledReal exp_of(double t) { return {1, t}; }    // e^t

    bool is_zero() const { return sign == 0; }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(lg); }
    // log10 magnitude, handy for diagnostics
    double log10_mag() const { return lg / std::log(10.0); }
};

inline ScaledReal operator-(const ScaledReal& a) { return {-a.sign, a.lg}; }

inline ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0 || b.sign == 0) return ScaledReal::zero();
    return {a.sign * b.sign, a.lg + b.lg};
}

inline ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0) return ScaledReal::zero();
    return {a.sign * b.sign, a.lg - b.lg};
}

inline ScaledReal operator*(const ScaledReal& a, double c) { return a * ScaledReal::from(c); }
inline ScaledReal operator*(double c, const ScaledReal& a) { return a * ScaledReal::from(c); }

inline ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const ScaledReal& hi = a.lg >= b.lg ? a : b;
    const ScaledReal& lo = a.lg >= b.lg ? b : a;
    double d = lo.lg - hi.lg;              // <= 0
    if (hi.sign == lo.sign)
        return {hi.sign, hi.lg + std::log1p(std::exp(d))};
    if (d == 0.0) return ScaledReal::zero();
    return {hi.sign, hi.lg + std::log1p(-std::exp(d))};
}

inline ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

// ln-magnitude forms of sinh/cosh, exact for every argument scale:
// sinh t = e^t (1 - e^{-2t})/2, cosh t = e^t (1 + e^{-2t})/2 for t > 0.
inline ScaledReal scaled_sinh(double t) {
    if (t == 0.0) return ScaledReal::zero();
    double u = std::fabs(t);
    double lg = u - std::log(2.0) + std::log1p(-std::exp(-2.0 * u));
    return {t > 0.0 ? 1 : -1, lg};
}

inline ScaledReal scaled_cosh(double t) {
    double u = std::fabs(t);
    return {1, u - std::log(2.0) + std::log1p(std::exp(-2.0 * u))};
}

} // namespace qc
