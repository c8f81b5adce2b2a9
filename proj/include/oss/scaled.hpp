#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace oss {

using cd = std::complex<double>;

// Complex value in scaled form m * exp(s) with real s. Used wherever Airy
// factors grow or decay faster than double range (exponents up to ~1e8 occur
// in the kernel tables at large Reynolds number). Products and ratios combine
// exponents exactly; additions rescale to the larger exponent.
struct ScaledC {
    cd m{0.0, 0.0};
    double s = 0.0;

    ScaledC() = default;
    ScaledC(cd mantissa, double logscale) : m(mantissa), s(logscale) { normalize(); }
    explicit ScaledC(cd value) : m(value), s(0.0) { normalize(); }

    // Keep |m| in a sane window so repeated multiplication cannot overflow.
    void normalize() {
        double a = std::abs(m);
        if (a == 0.0 || !std::isfinite(a)) {
            if (a == 0.0) s = 0.0;
            return;
        }
        if (a > 1e100 || a < 1e-100) {
            double l = std::log(a);
            m /= a;
            s += l;
        }
    }

    bool zero() const { return m == cd(0.0, 0.0); }

    double log_abs() const {
        double a = std::abs(m);
        return a == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(a) + s;
    }

    cd value() const {
        if (zero()) return {0.0, 0.0};
        if (s > 700.0) return m * 1e308;  // saturate; callers test log_abs first
        if (s < -745.0) return {0.0, 0.0};
        return m * std::exp(s);
    }

    ScaledC operator*(const ScaledC& o) const { return {m * o.m, s + o.s}; }
    ScaledC operator*(cd c) const { return {m * c, s}; }
    ScaledC operator*(double c) const { return {m * c, s}; }
    ScaledC operator/(const ScaledC& o) const { return {m / o.m, s - o.s}; }
    ScaledC operator-() const { return {-m, s}; }

    ScaledC operator+(const ScaledC& o) const {
        if (zero()) return o;
        if (o.zero()) return *this;
        if (s >= o.s) {
            double d = o.s - s;
            return {m + o.m * (d < -745.0 ? 0.0 : std::exp(d)), s};
        }
        double d = s - o.s;
        return {m * (d < -745.0 ? 0.0 : std::exp(d)) + o.m, o.s};
    }
    ScaledC operator-(const ScaledC& o) const { return *this + (-o); }
};

inline ScaledC scaled_exp(cd exponent) { return {std::exp(cd(0.0, exponent.imag())), exponent.real()}; }

}  // namespace oss
