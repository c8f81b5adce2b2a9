#pragma once

#include <array>
#include <cmath>

namespace oss {

// Truncated Taylor jet (value + first N derivatives) used for the smooth
// cutoff and its derivatives. Only the operations the cutoff needs.
template <int N>
struct Jet {
    std::array<double, N + 1> a{};  // a[k] = d^k f / dz^k

    static Jet constant(double c) {
        Jet j;
        j.a[0] = c;
        return j;
    }
    static Jet variable(double x) {
        Jet j;
        j.a[0] = x;
        if constexpr (N >= 1) j.a[1] = 1.0;
        return j;
    }

    Jet operator+(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.a[k] = a[k] + o.a[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.a[k] = a[k] - o.a[k];
        return r;
    }
    Jet operator*(const Jet& o) const {  // Leibniz
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double s = 0.0;
            for (int j = 0; j <= k; ++j) s += binom(k, j) * a[j] * o.a[k - j];
            r.a[k] = s;
        }
        return r;
    }
    Jet operator/(const Jet& o) const {
        // r = f/g solved from f = r*g order by order.
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double s = a[k];
            for (int j = 0; j < k; ++j) s -= binom(k, j) * r.a[j] * o.a[k - j];
            r.a[k] = s / o.a[0];
        }
        return r;
    }

    static double binom(int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
};

// exp(f) via d(e^f) = e^f df, expanded with Leibniz on the derivative chain.
template <int N>
Jet<N> jet_exp(const Jet<N>& f) {
    Jet<N> r;
    r.a[0] = std::exp(f.a[0]);
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += Jet<N>::binom(k - 1, j) * r.a[j] * f.a[k - j];
        r.a[k] = s;
    }
    return r;
}

template <int N>
Jet<N> jet_recip(const Jet<N>& f) {
    return Jet<N>::constant(1.0) / f;
}

}  // namespace oss
