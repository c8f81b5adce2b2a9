#include "oss/specialfn.hpp"
#include <vector>

#include <array>
#include <cmath>
#include <vector>

#include "oss/errors.hpp"

namespace oss {

namespace {

constexpr double kSeriesRadius = 6.0;
constexpr int kAsymTerms = 26;

using cld = std::complex<long double>;

const cd kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);   // e^{2 pi i/3}
const cd kOmega2 = std::polar(1.0, -2.0 * M_PI / 3.0); // e^{-2 pi i/3} = omega^2

// ---------------------------------------------------------------------------
// Maclaurin series. Ai(k,z) is built from the two entire solutions
// f'' = z f with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1, combined with the
// closed-form values Ai(k,0). Accumulated in long double: the series loses
// ~exp((4/3)|z|^{3/2}) digits to cancellation in the recessive direction,
// which extended precision absorbs up to the switch radius.
// ---------------------------------------------------------------------------

struct SeriesOut {
    cld f[4];  // index: 0 -> j-th family value; see eval_series
    cld g[4];
};

// Evaluates, for both base series f,g: derivative, value, first and second
// term-wise primitives (anchored at 0). Order in arrays: [deriv, value, p1, p2].
SeriesOut eval_series_ld(cld z) {
    cld z3 = z * z * z;
    SeriesOut o{};
    if (std::abs(z) < 1e-150L) {
        o.f[1] = 1.0L;
        o.g[0] = 1.0L;
        return o;
    }
    // f = sum f_k z^{3k},   f_k = f_{k-1} / ((3k-1)(3k))
    // g = sum g_k z^{3k+1}, g_k = g_{k-1} / ((3k)(3k+1))
    cld fk = 1.0L, gk = z;
    long double zmag = std::abs(z);
    long double tol = 1e-24L;
    long double scale = 1.0L;
    for (int k = 0;; ++k) {
        long double tk3 = 3.0L * k;
        // f contributions
        o.f[1] += fk;
        o.f[0] += (k == 0) ? cld(0.0L) : fk * tk3 / z;
        o.f[2] += fk * z / (tk3 + 1.0L);
        o.f[3] += fk * z * z / ((tk3 + 1.0L) * (tk3 + 2.0L));
        // g contributions (g_k carries z^{3k+1})
        o.g[1] += gk;
        o.g[0] += gk * (tk3 + 1.0L) / z;
        o.g[2] += gk * z / (tk3 + 2.0L);
        o.g[3] += gk * z * z / ((tk3 + 2.0L) * (tk3 + 3.0L));
        long double fmag = std::abs(fk), gmag = std::abs(gk);
        scale = std::max({scale, fmag, gmag});
        if (k > 3 && fmag + gmag < tol * scale) break;
        if (k > 400) break;
        fk *= z3 / ((tk3 + 2.0L) * (tk3 + 3.0L));
        gk *= z3 / ((tk3 + 3.0L) * (tk3 + 4.0L));
    }
    (void)zmag;
    return o;
}

SeriesOut eval_series(cd zz) { return eval_series_ld(cld(zz.real(), zz.imag())); }

cd to_cd(cld v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

const long double kAiZeroL = 0.355028053887817239260063186004183176L;   // Ai(0)
const long double kAiPrimeZeroL = 0.258819403792806798405183560189203963L;  // -Ai'(0)

// Ai and Ai' in extended precision inside the series disc.
void series_ai_pair(cld z, cld& ai, cld& aip) {
    SeriesOut s = eval_series_ld(z);
    ai = s.f[1] * kAiZeroL - s.g[1] * kAiPrimeZeroL;
    aip = s.f[0] * kAiZeroL - s.g[0] * kAiPrimeZeroL;
}

// ---------------------------------------------------------------------------
// Asymptotic lattice series: F(z) = e^{-zeta} Sum_j c_j z^{b0 - 1.5 j},
// zeta = (2/3) z^{3/2}. Derivatives and primitives stay on the lattice.
// ---------------------------------------------------------------------------

struct Lattice {
    double b0 = 0.0;
    std::vector<double> c;
};

Lattice derivative_lattice(const Lattice& in) {
    Lattice out;
    out.b0 = in.b0 + 0.5;
    out.c.assign(in.c.size(), 0.0);
    for (size_t m = 0; m < in.c.size(); ++m) {
        out.c[m] -= in.c[m];
        if (m > 0) out.c[m] += in.c[m - 1] * (in.b0 - 1.5 * (m - 1));
    }
    return out;
}

// Integral from z to infinity (decay sector), with overall sign for
// int_inf^z = -int_z^inf applied by the caller.
Lattice primitive_lattice(const Lattice& in) {
    Lattice out;
    out.b0 = in.b0 - 0.5;
    out.c.assign(in.c.size(), 0.0);
    for (size_t j = 0; j < in.c.size(); ++j) {
        double t = in.c[j];
        for (size_t m = j; m < out.c.size(); ++m) {
            if (m > j) {
                t *= out.b0 - 1.5 * (m - 1);  // multiplier is the previous emitted exponent
                if (t == 0.0) break;
            }
            out.c[m] += t;
        }
    }
    return out;
}

struct AiTables {
    // index k+1 for k in {-1,0,1,2}
    std::array<Lattice, 4> lat;
    AiTables() {
        // u_k recurrence (Airy asymptotic coefficients)
        std::vector<double> u(kAsymTerms);
        u[0] = 1.0;
        for (int k = 1; k < kAsymTerms; ++k)
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                   ((2.0 * k - 1.0) * 216.0 * k);
        Lattice ai0;
        ai0.b0 = -0.25;
        ai0.c.resize(kAsymTerms);
        double pref = 1.0 / (2.0 * std::sqrt(M_PI));
        double pw = 1.0;  // (3/2)^k converts zeta^{-k} to z^{-3k/2}
        for (int k = 0; k < kAsymTerms; ++k) {
            ai0.c[k] = pref * ((k % 2) ? -1.0 : 1.0) * u[k] * pw;
            pw *= 1.5;
        }
        lat[1] = ai0;
        lat[0] = derivative_lattice(ai0);
        lat[2] = primitive_lattice(ai0);
        for (double& v : lat[2].c) v = -v;
        lat[3] = primitive_lattice(lat[2]);
        for (double& v : lat[3].c) v = -v;
    }
};

const AiTables& ai_tables() {
    static const AiTables t;
    return t;
}

// Recessive-form evaluation, valid for principal |arg z| <= 2 pi/3.
ScaledC ai_asym_rec(int k, cd z) {
    const Lattice& L = ai_tables().lat[k + 1];
    cd sq = std::sqrt(z);
    cd zeta = (2.0 / 3.0) * z * sq;
    cd r = 1.0 / (z * sq);  // z^{-3/2}
    cd zb = std::exp(L.b0 * std::log(z));
    // Truncate at the globally smallest term (the coefficients are sign-mixed,
    // so the magnitudes wiggle before the factorial divergence sets in).
    cd t = zb;
    size_t n = L.c.size();
    static thread_local std::vector<cd> terms;
    terms.assign(n, cd(0.0));
    size_t best = 0;
    double bestmag = 1e300;
    for (size_t j = 0; j < n; ++j) {
        terms[j] = L.c[j] * t;
        double mag = std::abs(terms[j]);
        if (mag < bestmag) {
            bestmag = mag;
            best = j;
        }
        t *= r;
    }
    cd sum = 0.0;
    for (size_t j = 0; j <= best; ++j) sum += terms[j];
    return scaled_exp(-zeta) * ScaledC(sum);
}

// Connection onto the two rotated recessive sectors, used for
// principal |arg z| > 2 pi/3. Constants follow from integrating
// Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0 from 0.
ScaledC ai_asym_connect(int k, cd z) {
    ScaledC a1 = ai_asym_rec(k, kOmega * z);
    ScaledC a2 = ai_asym_rec(k, kOmega2 * z);
    switch (k) {
        case 0:
            return -(a1 * kOmega) - (a2 * kOmega2);
        case -1:
            return -(a1 * kOmega2) - (a2 * kOmega);
        case 1:
            return ScaledC(cd(-1.0, 0.0)) - a1 - a2;
        case 2:
            return ScaledC(-z) - (a1 * kOmega2) - (a2 * kOmega);
    }
    throw DomainError("airy order k must be in -1..2");
}

ScaledC ai_scaled_impl(int k, cd z) {
    if (k < -1 || k > 2) throw DomainError("airy order k must be in -1..2");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("airy argument must be finite");
    if (std::abs(z) <= kSeriesRadius) {
        SeriesOut s = eval_series(z);
        // Ai(z) = a*f - b*g with a = Ai(0), b = -Ai'(0), all in long double:
        // the combination cancels ~exp((4/3)|z|^{3/2}) of the partial sums.
        const int j = k + 1;  // map k=-1..2 onto [deriv, value, p1, p2]
        cld base = s.f[j] * kAiZeroL - s.g[j] * kAiPrimeZeroL;
        if (k == 1) base += -1.0L / 3.0L;  // Ai(1,0)
        if (k == 2)
            base += kAiPrimeZeroL - cld(z.real(), z.imag()) / 3.0L;  // Ai(2,0) + Ai(1,0) z
        return ScaledC(to_cd(base));
    }
    double ph = std::arg(z);
    if (std::abs(ph) <= 2.0 * M_PI / 3.0) return ai_asym_rec(k, z);
    return ai_asym_connect(k, z);
}

}  // namespace

double airy_series_radius() { return kSeriesRadius; }

cd airy_at_zero(int k) {
    if (k < -1 || k > 2) throw DomainError("airy order k must be in -1..2");
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    double val = sgn * std::pow(3.0, -(k + 2.0) / 3.0) / gamma((k + 2.0) / 3.0);
    return {val, 0.0};
}

ScaledC airy_scaled(AiryKind kind, int k, cd z) {
    if (kind == AiryKind::Ai) return ai_scaled_impl(k, z);
    // Ci reduces to Ai on the rotated argument.
    const cd pref = 2.0 * M_PI * std::polar(1.0, M_PI / 6.0);
    cd w = kOmega * z;
    switch (k) {
        case 0:
            return ai_scaled_impl(0, w) * pref;
        case -1:
            return ai_scaled_impl(-1, w) * (pref * kOmega);
        case 1:
            return (ai_scaled_impl(1, w) - ScaledC(airy_at_zero(1))) * (pref * kOmega2);
        case 2:
            return (ai_scaled_impl(2, w) - ScaledC(airy_at_zero(2) + airy_at_zero(1) * w)) *
                   (pref * kOmega);
    }
    throw DomainError("airy order k must be in -1..2");
}

cd airy(AiryKind kind, int k, cd z) { return airy_scaled(kind, k, z).value(); }

cd c_ai_ratio(cd Y) {
    ScaledC a2 = airy_scaled(AiryKind::Ai, 2, Y);
    ScaledC a1 = airy_scaled(AiryKind::Ai, 1, Y);
    if (a1.zero() || std::abs(a1.m) < 1e-280)
        throw DivisionNearZero("Ai(1,Y) underflows in c_ai_ratio");
    return (a2 / a1).value();
}

double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma requires x > 0");
    return std::tgamma(x);
}

cd airy_wronskian(cd z) {
    if (std::abs(z) <= kSeriesRadius) {
        // Both factors can reach exp(+-(2/3)|z|^{3/2}); form the combination
        // in extended precision, including the rotation of the argument.
        static const cld om(cosl(2.0L * M_PIl / 3.0L), sinl(2.0L * M_PIl / 3.0L));
        static const cld pref =
            2.0L * M_PIl * cld(cosl(M_PIl / 6.0L), sinl(M_PIl / 6.0L));
        cld zl(z.real(), z.imag());
        cld ai, aip, rai, raip;
        series_ai_pair(zl, ai, aip);
        series_ai_pair(om * zl, rai, raip);
        cld ci = pref * rai;
        cld cip = pref * om * raip;
        return to_cd(ai * cip - aip * ci);
    }
    ScaledC w = airy_scaled(AiryKind::Ai, 0, z) * airy_scaled(AiryKind::Ci, -1, z) -
                airy_scaled(AiryKind::Ai, -1, z) * airy_scaled(AiryKind::Ci, 0, z);
    return w.value();
}

}  // namespace oss
