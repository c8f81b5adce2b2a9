#pragma once

#include <complex>

#include "oss/scaled.hpp"

namespace oss {

enum class AiryKind { Ai, Ci };

// Airy family evaluated anywhere in the complex plane.
//   k = -1 : derivative, k = 0 : the function itself,
//   k = 1,2: first/second primitive.
// Ai primitives vanish as z -> +inf inside |arg z| < pi/3; Ci primitives are
// anchored at 0. Ci is the second solution with unit Wronskian
// Ai(z)Ci'(z) - Ai'(z)Ci(z) = 1 that decays as z -> inf along arg z = -5pi/6;
// those two conditions force Ci(z) = 2 pi e^{i pi/6} Ai(z e^{2 i pi/3}).
ScaledC airy_scaled(AiryKind kind, int k, cd z);

// Plain-valued convenience wrapper; saturates instead of overflowing when the
// asymptotic exponent exceeds double range.
cd airy(AiryKind kind, int k, cd z);

// C_Ai(Y) = Ai(2,Y)/Ai(1,Y), evaluated with the shared exponential factor
// divided out exactly. Throws DivisionNearZero if Ai(1,Y) underflows.
cd c_ai_ratio(cd Y);

// Gamma function on (0, 10]; DomainError for x <= 0.
double gamma(double x);

// Value of Ai(k,0) from the closed form (-1)^k 3^{-(k+2)/3} / Gamma((k+2)/3).
cd airy_at_zero(int k);

// Ai(z)Ci'(z) - Ai'(z)Ci(z), which should equal 1. Evaluated in extended
// precision inside the series disc: the identity pairs exponentially large
// and small factors and a double-precision product loses the digits the
// 1e-10 verification needs.
cd airy_wronskian(cd z);

// Switchover radius between the Maclaurin series and the asymptotic
// expansions; exposed for the overlap validation test.
double airy_series_radius();

}  // namespace oss
