#pragma once

#include "singwell/errors.hpp"

namespace singwell::specfun {

// log|x| together with the sign of x, for quantities that overflow as values
// but stay tame in the log domain (gamma ratios and the like).
struct SignedLog {
    double log_abs;
    int sign;  // +1 or -1
    double value() const;
};

// ln|Gamma(z)| with sign tracking.  Reflection handles z < 0.5; throws
// pole_error at z = 0, -1, -2, ...
SignedLog log_gamma(double z);

// Parameters of the confluent hypergeometric function M(a, b, y).
// b must not be zero or a negative integer; y >= 0.
struct KummerParams {
    double a;
    double b;
    double y;
};

// Parameters of the generalized Laguerre polynomial L_n^(alpha)(y).
// n >= 0 and alpha > -1 (weight integrability).
struct LaguerreParams {
    int n;
    double alpha;
    double y;
};

// M(a, b, y) by direct summation of the defining series.  When a = -n the
// series terminates at j = n exactly and no truncation tolerance is involved;
// otherwise summation stops once |term| < 1e-16 |sum| for 3 consecutive
// terms (cap 10 000 iterations, then no_convergence_error).
double kummer_m(const KummerParams& p);
double kummer_m(double a, double b, double y);

// L_n^(alpha)(y) by the three-term recurrence in the degree.
double laguerre(const LaguerreParams& p);
double laguerre(int n, double alpha, double y);

// The growing term Gamma(b)/Gamma(a) e^y y^(a-b) of the large-y behavior of
// M(a, b, y).  Absent (pole_error) when a is a non-positive integer -- the
// polynomial case, which is exactly why bound states require a = -n.
double kummer_asymptotic_dominant(const KummerParams& p);

// Generalized binomial coefficient C(top, k) = Gamma(top+1) / (k! Gamma(top-k+1)).
double binomial(double top, int k);

}  // namespace singwell::specfun
