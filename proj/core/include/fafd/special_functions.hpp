#pragma once

#include <stdexcept>

namespace fafd {

// Target accuracy for the numerical kernels below. The kernels are tuned so
// that relative error stays near rel_tol over their whole operating range;
// abs_tol is the floor used when results approach zero.
struct AccuracySpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
};

class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Bessel J0. Power series on |x| <= 8, Hankel asymptotic expansion beyond.
double bessel_j0(double x);

// Modified Bessel I0, x >= 0. Power series on x <= 15, asymptotic beyond.
double bessel_i0(double x);

// exp(-x) * I0(x); stable for large arguments, defined for x >= 0.
double bessel_i0_scaled(double x);

// First-order Marcum Q: Q1(a,b) = P[Rice(a,1) > b], a,b >= 0.
// Bessel-series with a Chernoff-style truncation bound in the small-a*b
// regime; quadrature of the exponentially scaled Rice tail when a*b > 30.
double marcum_q1(double a, double b);

// Upper incomplete gamma Gamma(s,x) for real s (negative and zero included
// via the recurrence Gamma(s+1,x) = s*Gamma(s,x) + x^s e^-x and
// Gamma(0,x) = E1(x)); requires x > 0 when s <= 0.
double upper_incomplete_gamma(double s, double x);

// Lower incomplete gamma, s > 0, x >= 0.
double lower_incomplete_gamma(double s, double x);

// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s), s > 0.
double gamma_p(double s, double x);

// Exponential integral E1.
double expint_e1(double x);

// Generalized exponential integral E_n(x) = x^{n-1} Gamma(1-n, x) for real
// n >= 0 and x > 0.
double expint_en(double n, double x);

}  // namespace fafd
