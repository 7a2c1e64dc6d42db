#include "fafd/special_functions.hpp"

#include <cmath>
#include <limits>

#include "fafd/quadrature.hpp"

namespace fafd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_finite(double x) { return std::isfinite(x); }

}  // namespace

double bessel_j0(double x) {
    if (!is_finite(x)) throw domain_error("bessel_j0: non-finite argument");
    const double ax = std::fabs(x);
    if (ax <= 8.0) {
        // sum_k (-1)^k (x^2/4)^k / (k!)^2
        const double q = 0.25 * ax * ax;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
            if (std::fabs(term) < kEps * std::fabs(sum) + 1e-300) break;
        }
        return sum;
    }
    // Hankel expansion: J0 = sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)),
    // chi = x - pi/4, with magnitudes m_k = ((2k-1)!!)^2 / (k! (8x)^k):
    // P = m0 - m2 + m4 - ..., Q = -m1 + m3 - m5 + ...
    double p = 0.0, qs = 0.0;
    double m = 1.0;
    for (int k = 0; k < 40; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            const double mn = m * odd * odd / (8.0 * k * ax);
            if (mn >= m) break;  // semiconvergent series turned
            m = mn;
        }
        if (k % 2 == 0) {
            p += ((k / 2) % 2 == 0) ? m : -m;
        } else {
            qs += (((k + 1) / 2) % 2 == 0) ? m : -m;
        }
        if (m < 1e-17) break;
    }
    const double chi = ax - 0.78539816339744830961566084581988;
    return std::sqrt(2.0 / (3.14159265358979323846 * ax)) *
           (p * std::cos(chi) - qs * std::sin(chi));  // even in x
}

double bessel_i0(double x) {
    if (!is_finite(x) || x < 0.0) throw domain_error("bessel_i0: argument must be finite and >= 0");
    if (x <= 15.0) {
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 80; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < kEps * sum) break;
        }
        return sum;
    }
    return bessel_i0_scaled(x) * std::exp(x);
}

double bessel_i0_scaled(double x) {
    if (!is_finite(x) || x < 0.0)
        throw domain_error("bessel_i0_scaled: argument must be finite and >= 0");
    if (x <= 15.0) {
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 80; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < kEps * sum) break;
        }
        return sum * std::exp(-x);
    }
    // asymptotic: e^-x I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double tn = term * odd * odd / (8.0 * k * x);
        if (tn >= term) break;
        term = tn;
        sum += term;
        if (term < kEps * sum) break;
    }
    return sum / std::sqrt(2.0 * 3.14159265358979323846 * x);
}

namespace {

// Canonical Marcum series: Q1(a,b) = sum_k Pois(k; a^2/2) * P[Erlang(k+1) > b^2/2].
double marcum_q1_series(double a, double b) {
    const double ha = 0.5 * a * a;
    const double hb = 0.5 * b * b;
    double p = std::exp(-ha);       // Poisson weight
    double g = std::exp(-hb);       // e^-hb hb^k / k!
    double tail = g;                // P[Erlang(k+1) > hb]
    double q = p * tail;
    for (int k = 1; k < 2000; ++k) {
        p *= ha / k;
        g *= hb / k;
        tail += g;
        if (tail > 1.0) tail = 1.0;
        q += p * tail;
        // remaining Poisson mass is bounded by a geometric series once ha < k+1
        if (ha < k + 1.0) {
            const double r = ha / (k + 1.0);
            if (p * r / (1.0 - r) < 1e-16) break;
        }
    }
    return q < 1.0 ? q : 1.0;
}

// Exponentially scaled Rice tail integrand: t * e^{-(t-a)^2/2} * i0e(a t).
double rice_tail_scaled(double a, double t) {
    const double d = t - a;
    return t * std::exp(-0.5 * d * d) * bessel_i0_scaled(a * t);
}

double marcum_q1_quadrature(double a, double b) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-16;
    const auto f = [a](double t) { return rice_tail_scaled(a, t); };
    if (b <= a) {
        // left tail is the small quantity
        const double cdf = integrate_adaptive(f, 0.0, b, spec);
        return 1.0 - cdf;
    }
    const double hi = b + 45.0;
    const double q = integrate_adaptive(f, b, hi, spec);
    return q > 0.0 ? (q < 1.0 ? q : 1.0) : 0.0;
}

}  // namespace

double marcum_q1(double a, double b) {
    if (!is_finite(a) || !is_finite(b) || a < 0.0 || b < 0.0)
        throw domain_error("marcum_q1: arguments must be finite and >= 0");
    if (b == 0.0) return 1.0;
    if (a == 0.0) return std::exp(-0.5 * b * b);
    if (a * b > 30.0 || 0.5 * a * a > 60.0) return marcum_q1_quadrature(a, b);
    return marcum_q1_series(a, b);
}

namespace {

// Kummer series for the lower incomplete gamma, x < s+1.
double lower_gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) break;
    }
    return sum * std::exp(-x + s * std::log(x));
}

// Modified Lentz continued fraction for Gamma(s,x), valid for x > 0.
double upper_gamma_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x + s * std::log(x));
}

double upper_gamma_positive(double s, double x) {
    if (x == 0.0) return std::tgamma(s);
    if (x < s + 1.0) return std::tgamma(s) - lower_gamma_series(s, x);
    return upper_gamma_cf(s, x);
}

}  // namespace

double expint_e1(double x) {
    if (!is_finite(x) || x <= 0.0) throw domain_error("expint_e1: requires x > 0");
    if (x <= 1.0) {
        // -gamma - ln x + sum (-1)^{k+1} x^k / (k k!)
        const double euler = 0.57721566490153286060651209008240;
        double term = 1.0, sum = 0.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            const double contrib = -term / k;
            sum += contrib;
            if (std::fabs(contrib) < kEps * std::fabs(sum)) break;
        }
        return -euler - std::log(x) + sum;
    }
    return upper_gamma_cf(0.0, x);
}

double upper_incomplete_gamma(double s, double x) {
    if (!is_finite(s) || !is_finite(x) || x < 0.0)
        throw domain_error("upper_incomplete_gamma: bad arguments");
    if (s <= 0.0 && x == 0.0)
        throw domain_error("upper_incomplete_gamma: divergent at (s <= 0, x = 0)");
    if (s > 0.0) return upper_gamma_positive(s, x);
    if (s == 0.0) return expint_e1(x);

    // s < 0: compute at s+m in (0,1] and recurse down through
    // Gamma(t,x) = (Gamma(t+1,x) - x^t e^-x) / t, routing t = 0 through E1.
    const int m = static_cast<int>(std::floor(-s)) + 1;
    const double top = s + m;
    double v = (top == 0.0) ? expint_e1(x) : upper_gamma_positive(top, x);
    const double ex = std::exp(-x);
    for (int j = m - 1; j >= 0; --j) {
        const double t = s + j;
        if (t == 0.0) {
            v = expint_e1(x);
        } else {
            v = (v - std::pow(x, t) * ex) / t;
        }
    }
    return v;
}

double lower_incomplete_gamma(double s, double x) {
    if (!is_finite(s) || s <= 0.0 || !is_finite(x) || x < 0.0)
        throw domain_error("lower_incomplete_gamma: requires s > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return lower_gamma_series(s, x);
    return std::tgamma(s) - upper_gamma_cf(s, x);
}

double gamma_p(double s, double x) { return lower_incomplete_gamma(s, x) / std::tgamma(s); }

double expint_en(double n, double x) {
    if (!is_finite(n) || n < 0.0) throw domain_error("expint_en: requires n >= 0");
    if (!is_finite(x) || x <= 0.0) throw domain_error("expint_en: requires x > 0");
    if (n == 0.0) return std::exp(-x) / x;
    if (n == 1.0) return expint_e1(x);
    return std::pow(x, n - 1.0) * upper_incomplete_gamma(1.0 - n, x);
}

}  // namespace fafd
