#include "fafd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fafd {

namespace {

// QUADPACK dqk15 abscissae and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15 {
    double value;
    double error;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double result_k = kWgk[7] * fc;
    double result_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        result_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
    }
    result_k *= h;
    result_g *= h;
    return {result_k, std::fabs(result_k - result_g)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           int max_depth, QuadResult& out) {
    const Gk15 g = gk15(f, a, b);
    out.evals += 15;
    if (g.error <= tol || depth >= max_depth) {
        out.value += g.value;
        out.error += g.error;
        if (g.error > tol && depth >= max_depth) out.converged = false;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, out);
    adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_adaptive_full(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec) {
    QuadResult out;
    if (a == b) return out;
    const Gk15 first = gk15(f, a, b);
    out.evals = 15;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(first.value));
    if (first.error <= tol) {
        out.value = first.value;
        out.error = first.error;
        return out;
    }
    out = QuadResult{};
    adapt(f, a, b, tol, 0, spec.max_depth, out);
    return out;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
    return integrate_adaptive_full(f, a, b, spec).value;
}

namespace {

// Symmetric tridiagonal QL with implicit shifts; rotations are accumulated
// into `z`, which starts as e1 so it ends as the first row of the
// eigenvector matrix (all Golub-Welsch needs).
void tql_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("gauss_laguerre: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double fv = s * e[i];
                    const double bv = c * e[i];
                    r = std::hypot(fv, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = fv / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bv;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bv;
                    fv = z[i + 1];
                    z[i + 1] = s * z[i] + c * fv;
                    z[i] = c * z[i] - s * fv;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

GaussRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must be > -1");
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0), z(n, 0.0);
    for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(k * (k + alpha));
    z[0] = 1.0;
    tql_first_row(d, e, z);

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = z[idx[i]] * z[idx[i]];  // normalized: weights sum to 1
    }
    return rule;
}

}  // namespace fafd
