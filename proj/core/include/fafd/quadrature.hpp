#pragma once

#include <functional>
#include <vector>

namespace fafd {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 24;
    // mass bound used when truncating [0, inf) integrals
    double infinite_tail_cutoff = 1e-9;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    long evals = 0;
};

// Adaptive Gauss-Kronrod 15(7) over a finite interval.
QuadResult integrate_adaptive_full(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec);

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec);

// Nodes/weights of the generalized Gauss-Laguerre rule, normalized so that
// sum_i w_i f(x_i) ~ E[f(X)] with X ~ Gamma(alpha+1, 1). Requires alpha > -1.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_laguerre(int n, double alpha);

}  // namespace fafd
