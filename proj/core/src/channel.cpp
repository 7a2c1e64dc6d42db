#include "fafd/channel.hpp"

#include <cmath>

#include "fafd/special_functions.hpp"

namespace fafd {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfSqrt = 0.70710678118654752440;  // sqrt(1/2)

cplx draw_cn(double variance, Rng& rng) {
    const double s = std::sqrt(0.5 * variance);
    return {s * rng.normal(), s * rng.normal()};
}
}  // namespace

CorrelationProfile correlation_profile(const FluidAntennaGeometry& fa) {
    CorrelationProfile p;
    p.mu.assign(fa.n_ports, 0.0);
    for (int i = 2; i <= fa.n_ports; ++i) {
        p.mu[i - 1] = bessel_j0(2.0 * kPi * (i - 1) * fa.kappa / (fa.n_ports - 1));
    }
    return p;
}

EstimatedChannelLaw estimated_channel_law(const CorrelationProfile& profile, double sigma2,
                                          const std::vector<double>& sigma_e2,
                                          EstimationConvention convention) {
    const int n = profile.n_ports();
    EstimatedChannelLaw law;
    law.ports.reserve(n > 0 ? n - 1 : 0);
    if (convention == EstimationConvention::lmmse_consistent) {
        auto est_var = [&](int idx) {
            // estimate variance sigma^2 - sigma_e^2; floored to keep the law
            // nondegenerate when estimation is useless
            return std::max(sigma2 - sigma_e2[idx], 1e-12 * sigma2);
        };
        const double s1 = est_var(0);
        law.ref_var = s1;
        for (int i = 1; i < n; ++i) {
            const double si = est_var(i);
            const double mu = profile.mu[i];
            law.ports.push_back({mu * std::sqrt(si / s1), si * (1.0 - mu * mu)});
        }
    } else {
        law.ref_var = sigma2 + sigma_e2[0];
        for (int i = 1; i < n; ++i) {
            const double mu = profile.mu[i];
            law.ports.push_back({mu, sigma2 * (1.0 - mu * mu) + sigma_e2[i]});
        }
    }
    return law;
}

std::vector<cplx> draw_true_channels(const CorrelationProfile& profile, double sigma2, Rng& rng) {
    const int n = profile.n_ports();
    const double s = std::sqrt(sigma2);
    std::vector<cplx> g(n);
    const double a1 = kHalfSqrt * rng.normal();
    const double b1 = kHalfSqrt * rng.normal();
    g[0] = {s * a1, s * b1};
    for (int i = 1; i < n; ++i) {
        const double mu = profile.mu[i];
        const double c = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        const double ai = kHalfSqrt * rng.normal();
        const double bi = kHalfSqrt * rng.normal();
        g[i] = {s * (c * ai + mu * a1), s * (c * bi + mu * b1)};
    }
    return g;
}

ChannelDraw draw_channel_block(const CorrelationProfile& profile, double sigma2,
                               const std::vector<double>& sigma_e2,
                               EstimationConvention convention, Rng& rng) {
    const int n = profile.n_ports();
    ChannelDraw d;
    d.g_hat.resize(n);
    d.e.resize(n);
    d.g.resize(n);

    if (convention == EstimationConvention::lmmse_consistent) {
        // correlated unit-variance block scaled per port, independent errors
        std::vector<cplx> u = draw_true_channels(profile, 1.0, rng);
        for (int i = 0; i < n; ++i) {
            const double s_hat = std::sqrt(std::max(0.0, sigma2 - sigma_e2[i]));
            d.g_hat[i] = s_hat * u[i];
            d.e[i] = draw_cn(sigma_e2[i], rng);
            d.g[i] = d.g_hat[i] + d.e[i];
        }
    } else {
        // verbatim additive law: g_hat_i = mu_i g_hat_1 + w_i
        d.g_hat[0] = draw_cn(sigma2 + sigma_e2[0], rng);
        for (int i = 1; i < n; ++i) {
            const double mu = profile.mu[i];
            const double w_var = sigma2 * (1.0 - mu * mu) + sigma_e2[i];
            d.g_hat[i] = mu * d.g_hat[0] + draw_cn(w_var, rng);
        }
        for (int i = 0; i < n; ++i) {
            d.e[i] = draw_cn(sigma_e2[i], rng);
            d.g[i] = d.g_hat[i] + d.e[i];
        }
    }
    return d;
}

double draw_residual_li(double mu_nakagami, double sigma2_li, Rng& rng) {
    if (!(mu_nakagami >= 0.5)) throw domain_error("draw_residual_li: shape must be >= 0.5");
    if (sigma2_li < 0.0 || sigma2_li > 1.0)
        throw domain_error("draw_residual_li: variance outside [0,1]");
    if (sigma2_li == 0.0) return 0.0;
    return rng.gamma(mu_nakagami, sigma2_li / mu_nakagami);
}

int select_port(const std::vector<cplx>& g_hat) {
    int best = 0;
    double best_mag = std::norm(g_hat[0]);
    for (int i = 1; i < static_cast<int>(g_hat.size()); ++i) {
        const double m = std::norm(g_hat[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best + 1;
}

int select_port_amplitudes(const std::vector<double>& amplitudes) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(amplitudes.size()); ++i) {
        if (amplitudes[i] > amplitudes[best]) best = i;
    }
    return best + 1;
}

}  // namespace fafd
