#pragma once

#include <complex>
#include <vector>

#include "fafd/params.hpp"
#include "fafd/rng.hpp"

namespace fafd {

// Autocorrelation of each port to the reference port: mu[0] = 0 by the
// reference-port convention, mu[i] = J0(2 pi i kappa / (N-1)) for i >= 1
// (0-based storage of the 1-based port index).
struct CorrelationProfile {
    std::vector<double> mu;
    int n_ports() const { return static_cast<int>(mu.size()); }
};

CorrelationProfile correlation_profile(const FluidAntennaGeometry& fa);

using cplx = std::complex<double>;

// One coherence block of channel state for all ports of the typical link.
struct ChannelDraw {
    std::vector<cplx> g;      // true coefficients
    std::vector<cplx> g_hat;  // estimates
    std::vector<cplx> e;      // estimation errors, g = g_hat + e
    double li_gain_ue = 0.0;  // |h_LI^u|^2
    double li_gain_bs = 0.0;  // |h_LI^b|^2
};

// Rice parameters of one port's estimated amplitude conditioned on the
// reference port: |g_hat_i| | tau_1 ~ Rice(nu_scale * tau_1, diffuse_var).
struct RiceParams {
    double nu_scale = 0.0;    // multiplies the reference amplitude
    double diffuse_var = 0.0; // conditional complex variance
};

// Per-port second-order description of the estimated channels under a given
// convention; ref_var is var(|g_hat_1|^2)'s exponential scale.
struct EstimatedChannelLaw {
    double ref_var = 0.0;
    std::vector<RiceParams> ports;  // entries for ports 2..N (0-based from port index 1)
};

// sigma_e2[i] are the per-port LMMSE error variances (0-based).
EstimatedChannelLaw estimated_channel_law(const CorrelationProfile& profile, double sigma2,
                                          const std::vector<double>& sigma_e2,
                                          EstimationConvention convention);

// Correlated true channels: port 1 is the shared reference pair, ports i >= 2
// mix an independent component with the reference through mu_i.
std::vector<cplx> draw_true_channels(const CorrelationProfile& profile, double sigma2, Rng& rng);

// Estimated channels plus errors. In the consistent convention g_hat carries
// the correlated structure scaled to variance sigma^2 - sigma_e^2 and
// g = g_hat + e; in the verbatim convention g_hat_i = mu_i g_hat_1 + w_i with
// var(w_i) = sigma^2 (1 - mu_i^2) + sigma_e^2.
ChannelDraw draw_channel_block(const CorrelationProfile& profile, double sigma2,
                               const std::vector<double>& sigma_e2,
                               EstimationConvention convention, Rng& rng);

// Residual loop-interference power gain, Gamma(mu, sigma2_li / mu).
double draw_residual_li(double mu_nakagami, double sigma2_li, Rng& rng);

// argmax of the estimated amplitudes, ties to the lowest index (1-based).
int select_port(const std::vector<cplx>& g_hat);
int select_port_amplitudes(const std::vector<double>& amplitudes);

}  // namespace fafd
