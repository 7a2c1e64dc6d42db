#pragma once

#include <vector>

#include "fafd/channel.hpp"
#include "fafd/interference.hpp"
#include "fafd/params.hpp"
#include "fafd/quadrature.hpp"

namespace fafd {

enum class Engine { analytic_exact, analytic_mean, monte_carlo };

struct OutageResult {
    double value = 0.0;
    Engine engine = Engine::analytic_exact;
    double quadrature_error_estimate = 0.0;
};

struct RateResult {
    double value = 0.0;  // bits/s
    double error_estimate = 0.0;
};

struct AnalysisOptions {
    EstimationConvention convention = EstimationConvention::lmmse_consistent;
    CsiMode csi = CsiMode::estimated;
    VarianceRoute variance_route = VarianceRoute::censored_empirical;
    QuadratureSpec quad;            // inner (t and amplitude) tolerances
    double outer_rel_tol = 1e-5;    // rho-integral tolerance
    int gamma_nodes = 24;           // gamma-mixture rule size (exact engine)
    int ref_nodes = 24;             // reference-port mixture rule size
    int li_nodes = 8;               // residual-LI mixture rule size
    VarianceCache* cache = nullptr; // shared variance cache, may be null
};

// Per-port LMMSE error variances for one rho (zeros under perfect CSI).
std::vector<double> sigma_e_vector(const NetworkParams& params, double rho,
                                   const FluidAntennaGeometry& fa, const PilotBudget& budget,
                                   CsiMode csi);

// Joint cdf of the estimated amplitudes at thresholds taus, evaluated from
// an explicit per-port law (works for both estimation conventions).
double joint_amplitude_cdf(const EstimatedChannelLaw& law, const std::vector<double>& taus,
                           const QuadratureSpec& spec);

// Joint cdf in the additive per-port-variance form: reference variance
// sigma_tilde2[0], port factors Rice(mu_j tau_1, sigma_tilde2[j]).
double joint_estimated_cdf(const std::vector<double>& taus,
                           const std::vector<double>& sigma_tilde2,
                           const CorrelationProfile& profile, const QuadratureSpec& spec);

// Conditional outage at one serving distance.
OutageResult conditional_outage(Direction dir, double theta, double rho,
                                const NetworkParams& params, const FluidAntennaGeometry& fa,
                                const PilotBudget& budget, const AnalysisOptions& opt,
                                Engine engine);

// Unconditional outage: conditional result integrated against the nearest-BS
// contact distribution.
OutageResult outage(Direction dir, double theta, const NetworkParams& params,
                    const FluidAntennaGeometry& fa, const PilotBudget& budget,
                    const AnalysisOptions& opt, Engine engine);

// Average sum rate (DL + UL) in bits/s from the coverage integral.
RateResult average_sum_rate(const NetworkParams& params, const FluidAntennaGeometry& fa,
                            const PilotBudget& budget, const AnalysisOptions& opt, Engine engine);

}  // namespace fafd
