#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fafd/params.hpp"
#include "fafd/quadrature.hpp"

namespace fafd {

// The four interferer classes and their exclusion densities:
//   dl_bs : BSs seen by the typical UE,  f1 = lambda_b 1{r > r_i(rho)}
//   ul_ue : UEs seen by the tagged BS,   f2 = lambda_b 1{r > R} with R the
//           interferer's own serving distance (marginally the thinned form)
//   ul_bs : BSs seen by the tagged BS,   f3 = lambda_b (1 - e^{-pi l r^2}) 1{r > b_b}
//   dl_ue : UEs seen by the typical UE,  f4 = lambda_b (1 - e^{-pi l r^2}) 1{r > b_u}
enum class InterferenceClass { dl_bs, ul_ue, ul_bs, dl_ue };

struct ExclusionDensity {
    InterferenceClass kind;
    double cutoff = 0.0;  // meters; for dl_bs this is r_i(rho)
};

// Spatial density (per area) of the class at radius r. For ul_ue the value is
// the marginal (R integrated out); cutoff carries r_i(rho) for dl_bs and the
// b floors otherwise.
double exclusion_density(const ExclusionDensity& d, double r, const NetworkParams& params);

// ---- closed-form conditional means (linear mW) ----
// Campbell/PGFL evaluations over the class densities with fractional power
// control folded in analytically.

double mean_dl_bs(const NetworkParams& params, double rho, int port, const FluidAntennaGeometry& fa);
double mean_dl_ue(const NetworkParams& params, double rho);
double mean_ul_bs(const NetworkParams& params, double rho);
double mean_ul_ue(const NetworkParams& params, double rho);

// mean and second moment of the power-controlled UE transmit power
double mean_ue_power(const NetworkParams& params);
double mean_ue_power_sq(const NetworkParams& params);

// ---- closed-form variances (second Campbell cumulant) ----
// ul_ue diverges for epsilon <= 1 - 2/a and dl_ue/ul_bs are dominated by the
// b floors; callers choose the route below.

double var_dl_bs(const NetworkParams& params, double rho, int port, const FluidAntennaGeometry& fa);
double var_dl_ue(const NetworkParams& params);
double var_ul_bs(const NetworkParams& params);
double var_ul_ue(const NetworkParams& params);  // throws when divergent

struct GammaParams {
    double shape = 0.0;
    double scale = 0.0;
    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
};

GammaParams gamma_match(double mean, double variance);

// Residual loop interference power before the cancellation-error weighting:
// DL: P_u(r_i(rho)) * gain, UL: P * gain.
double residual_li_power(Direction dir, const NetworkParams& params, double rho, int port,
                         const FluidAntennaGeometry& fa, double li_gain);

// ---- Laplace transform and variance routes ----

// log of the conditional Laplace transform of the class interference.
// Reports failure via converged=false.
struct LogLaplace {
    double value = 0.0;
    bool converged = true;
};
LogLaplace log_laplace_transform(const ExclusionDensity& d, const NetworkParams& params, double s);

enum class VarianceRoute {
    laplace_fdensity,    // central differences of log L_I (cached)
    campbell_closed,     // closed second cumulant where finite
    censored_empirical,  // seeded per-block samples, top tail censored
};

// Versioned, human-readable cache of variance evaluations.
class VarianceCache {
  public:
    std::optional<double> lookup(const std::string& key) const;
    void store(const std::string& key, double value);
    bool load(const std::string& path);   // false when absent/unreadable
    bool save(const std::string& path) const;
    std::size_t size() const { return entries_.size(); }

  private:
    std::unordered_map<std::string, double> entries_;
};

// Variance of one class by the selected route. The censored route draws
// deterministic per-block realizations of the class process (seed fixed by
// the parameter hash) and censors the top 0.1% before taking moments.
double class_variance(InterferenceClass cls, const NetworkParams& params, double rho, int port,
                      const FluidAntennaGeometry& fa, VarianceRoute route, VarianceCache* cache);

// Conditional moments and matched gamma laws for both directions at one rho.
struct InterferenceStats {
    double mean_dl_bs = 0.0;
    double mean_dl_ue = 0.0;
    double mean_ul_bs = 0.0;
    double mean_ul_ue = 0.0;
    double var_total_dl = 0.0;
    double var_total_ul = 0.0;
    GammaParams gamma_dl;
    GammaParams gamma_ul;
    double mean_dl() const { return mean_dl_bs + mean_dl_ue; }
    double mean_ul() const { return mean_ul_bs + mean_ul_ue; }
};

InterferenceStats compute_interference_stats(const NetworkParams& params, double rho, int port,
                                             const FluidAntennaGeometry& fa, VarianceRoute route,
                                             VarianceCache* cache);

// ---- Monte Carlo shot-noise oracles ----

struct MomentEstimate {
    double mean = 0.0;
    double mean_stderr = 0.0;
    double variance = 0.0;
    double variance_stderr = 0.0;
    long samples = 0;
};

// Mean of the class interference by realizing the point process; the region
// below r_split uses an importance-sampled Campbell estimator so the
// near-field tail does not dominate the sample noise.
MomentEstimate mc_mean_oracle(InterferenceClass cls, const NetworkParams& params, double rho,
                              int port, const FluidAntennaGeometry& fa, long n_fields,
                              std::uint64_t seed);

// Per-block interference samples of one class (plain realizations, spikes
// included). Used by the variance oracle and the censored route.
std::vector<double> sample_class_interference(InterferenceClass cls, const NetworkParams& params,
                                              double rho, int port, const FluidAntennaGeometry& fa,
                                              long n_fields, std::uint64_t seed);

struct VarianceOracleResult {
    MomentEstimate mc;
    double laplace_estimate = 0.0;
    bool laplace_converged = true;
};

// Spec'd dual-route variance oracle: MC shot noise vs central differences of
// the numerically evaluated log-Laplace transform.
VarianceOracleResult interference_variance_oracle(InterferenceClass cls,
                                                  const NetworkParams& params, double rho, int port,
                                                  const FluidAntennaGeometry& fa, long n_samples,
                                                  std::uint64_t seed);

std::string variance_cache_key(InterferenceClass cls, const NetworkParams& params, double rho,
                               int port, const FluidAntennaGeometry& fa, VarianceRoute route);

}  // namespace fafd
