#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fafd {

// How estimated-channel statistics are formed. `lmmse_consistent` keeps the
// orthogonal decomposition var(g_hat) = sigma^2 - sigma_e^2 in both engines;
// `lemma5_verbatim` uses the additive per-port variance
// sigma^2 (1 - mu_i^2) + sigma_e^2 in the analytic joint law. The two differ
// whenever estimation error is material; the verbatim form is kept as a
// comparison mode.
enum class EstimationConvention { lmmse_consistent, lemma5_verbatim };

enum class CsiMode { estimated, perfect };

enum class Direction { dl, ul };

// Immutable network-level parameter set. Powers are linear on the mW scale
// (10^(dBm/10)); densities are per m^2; distances in meters.
struct NetworkParams {
    double lambda_b = 5e-5;   // BS density
    double lambda_u = 5e-4;   // UE density (bookkeeping only; no formula uses it)
    double a = 4.0;           // path-loss exponent, > 2
    double p_bs = 1000.0;     // BS transmit power (30 dBm)
    double p_max = 1000.0;    // UE power constraint (30 dBm)
    double omega = 1e-4;      // receive-sensitivity target (-40 dB)
    double epsilon = 0.8;     // fractional power-control exponent
    double noise = 1e-5;      // noise variance N0
    double sigma2 = 1.0;      // channel variance
    double b_bs = 1.0;        // BS-BS interference-link length floor
    double b_ue = 1.0;        // UE-UE interference-link length floor
    double v_li = 1e-3;       // loop-interference path gain
    double mu_nakagami = 1.0; // Nakagami shape of the residual LI channel
    double theta = 1e-2;      // SINR threshold (-20 dB)

    double bandwidth_hz = 1e8;     // coherence bandwidth Bc
    double coherence_time_s = 0.05;  // Tc
    // Channel uses per coherence block. When > 0 this overrides Bc*Tc (the
    // pilot trade-off is invisible at Bc*Tc = 5e6).
    double coherence_uses = 1e4;
    double pilot_total = 200.0;  // Le
    double pilot_li = 2.0;       // L_LI (direct-link budget Ld = Le - L_LI)
    double li_split = 0.5;       // w: fraction of L_LI spent at the BS

    double block_uses() const {
        return coherence_uses > 0.0 ? coherence_uses : bandwidth_hz * coherence_time_s;
    }

    // returns human-readable violations; empty means valid
    std::vector<std::string> validate() const;
};

// Linear fluid antenna: N ports evenly spaced over an aperture of
// kappa * wavelength, with the electrocapillary motion model that sets the
// port-switching delay.
struct FluidAntennaGeometry {
    int n_ports = 15;
    double kappa = 0.2;
    double wavelength = 6e-4;  // meters (0.06 cm)
    double q_charge = 0.07;
    double viscosity = 0.002;
    double dl_ratio = 5.0;  // thickness/length ratio D/L
    double delta_phi = 10.0;  // applied voltage difference

    double aperture() const { return kappa * wavelength; }

    // Hagen-Poiseuille average velocity of the fluid element.
    double velocity() const { return q_charge / (6.0 * viscosity) * dl_ratio * delta_phi; }

    // Delay of one hop between adjacent ports; 0 for a single port.
    double hop_delay() const {
        return n_ports >= 2 ? aperture() / (velocity() * (n_ports - 1)) : 0.0;
    }

    // Displacement of port i (1-based) from the reference port.
    double displacement(int i) const {
        if (n_ports == 1) return 0.0;
        return (static_cast<double>(i - 1) / (n_ports - 1)) * aperture();
    }

    std::vector<std::string> validate() const;
};

// Channel uses consumed by moving the fluid element across all N-1 hops.
// Real-valued; integer rounding happens only in the pilot budget.
double switching_channel_uses(const FluidAntennaGeometry& fa, double bandwidth_hz);

// Pilot bookkeeping for one coherence block. `per_port_pilots` is
// floor((Ld - ceil(l_s)) / N); a block is usable only when every pilot count
// is at least one.
struct PilotBudget {
    double block_uses = 0.0;      // Lc
    double pilot_total = 0.0;     // Le
    double pilot_direct = 0.0;    // Ld
    double pilot_li = 0.0;        // L_LI
    double data_uses = 0.0;       // Lt = Lc - Le
    double switching_uses = 0.0;  // l_s, real-valued
    long per_port_pilots = 0;     // Lambda
    long li_pilots_bs = 0;        // Lambda_b
    long li_pilots_ue = 0;        // Lambda_u
    bool feasible = false;
    std::string infeasible_reason;
};

PilotBudget derive_budget(const NetworkParams& params, const FluidAntennaGeometry& fa);

// Table-2 parameter set plus the artifact defaults for quantities the table
// does not pin (pilot split, exclusion floors, Nakagami shape, ...).
NetworkParams default_network_params();
FluidAntennaGeometry default_fa_geometry();

}  // namespace fafd
