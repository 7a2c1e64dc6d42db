#include "fafd/params.hpp"

#include <cmath>

namespace fafd {

std::vector<std::string> NetworkParams::validate() const {
    std::vector<std::string> v;
    auto positive = [&](double x, const char* name) {
        if (!(x > 0.0)) v.push_back(std::string(name) + " must be > 0");
    };
    positive(lambda_b, "lambda_b");
    positive(lambda_u, "lambda_u");
    if (!(a > 2.0)) v.push_back("path-loss exponent a must be > 2");
    positive(p_bs, "p_bs");
    positive(p_max, "p_max");
    positive(omega, "omega");
    if (epsilon < 0.0 || epsilon > 1.0) v.push_back("epsilon must lie in [0,1]");
    positive(noise, "noise");
    positive(sigma2, "sigma2");
    positive(b_bs, "b_bs");
    positive(b_ue, "b_ue");
    if (v_li < 0.0) v.push_back("v_li must be >= 0");
    if (!(mu_nakagami >= 0.5)) v.push_back("mu_nakagami must be >= 0.5");
    positive(theta, "theta");
    positive(bandwidth_hz, "bandwidth_hz");
    positive(coherence_time_s, "coherence_time_s");
    if (!(pilot_total >= 0.0)) v.push_back("pilot_total (Le) must be >= 0");
    if (!(pilot_li >= 2.0)) v.push_back("pilot_li (L_LI) must be >= 2 (one pilot per LI link)");
    if (pilot_li > pilot_total) v.push_back("pilot_li cannot exceed pilot_total");
    if (!(li_split > 0.0 && li_split <= 1.0)) v.push_back("li_split (w) must lie in (0,1]");
    if (block_uses() < pilot_total) v.push_back("coherence block shorter than pilot budget (Lc < Le)");
    return v;
}

std::vector<std::string> FluidAntennaGeometry::validate() const {
    std::vector<std::string> v;
    if (n_ports < 1) v.push_back("n_ports must be >= 1");
    if (!(kappa > 0.0)) v.push_back("kappa must be > 0");
    if (!(wavelength > 0.0)) v.push_back("wavelength must be > 0");
    if (!(q_charge > 0.0)) v.push_back("q_charge must be > 0");
    if (!(viscosity > 0.0)) v.push_back("viscosity must be > 0");
    if (!(dl_ratio > 0.0)) v.push_back("dl_ratio must be > 0");
    if (!(delta_phi > 0.0)) v.push_back("delta_phi must be > 0");
    return v;
}

double switching_channel_uses(const FluidAntennaGeometry& fa, double bandwidth_hz) {
    if (fa.n_ports < 2) return 0.0;
    return (fa.n_ports - 1) * fa.hop_delay() * bandwidth_hz;
}

PilotBudget derive_budget(const NetworkParams& params, const FluidAntennaGeometry& fa) {
    PilotBudget b;
    b.block_uses = params.block_uses();
    b.pilot_total = params.pilot_total;
    b.pilot_li = params.pilot_li;
    b.pilot_direct = params.pilot_total - params.pilot_li;
    b.data_uses = b.block_uses - b.pilot_total;
    b.switching_uses = switching_channel_uses(fa, params.bandwidth_hz);

    const double ls_int = std::ceil(b.switching_uses);
    b.per_port_pilots =
        static_cast<long>(std::floor((b.pilot_direct - ls_int) / fa.n_ports));
    b.li_pilots_bs = std::lround(params.li_split * params.pilot_li);
    b.li_pilots_ue = static_cast<long>(params.pilot_li) - b.li_pilots_bs;

    b.feasible = true;
    if (b.per_port_pilots < 1) {
        b.feasible = false;
        b.infeasible_reason = "per-port pilot count below 1 (Ld - ceil(l_s) < N)";
    } else if (b.li_pilots_bs < 1 || b.li_pilots_ue < 1) {
        b.feasible = false;
        b.infeasible_reason = "LI pilot split leaves a link without pilots";
    } else if (b.data_uses < 0.0) {
        b.feasible = false;
        b.infeasible_reason = "pilot budget exceeds the coherence block";
    }
    return b;
}

NetworkParams default_network_params() { return NetworkParams{}; }

FluidAntennaGeometry default_fa_geometry() { return FluidAntennaGeometry{}; }

}  // namespace fafd
