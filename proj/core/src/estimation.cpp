#include "fafd/estimation.hpp"

#include <cmath>

#include "fafd/geometry.hpp"
#include "fafd/interference.hpp"
#include "fafd/special_functions.hpp"

namespace fafd {

double direct_ce_variance(const NetworkParams& p, double rho, int port,
                          const FluidAntennaGeometry& fa, const PilotBudget& budget) {
    if (budget.per_port_pilots < 1)
        throw domain_error("direct_ce_variance: pilot budget exhausted (Lambda < 1)");
    const double ri = port_distance(rho, port, fa);
    const double pl = std::pow(ri, -p.a);
    const double denom = p.noise + mean_dl_bs(p, rho, port, fa);
    const double snr = budget.per_port_pilots * p.p_bs * pl * p.sigma2 / denom;
    return p.sigma2 / (1.0 + snr);
}

double li_ce_variance_ue(const NetworkParams& p, double rho, int port,
                         const FluidAntennaGeometry& fa, const PilotBudget& budget) {
    if (budget.li_pilots_ue < 1)
        throw domain_error("li_ce_variance_ue: no LI pilots at the UE");
    const double pu = ue_tx_power(port_distance(rho, port, fa), p);
    const double denom = p.noise + mean_dl_ue(p, rho);
    return 1.0 / (1.0 + budget.li_pilots_ue * pu * p.v_li / denom);
}

double li_ce_variance_bs(const NetworkParams& p, double rho, const PilotBudget& budget) {
    if (budget.li_pilots_bs < 1)
        throw domain_error("li_ce_variance_bs: no LI pilots at the BS");
    const double denom = p.noise + mean_ul_bs(p, rho);
    return 1.0 / (1.0 + budget.li_pilots_bs * p.p_bs * p.v_li / denom);
}

double effective_rate_fraction(const PilotBudget& budget) {
    if (budget.block_uses <= 0.0) return 0.0;
    const double f = 1.0 - budget.pilot_total / budget.block_uses;
    return f < 0.0 ? 0.0 : f;
}

}  // namespace fafd
