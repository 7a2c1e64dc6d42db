#pragma once

#include "fafd/params.hpp"

namespace fafd {

// LMMSE error variance of the direct link at one port, conditioned on rho.
// Decreasing in the per-port pilot count and in the pilot SNR; equals
// sigma^2 when either vanishes. Throws when the budget has no usable pilots.
double direct_ce_variance(const NetworkParams& params, double rho, int port,
                          const FluidAntennaGeometry& fa, const PilotBudget& budget);

// LMMSE error variance of the loop-interference link at the UE / BS side.
double li_ce_variance_ue(const NetworkParams& params, double rho, int port,
                         const FluidAntennaGeometry& fa, const PilotBudget& budget);
double li_ce_variance_bs(const NetworkParams& params, double rho, const PilotBudget& budget);

// Fraction of the coherence block carrying data, 1 - Le/Lc.
double effective_rate_fraction(const PilotBudget& budget);

}  // namespace fafd
