#pragma once

#include <cstdint>
#include <vector>

#include "fafd/params.hpp"
#include "fafd/rng.hpp"

namespace fafd {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(const Point2& p, const Point2& q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// One realization of the BS point process inside a disc around the origin.
struct BsField {
    std::vector<Point2> positions;
    int serving_index = -1;     // nearest BS to the origin; -1 if empty
    double serving_distance = 0.0;

    bool has_serving_bs() const { return serving_index >= 0; }
};

// Homogeneous PPP of density lambda_b on a disc of radius r_sim.
// Deterministic given the rng state.
BsField sample_bs_field(const NetworkParams& params, double r_sim, Rng& rng);

// Nearest-BS contact distance pdf, 2 pi lambda rho exp(-pi lambda rho^2).
double contact_distance_pdf(double rho, double lambda_b);

// Distance from the i-th port (1-based) to a transmitter at planar distance
// rho from the antenna reference point.
double port_distance(double rho, int i, const FluidAntennaGeometry& fa);

// Fractional power control: min(omega * R^(a eps), P_max).
double ue_tx_power(double r, const NetworkParams& params);

// Simulation window radius for a given density: scales so the expected BS
// count and the relative far-field truncation stay at their defaults.
double default_sim_radius(double lambda_b);

// Fraction of the mean conditional interference contributed by transmitters
// beyond r_sim, relative to the exclusion radius r0 (Campbell tail ratio).
double window_truncation_fraction(double r0, double r_sim, double a);

}  // namespace fafd
