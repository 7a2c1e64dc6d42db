#include "fafd/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fafd/special_functions.hpp"

namespace fafd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

BsField sample_bs_field(const NetworkParams& params, double r_sim, Rng& rng) {
    if (!(r_sim > 0.0)) throw domain_error("sample_bs_field: r_sim must be > 0");
    BsField field;
    const double mean_count = params.lambda_b * kPi * r_sim * r_sim;
    const std::uint64_t n = rng.poisson(mean_count);
    field.positions.reserve(n);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k < n; ++k) {
        const double r = r_sim * std::sqrt(rng.uniform());
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        Point2 p{r * std::cos(phi), r * std::sin(phi)};
        const double d2 = p.x * p.x + p.y * p.y;
        if (d2 < best) {
            best = d2;
            field.serving_index = static_cast<int>(field.positions.size());
        }
        field.positions.push_back(p);
    }
    field.serving_distance = field.positions.empty() ? 0.0 : std::sqrt(best);
    return field;
}

double contact_distance_pdf(double rho, double lambda_b) {
    if (rho < 0.0) throw domain_error("contact_distance_pdf: rho must be >= 0");
    return 2.0 * kPi * lambda_b * rho * std::exp(-kPi * lambda_b * rho * rho);
}

double port_distance(double rho, int i, const FluidAntennaGeometry& fa) {
    if (i < 1 || i > fa.n_ports) throw domain_error("port_distance: port index out of range");
    if (rho < 0.0) throw domain_error("port_distance: rho must be >= 0");
    if (fa.n_ports == 1) return rho;
    const double frac = static_cast<double>(fa.n_ports - 2 * i + 1) / (fa.n_ports - 1);
    const double off = 0.5 * fa.aperture() * frac;
    return std::sqrt(rho * rho + off * off);
}

double ue_tx_power(double r, const NetworkParams& params) {
    if (!(r > 0.0)) throw domain_error("ue_tx_power: distance must be > 0");
    if (params.epsilon == 0.0) return std::min(params.omega, params.p_max);
    const double inv = params.omega * std::pow(r, params.a * params.epsilon);
    return std::min(inv, params.p_max);
}

double default_sim_radius(double lambda_b) {
    // 3000 m at the Table-2 density; constant expected count elsewhere
    return 3000.0 * std::sqrt(5e-5 / lambda_b);
}

double window_truncation_fraction(double r0, double r_sim, double a) {
    if (!(r_sim > r0)) return 1.0;
    return std::pow(r0 / r_sim, a - 2.0);
}

}  // namespace fafd
