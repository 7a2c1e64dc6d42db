#include "fafd/interference.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fafd/geometry.hpp"
#include "fafd/rng.hpp"
#include "fafd/special_functions.hpp"

namespace fafd {

namespace {

constexpr double kPi = 3.14159265358979323846;

double pl_clamp_threshold(const NetworkParams& p) {
    // x* = pi lambda_b (P_m / omega)^(2 / (a eps))
    return kPi * p.lambda_b * std::pow(p.p_max / p.omega, 2.0 / (p.a * p.epsilon));
}

// mean of the class interference per unit transmit power over the thinned
// density lambda_b (1 - e^{-pi lambda r^2}) 1{r > b}
double geom_excl_mean(const NetworkParams& p, double b) {
    const double x = kPi * p.lambda_b * b * b;
    const double bracket = 2.0 - (p.a - 2.0) * expint_en(0.5 * p.a, x);
    return kPi * p.sigma2 * p.lambda_b * std::pow(b, 2.0 - p.a) / (p.a - 2.0) * bracket;
}

// second cumulant per unit squared transmit power over the same density
double geom_excl_var(const NetworkParams& p, double b) {
    const double x = kPi * p.lambda_b * b * b;
    const double bracket = 1.0 / (p.a - 1.0) - expint_en(p.a, x);
    return 2.0 * kPi * p.lambda_b * p.sigma2 * p.sigma2 * std::pow(b, 2.0 - 2.0 * p.a) * bracket;
}

}  // namespace

double exclusion_density(const ExclusionDensity& d, double r, const NetworkParams& params) {
    if (r < 0.0) throw domain_error("exclusion_density: r must be >= 0");
    const double thin = 1.0 - std::exp(-kPi * params.lambda_b * r * r);
    switch (d.kind) {
        case InterferenceClass::dl_bs:
            return r > d.cutoff ? params.lambda_b : 0.0;
        case InterferenceClass::ul_ue:
            return params.lambda_b * thin;  // marginal of the r > R exclusion
        case InterferenceClass::ul_bs:
        case InterferenceClass::dl_ue:
            return r > d.cutoff ? params.lambda_b * thin : 0.0;
    }
    return 0.0;
}

double mean_dl_bs(const NetworkParams& p, double rho, int port, const FluidAntennaGeometry& fa) {
    if (!(p.a > 2.0)) throw domain_error("mean_dl_bs: requires a > 2");
    const double ri = port_distance(rho, port, fa);
    return 2.0 * kPi * p.sigma2 * p.p_bs * p.lambda_b * std::pow(ri, 2.0 - p.a) / (p.a - 2.0);
}

double mean_ue_power(const NetworkParams& p) {
    if (p.epsilon == 0.0) return std::min(p.omega, p.p_max);
    const double xs = pl_clamp_threshold(p);
    const double s = 1.0 + 0.5 * p.a * p.epsilon;
    return p.omega * std::pow(kPi * p.lambda_b, -0.5 * p.a * p.epsilon) *
               lower_incomplete_gamma(s, xs) +
           p.p_max * std::exp(-xs);
}

double mean_ue_power_sq(const NetworkParams& p) {
    if (p.epsilon == 0.0) {
        const double v = std::min(p.omega, p.p_max);
        return v * v;
    }
    const double xs = pl_clamp_threshold(p);
    const double s = 1.0 + p.a * p.epsilon;
    return p.omega * p.omega * std::pow(kPi * p.lambda_b, -p.a * p.epsilon) *
               lower_incomplete_gamma(s, xs) +
           p.p_max * p.p_max * std::exp(-xs);
}

double mean_dl_ue(const NetworkParams& p, double /*rho*/) {
    if (!(p.a > 2.0)) throw domain_error("mean_dl_ue: requires a > 2");
    const double v = mean_ue_power(p) * geom_excl_mean(p, p.b_ue);
    // the closed form is nonnegative for a > 2; clamp-and-warn guard kept for
    // pathological parameter corners
    return v >= 0.0 ? v : 0.0;
}

double mean_ul_bs(const NetworkParams& p, double /*rho*/) {
    if (!(p.a > 2.0)) throw domain_error("mean_ul_bs: requires a > 2");
    return p.p_bs * geom_excl_mean(p, p.b_bs);
}

double mean_ul_ue(const NetworkParams& p, double /*rho*/) {
    if (!(p.a > 2.0)) throw domain_error("mean_ul_ue: requires a > 2");
    const double pref = 2.0 * p.sigma2 * std::pow(kPi * p.lambda_b, 0.5 * p.a) / (p.a - 2.0);
    if (p.epsilon == 0.0) {
        if (p.a >= 4.0)
            throw domain_error("mean_ul_ue: diverges at epsilon = 0 for a >= 4");
        return pref * std::min(p.omega, p.p_max) * std::tgamma(2.0 - 0.5 * p.a);
    }
    const double s_pc = 2.0 - 0.5 * p.a * (1.0 - p.epsilon);
    if (!(s_pc > 0.0))
        throw domain_error("mean_ul_ue: diverges for epsilon <= 1 - 4/a");
    const double xs = pl_clamp_threshold(p);
    const double clamp_part = p.p_max * upper_incomplete_gamma(2.0 - 0.5 * p.a, xs);
    const double pc_part = p.omega * std::pow(kPi * p.lambda_b, -0.5 * p.a * p.epsilon) *
                           lower_incomplete_gamma(s_pc, xs);
    return pref * (clamp_part + pc_part);
}

double var_dl_bs(const NetworkParams& p, double rho, int port, const FluidAntennaGeometry& fa) {
    const double ri = port_distance(rho, port, fa);
    return 2.0 * kPi * p.lambda_b * p.p_bs * p.p_bs * p.sigma2 * p.sigma2 *
           std::pow(ri, 2.0 - 2.0 * p.a) / (p.a - 1.0);
}

double var_dl_ue(const NetworkParams& p) { return mean_ue_power_sq(p) * geom_excl_var(p, p.b_ue); }

double var_ul_bs(const NetworkParams& p) { return p.p_bs * p.p_bs * geom_excl_var(p, p.b_bs); }

double var_ul_ue(const NetworkParams& p) {
    if (p.epsilon == 0.0)
        throw domain_error("var_ul_ue: diverges at epsilon = 0 for a > 2");
    const double s_pc = 2.0 - p.a + p.a * p.epsilon;
    if (!(s_pc > 0.0))
        throw domain_error("var_ul_ue: diverges for epsilon <= 1 - 2/a");
    const double xs = pl_clamp_threshold(p);
    const double pl = kPi * p.lambda_b;
    const double pc_part = p.omega * p.omega * std::pow(pl, p.a - 1.0 - p.a * p.epsilon) *
                           lower_incomplete_gamma(s_pc, xs);
    const double clamp_part =
        p.p_max * p.p_max * std::pow(pl, p.a - 1.0) * upper_incomplete_gamma(2.0 - p.a, xs);
    return 2.0 * kPi * p.lambda_b * p.sigma2 * p.sigma2 / (p.a - 1.0) * (pc_part + clamp_part);
}

GammaParams gamma_match(double mean, double variance) {
    if (!(mean > 0.0) || !(variance > 0.0))
        throw domain_error("gamma_match: moments must be positive");
    return {mean * mean / variance, variance / mean};
}

double residual_li_power(Direction dir, const NetworkParams& p, double rho, int port,
                         const FluidAntennaGeometry& fa, double li_gain) {
    if (li_gain < 0.0) throw domain_error("residual_li_power: gain must be >= 0");
    if (dir == Direction::ul) return p.p_bs * li_gain;
    return ue_tx_power(port_distance(rho, port, fa), p) * li_gain;
}

// ---------------------------------------------------------------------------
// Laplace transform of the conditional interference
// ---------------------------------------------------------------------------

namespace {

// integral over [r_lo, inf) via the r = r_lo / t transform
double radial_tail_integral(const std::function<double(double)>& g, double r_lo,
                            const QuadratureSpec& spec, bool* ok) {
    const auto h = [&](double t) {
        const double r = r_lo / t;
        return g(r) * r_lo / (t * t);
    };
    QuadResult res = integrate_adaptive_full(h, 1e-8, 1.0, spec);
    if (ok) *ok = res.converged;
    return res.value;
}

struct UePowerNodes {
    std::vector<double> radius;
    std::vector<double> power;
    std::vector<double> weight;
};

// Gauss-Laguerre discretization of the interferer's own link distance
// R = sqrt(x / (pi lambda)), x ~ Exp(1).
UePowerNodes ue_power_nodes(const NetworkParams& p, int n) {
    GaussRule rule = gauss_laguerre(n, 0.0);
    UePowerNodes out;
    out.radius.resize(n);
    out.power.resize(n);
    out.weight = rule.weights;
    for (int k = 0; k < n; ++k) {
        const double r = std::sqrt(rule.nodes[k] / (kPi * p.lambda_b));
        out.radius[k] = r;
        out.power[k] = ue_tx_power(std::max(r, 1e-9), p);
    }
    return out;
}

}  // namespace

LogLaplace log_laplace_transform(const ExclusionDensity& d, const NetworkParams& p, double s) {
    LogLaplace out;
    if (s == 0.0) return out;
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    spec.abs_tol = 1e-16;
    bool ok = true;

    switch (d.kind) {
        case InterferenceClass::dl_bs:
        case InterferenceClass::ul_bs: {
            const double c = s * p.p_bs * p.sigma2;
            const auto g = [&](double r) {
                const double frac = 1.0 - 1.0 / (1.0 + c * std::pow(r, -p.a));
                return frac * exclusion_density(d, r * 1.0000000001, p) * 2.0 * kPi * r;
            };
            out.value = -radial_tail_integral(g, std::max(d.cutoff, 1e-9), spec, &ok);
            break;
        }
        case InterferenceClass::dl_ue: {
            const UePowerNodes nodes = ue_power_nodes(p, 32);
            const auto g = [&](double r) {
                double inner = 0.0;
                for (std::size_t k = 0; k < nodes.power.size(); ++k) {
                    inner += nodes.weight[k] /
                             (1.0 + s * nodes.power[k] * p.sigma2 * std::pow(r, -p.a));
                }
                return (1.0 - inner) * exclusion_density(d, r * 1.0000000001, p) * 2.0 * kPi * r;
            };
            out.value = -radial_tail_integral(g, std::max(d.cutoff, 1e-9), spec, &ok);
            break;
        }
        case InterferenceClass::ul_ue: {
            // exclusion r > R couples to the power mark
            const UePowerNodes nodes = ue_power_nodes(p, 32);
            double total = 0.0;
            for (std::size_t k = 0; k < nodes.power.size() && ok; ++k) {
                const double c = s * nodes.power[k] * p.sigma2;
                const auto g = [&](double r) {
                    const double frac = 1.0 - 1.0 / (1.0 + c * std::pow(r, -p.a));
                    return frac * p.lambda_b * 2.0 * kPi * r;
                };
                total += nodes.weight[k] *
                         radial_tail_integral(g, std::max(nodes.radius[k], 1e-6), spec, &ok);
            }
            out.value = -total;
            break;
        }
    }
    out.converged = ok && std::isfinite(out.value);
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo shot-noise oracles
// ---------------------------------------------------------------------------

namespace {

struct ClassGeometry {
    double r_lo = 0.0;     // hard exclusion
    bool thinned = false;  // (1 - e^{-pi l r^2}) retention
    bool ue_power = false; // per-point power P_u(R) with R ~ contact
    bool couple_R = false; // retention requires r > R (ul_ue)
};

ClassGeometry class_geometry(InterferenceClass cls, const NetworkParams& p, double rho, int port,
                             const FluidAntennaGeometry& fa) {
    switch (cls) {
        case InterferenceClass::dl_bs:
            return {port_distance(rho, port, fa), false, false, false};
        case InterferenceClass::ul_bs:
            return {p.b_bs, true, false, false};
        case InterferenceClass::dl_ue:
            return {p.b_ue, true, true, false};
        case InterferenceClass::ul_ue:
            return {0.0, false, true, true};
    }
    return {};
}

double draw_contact(const NetworkParams& p, Rng& rng) {
    return std::sqrt(-std::log(rng.uniform()) / (kPi * p.lambda_b));
}

// contact distance conditioned to be below r
double draw_contact_below(const NetworkParams& p, double r, Rng& rng) {
    const double mass = 1.0 - std::exp(-kPi * p.lambda_b * r * r);
    const double u = rng.uniform() * mass;
    return std::sqrt(-std::log1p(-u) / (kPi * p.lambda_b));
}

// one realization of the class interference over [r_from, r_to]
double realize_annulus(InterferenceClass cls, const ClassGeometry& geo, const NetworkParams& p,
                       double r_from, double r_to, Rng& rng) {
    if (r_to <= r_from) return 0.0;
    const double area = kPi * (r_to * r_to - r_from * r_from);
    const std::uint64_t n = rng.poisson(p.lambda_b * area);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const double r2 = r_from * r_from + rng.uniform() * (r_to * r_to - r_from * r_from);
        const double r = std::sqrt(r2);
        if (geo.thinned) {
            const double keep = 1.0 - std::exp(-kPi * p.lambda_b * r * r);
            if (rng.uniform() > keep) continue;
        }
        double power = p.p_bs;
        if (geo.ue_power) {
            const double R = draw_contact(p, rng);
            if (geo.couple_R && r <= R) continue;
            power = ue_tx_power(std::max(R, 1e-9), p);
        }
        sum += power * rng.exponential(p.sigma2) * std::pow(r, -p.a);
    }
    (void)cls;
    return sum;
}

}  // namespace

std::vector<double> sample_class_interference(InterferenceClass cls, const NetworkParams& p,
                                              double rho, int port, const FluidAntennaGeometry& fa,
                                              long n_fields, std::uint64_t seed) {
    const ClassGeometry geo = class_geometry(cls, p, rho, port, fa);
    const double r_max = default_sim_radius(p.lambda_b);
    std::vector<double> out;
    out.reserve(n_fields);
    for (long i = 0; i < n_fields; ++i) {
        Rng rng(hash_seed(seed, static_cast<std::uint64_t>(i)));
        out.push_back(realize_annulus(cls, geo, p, std::max(geo.r_lo, 1e-9), r_max, rng));
    }
    return out;
}

MomentEstimate mc_mean_oracle(InterferenceClass cls, const NetworkParams& p, double rho, int port,
                              const FluidAntennaGeometry& fa, long n_fields, std::uint64_t seed) {
    const ClassGeometry geo = class_geometry(cls, p, rho, port, fa);
    const double r_max = default_sim_radius(p.lambda_b);
    const double r_split_raw = 0.35 / std::sqrt(p.lambda_b);
    const double r_lo = std::max(geo.r_lo, geo.couple_R ? 1e-6 * r_split_raw : geo.r_lo);
    const double r_split = std::min(std::max(r_split_raw, 2.0 * r_lo), 0.5 * r_max);

    MomentEstimate est;
    est.samples = n_fields;

    // far field: honest realizations beyond r_split (or r_lo if larger)
    const double far_from = std::max(r_lo, r_split);
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < n_fields; ++i) {
        Rng rng(hash_seed(seed, static_cast<std::uint64_t>(i)));
        const double v = realize_annulus(cls, geo, p, far_from, r_max, rng);
        sum += v;
        sum2 += v * v;
    }
    const double far_mean = sum / n_fields;
    const double far_var = std::max(0.0, sum2 / n_fields - far_mean * far_mean);
    est.mean = far_mean;
    double mean_var = far_var / n_fields;

    // near field: importance-sampled Campbell estimate with a log-uniform
    // proposal, which flattens the r^{-a} weight against the r^2-ish density
    if (far_from > r_lo * (1.0 + 1e-12)) {
        const long k_near = std::max<long>(20000, n_fields);
        const double lnratio = std::log(far_from / r_lo);
        Rng rng(hash_seed(seed ^ 0x5bf0a8b1ULL, 1));
        double nsum = 0.0, nsum2 = 0.0;
        for (long i = 0; i < k_near; ++i) {
            const double r = r_lo * std::exp(rng.uniform() * lnratio);
            double density;
            double power = p.p_bs;
            if (geo.couple_R) {
                const double mass = 1.0 - std::exp(-kPi * p.lambda_b * r * r);
                density = p.lambda_b * mass;
                const double rr = draw_contact_below(p, r, rng);
                power = ue_tx_power(std::max(rr, 1e-9), p);
            } else {
                density = exclusion_density({cls, geo.r_lo}, r * 1.0000000001, p);
                if (geo.ue_power) power = ue_tx_power(std::max(draw_contact(p, rng), 1e-9), p);
            }
            const double weight = density * 2.0 * kPi * r * r * lnratio;  // f 2 pi r / q
            const double contrib = weight * power * rng.exponential(p.sigma2) * std::pow(r, -p.a);
            nsum += contrib;
            nsum2 += contrib * contrib;
        }
        const double near_mean = nsum / k_near;
        const double near_var = std::max(0.0, nsum2 / k_near - near_mean * near_mean);
        est.mean += near_mean;
        mean_var += near_var / k_near;
    }
    est.mean_stderr = std::sqrt(mean_var);
    return est;
}

VarianceOracleResult interference_variance_oracle(InterferenceClass cls, const NetworkParams& p,
                                                  double rho, int port,
                                                  const FluidAntennaGeometry& fa, long n_samples,
                                                  std::uint64_t seed) {
    VarianceOracleResult out;
    const std::vector<double> samples =
        sample_class_interference(cls, p, rho, port, fa, n_samples, seed);
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= samples.size();
    double m2 = 0.0, m4 = 0.0;
    for (double v : samples) {
        const double d = v - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= samples.size();
    m4 /= samples.size();
    out.mc.samples = n_samples;
    out.mc.mean = mean;
    out.mc.mean_stderr = std::sqrt(m2 / samples.size());
    out.mc.variance = m2 * samples.size() / (samples.size() - 1.0);
    // stderr of the sample variance from the fourth central moment
    out.mc.variance_stderr = std::sqrt(std::max(0.0, m4 - m2 * m2) / samples.size());

    // central differences of log L_I around s = 0 (nodes {0, h, 2h}, one
    // Richardson step), step scaled to the class mean
    const ExclusionDensity d{cls, class_geometry(cls, p, rho, port, fa).r_lo};
    const double s_scale = mean > 0.0 ? 1.0 / mean : 1.0;
    const double h = 1e-6 * s_scale;
    const auto logl = [&](double s, bool* okp) {
        LogLaplace l = log_laplace_transform(d, p, s);
        if (!l.converged) *okp = false;
        return l.value;
    };
    bool ok = true;
    const double l1 = logl(h, &ok), l2 = logl(2.0 * h, &ok), lh = logl(0.5 * h, &ok);
    const double d_h = (l2 - 2.0 * l1) / (h * h);
    const double d_h2 = (l1 - 2.0 * lh) / (0.25 * h * h);
    out.laplace_estimate = 2.0 * d_h2 - d_h;
    out.laplace_converged = ok && std::isfinite(out.laplace_estimate);
    return out;
}

// ---------------------------------------------------------------------------
// variance routes and matched stats
// ---------------------------------------------------------------------------

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

const char* class_name(InterferenceClass c) {
    switch (c) {
        case InterferenceClass::dl_bs: return "dl_bs";
        case InterferenceClass::ul_ue: return "ul_ue";
        case InterferenceClass::ul_bs: return "ul_bs";
        case InterferenceClass::dl_ue: return "dl_ue";
    }
    return "?";
}

const char* route_name(VarianceRoute r) {
    switch (r) {
        case VarianceRoute::laplace_fdensity: return "laplace";
        case VarianceRoute::campbell_closed: return "campbell";
        case VarianceRoute::censored_empirical: return "censored";
    }
    return "?";
}

}  // namespace

std::string variance_cache_key(InterferenceClass cls, const NetworkParams& p, double rho, int port,
                               const FluidAntennaGeometry& fa, VarianceRoute route) {
    std::ostringstream os;
    os.precision(10);
    os << class_name(cls) << '|' << route_name(route) << '|' << p.lambda_b << '|' << p.a << '|'
       << p.p_bs << '|' << p.p_max << '|' << p.omega << '|' << p.epsilon << '|' << p.sigma2 << '|'
       << p.b_bs << '|' << p.b_ue;
    if (cls == InterferenceClass::dl_bs) os << "|r=" << port_distance(rho, port, fa);
    return os.str();
}

std::optional<double> VarianceCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void VarianceCache::store(const std::string& key, double value) { entries_[key] = value; }

bool VarianceCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    std::getline(in, header);
    if (header != "# fafd-variance-cache v1") return false;
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        entries_[line.substr(0, tab)] = std::stod(line.substr(tab + 1));
    }
    return true;
}

bool VarianceCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) return false;
    out << "# fafd-variance-cache v1\n";
    out.precision(17);
    for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
    return bool(out);
}

double class_variance(InterferenceClass cls, const NetworkParams& p, double rho, int port,
                      const FluidAntennaGeometry& fa, VarianceRoute route, VarianceCache* cache) {
    // f1 has no near-field floor and a closed second cumulant; the route
    // switch only concerns the b-floored and power-controlled classes
    if (cls == InterferenceClass::dl_bs) return var_dl_bs(p, rho, port, fa);
    if (route == VarianceRoute::campbell_closed) {
        switch (cls) {
            case InterferenceClass::dl_ue: return var_dl_ue(p);
            case InterferenceClass::ul_bs: return var_ul_bs(p);
            case InterferenceClass::ul_ue: return var_ul_ue(p);
            default: break;
        }
    }

    const std::string key = variance_cache_key(cls, p, rho, port, fa, route);
    if (cache) {
        if (auto hit = cache->lookup(key)) return *hit;
    }

    double value = 0.0;
    if (route == VarianceRoute::laplace_fdensity) {
        const ExclusionDensity d{cls, class_geometry(cls, p, rho, port, fa).r_lo};
        double mean = 0.0;
        switch (cls) {
            case InterferenceClass::dl_ue: mean = mean_dl_ue(p, rho); break;
            case InterferenceClass::ul_bs: mean = mean_ul_bs(p, rho); break;
            case InterferenceClass::ul_ue: mean = mean_ul_ue(p, rho); break;
            default: break;
        }
        const double h = 1e-6 / std::max(mean, 1e-300);
        bool ok = true;
        const auto logl = [&](double s) {
            LogLaplace l = log_laplace_transform(d, p, s);
            if (!l.converged) ok = false;
            return l.value;
        };
        const double l1 = logl(h), l2 = logl(2.0 * h), lh = logl(0.5 * h);
        const double d_h = (l2 - 2.0 * l1) / (h * h);
        const double d_h2 = (l1 - 2.0 * lh) / (0.25 * h * h);
        value = 2.0 * d_h2 - d_h;
        if (!ok || !std::isfinite(value) || value <= 0.0)
            throw std::runtime_error("class_variance: Laplace-derivative route did not converge");
    } else {
        // censored empirical moments of the class law; deterministic seed
        const long n = 20000;
        std::vector<double> samples =
            sample_class_interference(cls, p, rho, port, fa, n, fnv1a(key));
        std::sort(samples.begin(), samples.end());
        const long keep = n - std::max<long>(1, n / 1000);
        double mean = 0.0;
        for (long i = 0; i < keep; ++i) mean += samples[i];
        mean /= keep;
        double var = 0.0;
        for (long i = 0; i < keep; ++i) var += (samples[i] - mean) * (samples[i] - mean);
        value = var / (keep - 1.0);
    }

    if (cache) cache->store(key, value);
    return value;
}

InterferenceStats compute_interference_stats(const NetworkParams& p, double rho, int port,
                                             const FluidAntennaGeometry& fa, VarianceRoute route,
                                             VarianceCache* cache) {
    InterferenceStats st;
    st.mean_dl_bs = mean_dl_bs(p, rho, port, fa);
    st.mean_dl_ue = mean_dl_ue(p, rho);
    st.mean_ul_bs = mean_ul_bs(p, rho);
    st.mean_ul_ue = mean_ul_ue(p, rho);
    st.var_total_dl = var_dl_bs(p, rho, port, fa) +
                      class_variance(InterferenceClass::dl_ue, p, rho, port, fa, route, cache);
    st.var_total_ul = class_variance(InterferenceClass::ul_bs, p, rho, port, fa, route, cache) +
                      class_variance(InterferenceClass::ul_ue, p, rho, port, fa, route, cache);
    st.gamma_dl = gamma_match(st.mean_dl(), st.var_total_dl);
    st.gamma_ul = gamma_match(st.mean_ul(), st.var_total_ul);
    return st;
}

}  // namespace fafd
