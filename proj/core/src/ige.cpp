#include "infogeo/ige.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace infogeo {

namespace {

// Fit acceptance bounds for growth classification.
constexpr double growth_r2_min = 0.999;
constexpr double growth_half_slope_tol = 0.10;  // relative half-window gap
constexpr double growth_min_slope = 1e-6;
constexpr size_t growth_min_window_samples = 20;

double fisher_density_coefficient(Metrization m) {
    if (m == Metrization::FisherRao) return std::sqrt(2.0);
    if (m == Metrization::AlphaOrder) return std::sqrt(3.0 / (32.0 * M_PI));
    throw std::domain_error(
        "parameter volumes need the Fisher-Rao or alpha-order metrization");
}

struct Fit {
    double slope = 0.0;
    double r_squared = 0.0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    Fit fit;
    if (sxx <= 0.0) return fit;
    fit.slope = sxy / sxx;
    if (syy <= 1e-24) return fit;  // flat data: define r^2 = 0
    double ss_res = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double r = (y[i] - my) - fit.slope * (x[i] - mx);
        ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
    return fit;
}

struct Candidate {
    Fit fit;
    bool valid = false;
};

// A growth model is accepted when it explains the window (r^2) with a slope
// that is stable across the two window halves and bounded away from zero.
Candidate assess(const std::vector<double>& x, const std::vector<double>& y) {
    Candidate c;
    c.fit = least_squares(x, y);
    const size_t half = x.size() / 2;
    const Fit a = least_squares({x.begin(), x.begin() + half},
                                {y.begin(), y.begin() + half});
    const Fit b = least_squares({x.begin() + half, x.end()},
                                {y.begin() + half, y.end()});
    const double slope_gap = std::abs(a.slope - b.slope);
    c.valid = c.fit.r_squared >= growth_r2_min &&
              std::abs(c.fit.slope) >= growth_min_slope &&
              slope_gap <= growth_half_slope_tol * std::abs(c.fit.slope);
    return c;
}

GrowthClass classify_window(const std::vector<double>& tau,
                            const std::vector<double>& ige, FitStats* stats) {
    std::vector<double> log_tau(tau.size());
    for (size_t i = 0; i < tau.size(); ++i) log_tau[i] = std::log(tau[i]);

    const Candidate lin = assess(tau, ige);
    const Candidate log = assess(log_tau, ige);

    GrowthClass cls = GrowthClass::Undetermined;
    Fit winner = lin.fit;
    if (lin.valid && (!log.valid || lin.fit.r_squared >= log.fit.r_squared)) {
        cls = GrowthClass::Linear;
        winner = lin.fit;
    } else if (log.valid) {
        cls = GrowthClass::Logarithmic;
        winner = log.fit;
    }
    if (stats) {
        stats->slope = cls == GrowthClass::Undetermined ? 0.0 : winner.slope;
        stats->r_squared = cls == GrowthClass::Undetermined ? 0.0 : winner.r_squared;
    }
    return cls;
}

// Defined samples inside the last decade [tau_max/10, tau_max].
void window_samples(const IgeCurve& curve, std::vector<double>& tau,
                    std::vector<double>& ige) {
    tau.clear();
    ige.clear();
    if (curve.points.empty()) return;
    const double tau_max = curve.points.back().tau;
    if (!(tau_max > 0.0)) return;
    const double lo = tau_max / 10.0;
    for (const auto& pt : curve.points) {
        if (pt.tau >= lo && std::isfinite(pt.ige)) {
            tau.push_back(pt.tau);
            ige.push_back(pt.ige);
        }
    }
}

}  // namespace

double parameter_volume(Metrization m, std::pair<double, double> theta_from,
                        std::pair<double, double> theta_to) {
    const double coeff = fisher_density_coefficient(m);
    const double mu_lo = std::min(theta_from.first, theta_to.first);
    const double mu_hi = std::max(theta_from.first, theta_to.first);
    const double s_lo = std::min(theta_from.second, theta_to.second);
    const double s_hi = std::max(theta_from.second, theta_to.second);
    if (!(s_lo > 0.0))
        throw std::domain_error("sigma bounds must be positive");
    if (!std::isfinite(mu_lo) || !std::isfinite(mu_hi) || !std::isfinite(s_hi))
        throw std::domain_error("rectangle corners must be finite");

    // Exact antiderivatives over [s_lo, s_hi]:
    //   integral sigma^-2 = 1/s_lo - 1/s_hi
    //   integral sigma^-3 = (1/s_lo^2 - 1/s_hi^2) / 2
    const double sigma_part =
        m == Metrization::FisherRao
            ? 1.0 / s_lo - 1.0 / s_hi
            : 0.5 * (1.0 / (s_lo * s_lo) - 1.0 / (s_hi * s_hi));
    return coeff * (mu_hi - mu_lo) * sigma_part;
}

IgeCurve ige_curve(Metrization m, const ModuliPath& path,
                   const std::vector<double>& tau_grid) {
    fisher_density_coefficient(m);  // metrization gate
    if (!path) throw std::domain_error("ige_curve needs a path");
    if (tau_grid.empty()) throw std::domain_error("tau grid must be non-empty");
    for (size_t i = 0; i < tau_grid.size(); ++i) {
        if (!std::isfinite(tau_grid[i]) || tau_grid[i] < 0.0)
            throw std::domain_error("tau grid entries must be finite and >= 0");
        if (i > 0 && tau_grid[i] <= tau_grid[i - 1])
            throw std::domain_error("tau grid must be strictly increasing");
    }

    // The time average runs from tau = 0; prepend a zero-volume origin sample
    // when the grid does not start there (it is not emitted).
    std::vector<double> taus;
    taus.reserve(tau_grid.size() + 1);
    const bool prepend = tau_grid.front() > 0.0;
    if (prepend) taus.push_back(0.0);
    taus.insert(taus.end(), tau_grid.begin(), tau_grid.end());

    const auto origin = path(0.0);
    IgeCurve curve;
    curve.metrization = m;
    curve.points.reserve(tau_grid.size());

    double integral = 0.0;
    double prev_tau = 0.0, prev_vol = 0.0;
    for (size_t i = 0; i < taus.size(); ++i) {
        const double tau = taus[i];
        const double vol = parameter_volume(m, origin, path(tau));
        if (i > 0) integral += 0.5 * (vol + prev_vol) * (tau - prev_tau);
        prev_tau = tau;
        prev_vol = vol;
        if (prepend && i == 0) continue;
        IgePoint pt;
        pt.tau = tau;
        pt.volume = vol;
        pt.avg_volume = tau > 0.0 ? integral / tau : 0.0;
        pt.ige = pt.avg_volume > 0.0
                     ? std::log(pt.avg_volume)
                     : std::numeric_limits<double>::quiet_NaN();
        curve.points.push_back(pt);
    }

    std::vector<double> wt, wi;
    window_samples(curve, wt, wi);
    if (wt.size() >= growth_min_window_samples)
        curve.growth_class = classify_window(wt, wi, &curve.fit_stats);
    return curve;
}

double igc_closed_form_fr(double lambda, double tau) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("lambda must be positive");
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::domain_error("tau must be positive (1/tau singularity at 0)");
    const double lt = lambda * tau;
    // log(1 + e^{2 lt}) without overflow for large lt; same value.
    const double log_term =
        lt > 20.0 ? 2.0 * lt + std::log1p(std::exp(-2.0 * lt))
                  : std::log1p(std::exp(2.0 * lt));
    const double bracket = std::exp(-2.0 * lt) -
                           2.0 * std::exp(-lt) * log_term +
                           2.0 * lt * std::exp(-lt) + 1.0;
    return std::exp(lt) / lt * bracket - 2.0 / lt * (1.0 - std::log(2.0));
}

double igc_closed_form_alpha(double a, double tau) {
    if (!std::isfinite(a) || a <= 0.0)
        throw std::domain_error("a must be positive");
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::domain_error("tau must be positive (1/tau singularity at 0)");
    const double root_pi = std::sqrt(M_PI);
    const double root6 = std::sqrt(6.0);
    const double w = std::sqrt(std::pow(2.0, 1.5) / std::sqrt(3.0) * a * tau + 1.0);
    return 1.0 / (8.0 * root_pi * w) + root6 * a * tau / (16.0 * root_pi) +
           root6 / (16.0 * root_pi * a * w * tau) -
           root6 * a * tau / (12.0 * root_pi * w) -
           root6 / (16.0 * root_pi * a * tau);
}

GrowthClass classify_growth(const IgeCurve& curve, FitStats* stats) {
    std::vector<double> wt, wi;
    window_samples(curve, wt, wi);
    if (wt.size() < growth_min_window_samples)
        throw std::domain_error(
            "growth classification needs at least 20 defined samples in the last decade");
    return classify_window(wt, wi, stats);
}

}  // namespace infogeo
