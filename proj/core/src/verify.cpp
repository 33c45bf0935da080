#include "infogeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "infogeo/families.hpp"
#include "infogeo/geodesics.hpp"
#include "infogeo/geometry.hpp"
#include "infogeo/ige.hpp"
#include "infogeo/metrics.hpp"

namespace infogeo {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// 5x5 probe grid over mu in [-2, 2], sigma in [0.5, 4].
std::vector<ParameterPoint> probe_grid() {
    std::vector<ParameterPoint> grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            grid.push_back({-2.0 + i, 0.5 + 3.5 * j / 4.0});
    return grid;
}

const double sigma_probes[5] = {0.5, 1.0, 2.0, 4.0, 8.0};

// Worst per-component relative deviation between two metrics; the exact
// off-diagonal is 0, so it is measured against the diagonal scale.
double metric_rel_diff(const MetricTensor2& got, const MetricTensor2& want) {
    const double off_scale = std::sqrt(want.g11 * want.g22);
    return std::max({std::abs(got.g11 - want.g11) / std::abs(want.g11),
                     std::abs(got.g12 - want.g12) / off_scale,
                     std::abs(got.g22 - want.g22) / std::abs(want.g22)});
}

struct Suite {
    const VerifyOptions& options;
    std::vector<CheckResult> results;

    bool enabled(const std::string& name) const {
        return options.only.empty() || name.find(options.only) != std::string::npos;
    }

    void add(const std::string& name, double residual, double tolerance,
             bool categorical_ok, const std::string& detail) {
        CheckResult r;
        r.name = name;
        r.residual = residual;
        r.tolerance = tolerance * options.tolerance_scale;
        r.passed = categorical_ok && residual <= r.tolerance;
        r.detail = detail;
        results.push_back(std::move(r));
    }
};

void check_metric_golden(Suite& s, Metrization m) {
    const std::string name = m == Metrization::FisherRao ? "metric_golden_fr"
                                                         : "metric_golden_alpha";
    if (!s.enabled(name)) return;
    const ParameterPoint theta{0.0, 1.0};
    const MetricTensor2 g =
        m == Metrization::FisherRao ? fisher_rao_metric(theta) : alpha_metric(theta);
    const double e11 = m == Metrization::FisherRao ? 1.0 : 0.25 / std::sqrt(M_PI);
    const double e22 = m == Metrization::FisherRao ? 2.0 : 0.375 / std::sqrt(M_PI);
    const double residual = std::max(
        {std::abs(g.g11 - e11), std::abs(g.g12), std::abs(g.g22 - e22)});
    s.add(name, residual, 1e-15, true,
          "g11=" + fmt17(g.g11) + " g12=" + fmt17(g.g12) + " g22=" + fmt17(g.g22));
}

void check_quadrature_vs_closed(Suite& s, Metrization m) {
    const std::string name = m == Metrization::FisherRao
                                 ? "quadrature_vs_closed_fr"
                                 : "quadrature_vs_closed_alpha";
    if (!s.enabled(name)) return;
    const PhiKernel kernel =
        m == Metrization::FisherRao ? phi1_kernel() : phi2_kernel();
    double worst = 0.0;
    for (const auto& theta : probe_grid()) {
        MetricTensor2 q = phi_metric(kernel, theta);
        if (m == Metrization::AlphaOrder) {
            // The alpha-order metric is half the phi2 form.
            q.g11 *= 0.5;
            q.g12 *= 0.5;
            q.g22 *= 0.5;
        }
        const MetricTensor2 c = m == Metrization::FisherRao
                                    ? fisher_rao_metric(theta)
                                    : alpha_metric(theta);
        worst = std::max(worst, metric_rel_diff(q, c));
    }
    s.add(name, worst, 1e-7, true, "grid=5x5 kernel=" + kernel.label);
}

void check_kl_hessian(Suite& s) {
    if (!s.enabled("kl_hessian_vs_closed")) return;
    double worst = 0.0;
    for (const auto& theta : probe_grid())
        worst = std::max(worst, metric_rel_diff(fisher_from_kl_hessian(theta, 1e-3),
                                                fisher_rao_metric(theta)));
    s.add("kl_hessian_vs_closed", worst, 1e-4, true, "grid=5x5 step=0.001");
}

void check_curvature_golden(Suite& s, Metrization m) {
    const bool fr = m == Metrization::FisherRao;
    const std::string name = fr ? "curvature_golden_fr" : "curvature_golden_alpha";
    if (!s.enabled(name)) return;
    double worst = 0.0;
    for (double sigma : sigma_probes) {
        const ParameterPoint theta{0.0, sigma};
        const double scalar_want = fr ? -1.0 : -8.0 * std::sqrt(M_PI) * sigma;
        const double sect_want = fr ? -0.5 : -4.0 * std::sqrt(M_PI) * sigma;
        worst = std::max(
            {worst,
             std::abs(scalar_curvature(m, theta) - scalar_want) / std::abs(scalar_want),
             std::abs(sectional_curvature(m, theta) - sect_want) / std::abs(sect_want)});
    }
    s.add(name, worst, 1e-12, true,
          fr ? "scalar=-1 sectional=-1/2 at 5 sigma probes"
             : "scalar=-8*sqrt(pi)*sigma sectional=-4*sqrt(pi)*sigma at 5 sigma probes");
}

void check_symmetry(Suite& s, Metrization m) {
    const bool fr = m == Metrization::FisherRao;
    const std::string name = fr ? "symmetry_fr" : "symmetry_alpha";
    if (!s.enabled(name)) return;
    std::vector<ParameterPoint> probes;
    for (double sigma : sigma_probes) probes.push_back({0.0, sigma});
    const SymmetryVerdict v = classify_symmetry(m, probes);
    double weyl = 0.0;
    for (const auto& [check, residual] : v.evidence)
        if (check == "weyl_anisotropy") weyl = residual;
    const bool expected = fr ? (v.isotropic && v.homogeneous && v.maximally_symmetric)
                             : (v.isotropic && !v.homogeneous && !v.maximally_symmetric);
    std::string detail = std::string("isotropic=") + bool_str(v.isotropic) +
                         " homogeneous=" + bool_str(v.homogeneous) +
                         " maximally_symmetric=" + bool_str(v.maximally_symmetric);
    s.add(name, weyl, 1e-12, expected, detail);
}

void check_geodesic_residual(Suite& s, Metrization m) {
    const bool fr = m == Metrization::FisherRao;
    const std::string name = fr ? "geodesic_residual_fr" : "geodesic_residual_alpha";
    if (!s.enabled(name)) return;
    const ClosedFormGeodesic params{m, 1.0, 0.0, 1.0};
    const Trajectory traj = fr
        ? Trajectory([params](double t) { return closed_form_fr(params, t); })
        : Trajectory([params](double t) { return closed_form_alpha_moduli(params, t); });
    const double residual = residual_check(m, traj);
    s.add(name, residual, 1e-5, true, "closed form, rate=1, tau in [0, 5]");
}

void check_geodesic_numeric(Suite& s, Integrator integrator) {
    const bool rk4 = integrator == Integrator::RK4;
    const std::string name = rk4 ? "geodesic_rk4_fr" : "geodesic_euler_fr";
    if (!s.enabled(name)) return;
    // Reference initial conditions (0, 1, 1, 0): mu_dot(0) = 1 fixes
    // lambda = 1/sqrt(2) through mu_dot = sqrt(2) lambda sigma^2.
    const GeodesicPath path = integrate(Metrization::FisherRao, {0.0, 1.0, 1.0, 0.0},
                                        1e-3, 10.0, integrator);
    const ClosedFormGeodesic cf{Metrization::FisherRao, 1.0 / std::sqrt(2.0), 0.0, 1.0};
    double gap = 0.0;
    for (const auto& sample : path.samples) {
        const auto [mu, sigma] = closed_form_fr(cf, sample.tau);
        gap = std::max({gap, std::abs(sample.mu - mu), std::abs(sample.sigma - sigma)});
    }
    const bool complete = !path.halted && path.samples.size() == 10001;
    s.add(name, gap, rk4 ? 1e-6 : 5e-3, complete,
          "h=0.001 tau_max=10 samples=" + std::to_string(path.samples.size()));
}

void check_convergence_ratio(Suite& s) {
    if (!s.enabled("convergence_ratio")) return;
    bool monotone = true;
    double prev = convergence_rate_ratio(5.0, 1e-4);
    const double first = prev;
    for (int tau = 6; tau <= 30; ++tau) {
        const double r = convergence_rate_ratio(tau, 1e-4);
        if (!(r < prev)) monotone = false;
        prev = r;
    }
    s.add("convergence_ratio", prev, 1e-3, monotone,
          std::string("monotone=") + bool_str(monotone) + " ratio(5)=" + fmt6(first));
}

std::vector<double> uniform_grid(double tau_max, int n) {
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = tau_max * i / (n - 1);
    return grid;
}

const char* growth_str(GrowthClass g) {
    switch (g) {
        case GrowthClass::Linear: return "Linear";
        case GrowthClass::Logarithmic: return "Logarithmic";
        default: return "Undetermined";
    }
}

void check_ige_growth(Suite& s, Metrization m) {
    const bool fr = m == Metrization::FisherRao;
    const std::string name = fr ? "ige_growth_fr" : "ige_growth_alpha";
    if (!s.enabled(name)) return;
    const ClosedFormGeodesic params{m, 1.0, 0.0, 1.0};
    const ModuliPath path = fr
        ? ModuliPath([params](double t) { return closed_form_fr(params, t); })
        : ModuliPath([params](double t) { return closed_form_alpha_moduli(params, t); });
    const IgeCurve curve = ige_curve(m, path, uniform_grid(fr ? 50.0 : 1e4, 2001));
    const bool class_ok =
        curve.growth_class == (fr ? GrowthClass::Linear : GrowthClass::Logarithmic);
    const double residual = std::abs(curve.fit_stats.slope - 1.0);
    s.add(name, residual, 0.1, class_ok,
          std::string("class=") + growth_str(curve.growth_class) +
              " slope=" + fmt6(curve.fit_stats.slope) +
              " r2=" + fmt6(curve.fit_stats.r_squared));
}

void check_igc_agreement(Suite& s, Metrization m) {
    const bool fr = m == Metrization::FisherRao;
    const std::string name = fr ? "igc_agreement_fr" : "igc_agreement_alpha";
    if (!s.enabled(name)) return;
    const ClosedFormGeodesic params{m, 1.0, 0.0, 1.0};
    const ModuliPath path = fr
        ? ModuliPath([params](double t) { return closed_form_fr(params, t); })
        : ModuliPath([params](double t) { return closed_form_alpha_moduli(params, t); });
    const int n = fr ? 3001 : 10001;
    const double tau_max = fr ? 30.0 : 1e4;
    const IgeCurve curve = ige_curve(m, path, uniform_grid(tau_max, n));
    const int idx[3] = {fr ? 2000 : 1000, fr ? 2500 : 5000, n - 1};
    double worst = 0.0;
    for (int i : idx) {
        const double tau = curve.points[static_cast<size_t>(i)].tau;
        const double quad = curve.points[static_cast<size_t>(i)].avg_volume;
        const double closed = fr ? igc_closed_form_fr(1.0, tau)
                                 : igc_closed_form_alpha(1.0, tau);
        worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
    }
    s.add(name, worst, 1e-2, true,
          fr ? "tau in {20, 25, 30}, rate=1" : "tau in {1e3, 5e3, 1e4}, rate=1");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Suite s{options, {}};
    const bool fr = options.run_fr, al = options.run_alpha;

    if (fr) check_metric_golden(s, Metrization::FisherRao);
    if (al) check_metric_golden(s, Metrization::AlphaOrder);
    if (fr) check_quadrature_vs_closed(s, Metrization::FisherRao);
    if (al) check_quadrature_vs_closed(s, Metrization::AlphaOrder);
    if (fr) check_kl_hessian(s);
    if (fr) check_curvature_golden(s, Metrization::FisherRao);
    if (al) check_curvature_golden(s, Metrization::AlphaOrder);
    if (fr) check_symmetry(s, Metrization::FisherRao);
    if (al) check_symmetry(s, Metrization::AlphaOrder);
    if (fr) check_geodesic_residual(s, Metrization::FisherRao);
    if (al) check_geodesic_residual(s, Metrization::AlphaOrder);
    if (fr) check_geodesic_numeric(s, Integrator::RK4);
    if (fr) check_geodesic_numeric(s, Integrator::ForwardEuler);
    if (fr && al) check_convergence_ratio(s);
    if (fr) check_ige_growth(s, Metrization::FisherRao);
    if (al) check_ige_growth(s, Metrization::AlphaOrder);
    if (fr) check_igc_agreement(s, Metrization::FisherRao);
    if (al) check_igc_agreement(s, Metrization::AlphaOrder);

    return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

std::string render_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    size_t passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        for (size_t i = r.name.size(); i < 28; ++i) out << ' ';
        out << " residual=" << fmt17(r.residual) << " tolerance=" << fmt6(r.tolerance);
        if (!r.detail.empty()) out << " | " << r.detail;
        out << '\n';
        if (r.passed) ++passed;
    }
    out << "overall: " << (passed == results.size() ? "PASS" : "FAIL") << " ("
        << passed << "/" << results.size() << " checks passed)\n";
    return out.str();
}

}  // namespace infogeo
