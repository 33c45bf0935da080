#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <utility>

#include <infogeo/families.hpp>
#include <infogeo/geodesics.hpp>
#include <infogeo/geometry.hpp>
#include <infogeo/ige.hpp>
#include <infogeo/metrics.hpp>
#include <infogeo/verify.hpp>

#include "io.hpp"

namespace infogeo::cli {

namespace {

class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::vector<Metrization> resolve_metrizations(const std::string& name) {
    if (name == "fr") return {Metrization::FisherRao};
    if (name == "alpha") return {Metrization::AlphaOrder};
    if (name == "both") return {Metrization::FisherRao, Metrization::AlphaOrder};
    throw std::invalid_argument("metrization must be fr, alpha or both, got '" +
                                name + "'");
}

const char* label(Metrization m) {
    return m == Metrization::FisherRao ? "fr" : "alpha";
}

MetricTensor2 closed_metric(Metrization m, const ParameterPoint& theta) {
    return m == Metrization::FisherRao ? fisher_rao_metric(theta)
                                       : alpha_metric(theta);
}

std::vector<std::array<double, 2>> resolve_points(const RunConfig& rc) {
    if (!rc.points.empty()) return rc.points;
    return {{0.0, 1.0}};
}

ordered_json points_json(const std::vector<std::array<double, 2>>& points) {
    ordered_json out = ordered_json::array();
    for (const auto& p : points) out.push_back({p[0], p[1]});
    return out;
}

const char* growth_label(GrowthClass g) {
    switch (g) {
        case GrowthClass::Linear: return "Linear";
        case GrowthClass::Logarithmic: return "Logarithmic";
        default: return "Undetermined";
    }
}

// IGE is the log of the time-averaged volume, so its growth class fixes the
// growth class of the volume average itself.
const char* igc_growth_label(GrowthClass g) {
    switch (g) {
        case GrowthClass::Linear: return "Exponential";
        case GrowthClass::Logarithmic: return "Linear";
        default: return "Undetermined";
    }
}

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

int cmd_metric(const RunConfig& rc) {
    const auto metrizations = resolve_metrizations(rc.metrization);
    const auto points = resolve_points(rc);

    const std::vector<std::string> columns = {
        "metrization", "mu",      "sigma",   "g11",     "g12",
        "g22",         "inv_g11", "inv_g12", "inv_g22"};
    std::vector<ordered_json> rows;
    for (Metrization m : metrizations) {
        for (const auto& p : points) {
            const ParameterPoint theta{p[0], p[1]};
            const MetricTensor2 g = closed_metric(m, theta);
            const MetricTensor2 inv = inverse_metric(g);
            ordered_json row;
            row["metrization"] = label(m);
            row["mu"] = theta.mu;
            row["sigma"] = theta.sigma;
            row["g11"] = g.g11;
            row["g12"] = g.g12;
            row["g22"] = g.g22;
            row["inv_g11"] = inv.g11;
            row["inv_g12"] = inv.g12;
            row["inv_g22"] = inv.g22;
            rows.push_back(std::move(row));
        }
    }

    OutputTarget target(rc.out_path);
    if (rc.format == "json") {
        ordered_json config;
        config["command"] = "metric";
        config["metrization"] = rc.metrization;
        config["points"] = points_json(points);
        config["format"] = rc.format;
        write_json(target.stream(), config, rows, ordered_json::object());
    } else {
        write_csv(target.stream(), columns, rows);
    }
    return 0;
}

int cmd_curvature(const RunConfig& rc) {
    const auto metrizations = resolve_metrizations(rc.metrization);
    std::vector<std::array<double, 2>> points;
    if (!rc.sigma_probes.empty())
        for (double s : rc.sigma_probes) points.push_back({0.0, s});
    else
        points = resolve_points(rc);

    const std::vector<std::string> columns = {
        "metrization", "mu",       "sigma",        "scalar",       "sectional",
        "ricci_11",    "ricci_22", "riemann_1212", "weyl_max_abs"};
    std::vector<ordered_json> rows;
    ordered_json symmetry = ordered_json::object();
    for (Metrization m : metrizations) {
        for (const auto& p : points) {
            const ParameterPoint theta{p[0], p[1]};
            const CurvatureReport report = curvature_report(m, theta);
            ordered_json row;
            row["metrization"] = label(m);
            row["mu"] = theta.mu;
            row["sigma"] = theta.sigma;
            row["scalar"] = report.scalar;
            row["sectional"] = report.sectional;
            row["ricci_11"] = report.ricci.r[0][0];
            row["ricci_22"] = report.ricci.r[1][1];
            row["riemann_1212"] = report.sectional * det(closed_metric(m, theta));
            row["weyl_max_abs"] = report.weyl_max_abs;
            rows.push_back(std::move(row));
        }
        if (points.size() >= 5) {
            std::vector<ParameterPoint> probes;
            for (const auto& p : points) probes.push_back({p[0], p[1]});
            const SymmetryVerdict v = classify_symmetry(m, probes);
            ordered_json verdict;
            verdict["isotropic"] = v.isotropic;
            verdict["homogeneous"] = v.homogeneous;
            verdict["maximally_symmetric"] = v.maximally_symmetric;
            symmetry[label(m)] = std::move(verdict);
        }
    }
    if (points.size() < 5)
        symmetry["note"] = "symmetry verdict requires at least 5 probes";

    OutputTarget target(rc.out_path);
    if (rc.format == "json") {
        ordered_json config;
        config["command"] = "curvature";
        config["metrization"] = rc.metrization;
        config["points"] = points_json(points);
        config["format"] = rc.format;
        ordered_json metadata;
        metadata["symmetry"] = symmetry;
        write_json(target.stream(), config, rows, metadata);
    } else {
        write_csv(target.stream(), columns, rows);
        for (const auto& [key, verdict] : symmetry.items()) {
            if (!verdict.is_object()) continue;
            std::cerr << "# " << key << " isotropic="
                      << (verdict["isotropic"].get<bool>() ? "true" : "false")
                      << " homogeneous="
                      << (verdict["homogeneous"].get<bool>() ? "true" : "false")
                      << " maximally_symmetric="
                      << (verdict["maximally_symmetric"].get<bool>() ? "true"
                                                                     : "false")
                      << '\n';
        }
    }
    return 0;
}

namespace {

// Closed-form parameters induced by the initial conditions. The Fisher-Rao
// profile needs sigma'(0) = 0 and mu'(0) > 0 (then lambda = mu'(0) /
// (sqrt(2) sigma0^2)); the alpha moduli form is pinned to (0, 1) starts.
ClosedFormGeodesic closed_form_from_ic(Metrization m,
                                       const std::array<double, 4>& ic) {
    if (m == Metrization::FisherRao) {
        if (ic[3] != 0.0 || !(ic[2] > 0.0) || !(ic[1] > 0.0))
            throw std::invalid_argument(
                "--closed-form (fr) requires initial conditions "
                "(mu0, sigma0 > 0, mu_dot0 > 0, 0)");
        return {m, ic[2] / (std::sqrt(2.0) * ic[1] * ic[1]), ic[0], ic[1]};
    }
    if (ic[0] != 0.0 || ic[1] != 1.0 || ic[3] != 0.0 || ic[2] == 0.0)
        throw std::invalid_argument(
            "--closed-form (alpha) requires initial conditions "
            "(0, 1, mu_dot0 != 0, 0)");
    return {m, std::abs(ic[2]), 0.0, 1.0};
}

std::pair<double, double> closed_form_point(const ClosedFormGeodesic& params,
                                            double tau) {
    return params.metrization == Metrization::FisherRao
               ? closed_form_fr(params, tau)
               : closed_form_alpha_moduli(params, tau);
}

}  // namespace

int cmd_geodesic(const RunConfig& rc) {
    const auto metrizations = resolve_metrizations(rc.metrization);
    const double tau_max = rc.tau_max >= 0.0 ? rc.tau_max : 10.0;
    const int samples = rc.samples >= 0 ? rc.samples : 1001;
    require_positive(tau_max, "tau-max");
    require_positive(rc.step, "step");
    if (samples < 2) throw std::invalid_argument("samples must be at least 2");
    const Integrator integrator =
        rc.integrator == "rk4" ? Integrator::RK4 : Integrator::ForwardEuler;
    const GeodesicInitialConditions ic{rc.ic[0], rc.ic[1], rc.ic[2], rc.ic[3]};

    std::vector<std::string> columns = {"metrization", "tau",    "mu",
                                        "sigma",       "mu_dot", "sigma_dot"};
    if (rc.closed_form) {
        columns.push_back("cf_mu");
        columns.push_back("cf_sigma");
        columns.push_back("gap");
    }

    std::vector<ordered_json> rows;
    ordered_json metadata;
    for (Metrization m : metrizations) {
        const GeodesicPath path = integrate(m, ic, rc.step, tau_max, integrator);
        ClosedFormGeodesic cf;
        double max_gap = 0.0;
        if (rc.closed_form) {
            cf = closed_form_from_ic(m, rc.ic);
            for (const auto& s : path.samples) {
                const auto [cmu, csigma] = closed_form_point(cf, s.tau);
                max_gap = std::max(
                    {max_gap, std::abs(s.mu - cmu), std::abs(s.sigma - csigma)});
            }
        }

        const std::size_t n = path.samples.size();
        const std::size_t keep = std::min<std::size_t>(samples, n);
        for (std::size_t i = 0; i < keep; ++i) {
            const std::size_t idx =
                keep < 2 ? 0
                         : static_cast<std::size_t>(std::llround(
                               static_cast<double>(i) *
                               static_cast<double>(n - 1) /
                               static_cast<double>(keep - 1)));
            const GeodesicSample& s = path.samples[idx];
            ordered_json row;
            row["metrization"] = label(m);
            row["tau"] = s.tau;
            row["mu"] = s.mu;
            row["sigma"] = s.sigma;
            row["mu_dot"] = s.mu_dot;
            row["sigma_dot"] = s.sigma_dot;
            if (rc.closed_form) {
                const auto [cmu, csigma] = closed_form_point(cf, s.tau);
                row["cf_mu"] = cmu;
                row["cf_sigma"] = csigma;
                row["gap"] =
                    std::max(std::abs(s.mu - cmu), std::abs(s.sigma - csigma));
            }
            rows.push_back(std::move(row));
        }

        ordered_json block;
        block["halted"] = path.halted;
        if (path.halted) {
            block["halt_reason"] = path.halt_reason;
            block["halt_tau"] = path.halt_tau;
        }
        block["integrated_samples"] = n;
        if (rc.closed_form) {
            block["closed_form"] =
                m == Metrization::FisherRao ? "exact" : "moduli";
            block["max_gap"] = max_gap;
        }
        metadata[label(m)] = std::move(block);

        if (rc.format != "json") {
            if (path.halted)
                std::cerr << "# " << label(m) << " halted at tau="
                          << format_double(path.halt_tau) << " ("
                          << path.halt_reason << ")\n";
            if (rc.closed_form)
                std::cerr << "# " << label(m)
                          << " max_gap=" << format_double(max_gap) << '\n';
        }
    }

    OutputTarget target(rc.out_path);
    if (rc.format == "json") {
        ordered_json config;
        config["command"] = "geodesic";
        config["metrization"] = rc.metrization;
        config["ic"] = {rc.ic[0], rc.ic[1], rc.ic[2], rc.ic[3]};
        config["step"] = rc.step;
        config["tau_max"] = tau_max;
        config["integrator"] = rc.integrator;
        config["samples"] = samples;
        config["closed_form"] = rc.closed_form;
        config["format"] = rc.format;
        write_json(target.stream(), config, rows, metadata);
    } else {
        write_csv(target.stream(), columns, rows);
    }
    return 0;
}

int cmd_ige(const RunConfig& rc) {
    const auto metrizations = resolve_metrizations(rc.metrization);
    require_positive(rc.rate, "rate");
    const int samples = rc.samples >= 0 ? rc.samples : 2001;
    if (samples < 2) throw std::invalid_argument("samples must be at least 2");

    std::vector<std::string> columns = {"metrization", "tau", "volume",
                                        "avg_volume", "ige"};
    if (rc.check_closed_form) {
        columns.push_back("cf_avg_volume");
        columns.push_back("rel_gap");
    }

    std::vector<ordered_json> rows;
    ordered_json metadata;
    ordered_json tau_max_echo;
    for (Metrization m : metrizations) {
        const bool fr = m == Metrization::FisherRao;
        const double tau_max = rc.tau_max >= 0.0 ? rc.tau_max : (fr ? 50.0 : 1e4);
        require_positive(tau_max, "tau-max");
        tau_max_echo[label(m)] = tau_max;

        const ClosedFormGeodesic params{m, rc.rate, 0.0, 1.0};
        const ModuliPath path =
            fr ? ModuliPath([params](double t) { return closed_form_fr(params, t); })
               : ModuliPath([params](double t) {
                     return closed_form_alpha_moduli(params, t);
                 });
        std::vector<double> grid(samples);
        for (int i = 0; i < samples; ++i)
            grid[i] = tau_max * i / (samples - 1);
        const IgeCurve curve = ige_curve(m, path, grid);

        double tail_gap = 0.0;
        for (const IgePoint& pt : curve.points) {
            ordered_json row;
            row["metrization"] = label(m);
            row["tau"] = pt.tau;
            row["volume"] = pt.volume;
            row["avg_volume"] = pt.avg_volume;
            row["ige"] = pt.ige;
            if (rc.check_closed_form) {
                if (pt.tau > 0.0) {
                    const double cf = fr ? igc_closed_form_fr(rc.rate, pt.tau)
                                         : igc_closed_form_alpha(rc.rate, pt.tau);
                    const double gap = std::abs(pt.avg_volume - cf) / std::abs(cf);
                    row["cf_avg_volume"] = cf;
                    row["rel_gap"] = gap;
                    if (pt.tau >= 0.5 * tau_max) tail_gap = std::max(tail_gap, gap);
                } else {
                    row["cf_avg_volume"] = nullptr;
                    row["rel_gap"] = nullptr;
                }
            }
            rows.push_back(std::move(row));
        }

        ordered_json block;
        block["ige_growth"] = growth_label(curve.growth_class);
        block["igc_growth"] = igc_growth_label(curve.growth_class);
        block["slope"] = curve.fit_stats.slope;
        block["r_squared"] = curve.fit_stats.r_squared;
        if (rc.check_closed_form) block["max_rel_gap_tail"] = tail_gap;
        metadata[label(m)] = std::move(block);

        if (rc.format != "json")
            std::cerr << "# " << label(m)
                      << " ige_growth=" << growth_label(curve.growth_class)
                      << " igc_growth=" << igc_growth_label(curve.growth_class)
                      << " slope=" << format_double(curve.fit_stats.slope)
                      << " r_squared="
                      << format_double(curve.fit_stats.r_squared) << '\n';
    }

    OutputTarget target(rc.out_path);
    if (rc.format == "json") {
        ordered_json config;
        config["command"] = "ige";
        config["metrization"] = rc.metrization;
        config["rate"] = rc.rate;
        config["tau_max"] = tau_max_echo;
        config["samples"] = samples;
        config["check_closed_form"] = rc.check_closed_form;
        config["format"] = rc.format;
        write_json(target.stream(), config, rows, metadata);
    } else {
        write_csv(target.stream(), columns, rows);
    }
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    if (rc.tolerance_scale < 0.0 || !std::isfinite(rc.tolerance_scale))
        throw std::invalid_argument("tolerance-scale must be >= 0");
    VerifyOptions options;
    options.tolerance_scale = rc.tolerance_scale;
    options.only = rc.only;
    options.run_fr = rc.metrization != "alpha";
    options.run_alpha = rc.metrization != "fr";

    const std::vector<CheckResult> results = run_verification(options);
    if (results.empty())
        throw std::invalid_argument("no checks match --only '" + rc.only + "'");

    OutputTarget target(rc.out_path);
    if (rc.format == "json") {
        ordered_json config;
        config["command"] = "verify";
        config["metrization"] = rc.metrization;
        config["only"] = rc.only;
        config["tolerance_scale"] = rc.tolerance_scale;
        config["format"] = rc.format;
        std::vector<ordered_json> rows;
        std::size_t passed = 0;
        for (const CheckResult& r : results) {
            ordered_json row;
            row["name"] = r.name;
            row["passed"] = r.passed;
            row["residual"] = r.residual;
            row["tolerance"] = r.tolerance;
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
            if (r.passed) ++passed;
        }
        ordered_json metadata;
        metadata["overall"] = all_passed(results) ? "PASS" : "FAIL";
        metadata["checks_passed"] = passed;
        metadata["checks_total"] = results.size();
        write_json(target.stream(), config, rows, metadata);
    } else {
        target.stream() << render_report(results);
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace infogeo::cli
