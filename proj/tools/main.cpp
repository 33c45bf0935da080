#include <array>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <infogeo/metrics.hpp>

#include "commands.hpp"
#include "io.hpp"

namespace {

using infogeo::cli::RunConfig;
using nlohmann::json;

double as_number(const json& v, const std::string& key) {
    if (!v.is_number())
        throw std::invalid_argument("config key '" + key + "' must be a number");
    return v.get<double>();
}

bool as_bool(const json& v, const std::string& key) {
    if (!v.is_boolean())
        throw std::invalid_argument("config key '" + key + "' must be a boolean");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string())
        throw std::invalid_argument("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<double> as_number_list(const json& v, const std::string& key) {
    if (!v.is_array())
        throw std::invalid_argument("config key '" + key + "' must be an array");
    std::vector<double> out;
    for (const auto& item : v) out.push_back(as_number(item, key));
    return out;
}

void check_member(const std::string& value, std::vector<std::string> allowed,
                  const std::string& key) {
    for (const auto& a : allowed)
        if (value == a) return;
    std::string msg = "config key '" + key + "' must be one of";
    for (const auto& a : allowed) msg += " " + a;
    throw std::invalid_argument(msg);
}

void check_positive(double v, const std::string& key) {
    if (!(v > 0.0))
        throw std::invalid_argument("config key '" + key + "' must be positive");
}

// Applies one config-file entry to rc unless the matching flag was given on
// the command line (flags take precedence) or does not exist on the active
// subcommand (then the key is rejected as a likely mistake).
void apply_config_entry(const std::string& key, const json& value,
                        CLI::App* sub, RunConfig& rc) {
    const std::string flag = "--" + [&] {
        std::string f = key;
        for (char& c : f)
            if (c == '_') c = '-';
        return f;
    }();
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr)
        throw std::invalid_argument("config key '" + key +
                                    "' does not apply to command '" +
                                    sub->get_name() + "'");
    if (opt->count() > 0) return;  // command line wins

    if (key == "metrization") {
        rc.metrization = as_string(value, key);
        check_member(rc.metrization, {"fr", "alpha", "both"}, key);
    } else if (key == "format") {
        rc.format = as_string(value, key);
        check_member(rc.format, {"csv", "json"}, key);
    } else if (key == "out") {
        rc.out_path = as_string(value, key);
    } else if (key == "point") {
        // Either one [mu, sigma] pair or an array of pairs.
        if (!value.is_array() || value.empty())
            throw std::invalid_argument(
                "config key 'point' must be [mu, sigma] or a list of pairs");
        rc.points.clear();
        if (value.front().is_number()) {
            const auto pair = as_number_list(value, key);
            if (pair.size() != 2)
                throw std::invalid_argument(
                    "config key 'point' must hold 2 numbers");
            rc.points.push_back({pair[0], pair[1]});
        } else {
            for (const auto& item : value) {
                const auto pair = as_number_list(item, key);
                if (pair.size() != 2)
                    throw std::invalid_argument(
                        "config key 'point' entries must hold 2 numbers");
                rc.points.push_back({pair[0], pair[1]});
            }
        }
    } else if (key == "sigma_probes") {
        rc.sigma_probes = as_number_list(value, key);
        if (rc.sigma_probes.empty())
            throw std::invalid_argument(
                "config key 'sigma_probes' must not be empty");
    } else if (key == "ic") {
        const auto ic = as_number_list(value, key);
        if (ic.size() != 4)
            throw std::invalid_argument("config key 'ic' must hold 4 numbers");
        rc.ic = {ic[0], ic[1], ic[2], ic[3]};
    } else if (key == "step") {
        rc.step = as_number(value, key);
        check_positive(rc.step, key);
    } else if (key == "tau_max") {
        rc.tau_max = as_number(value, key);
        check_positive(rc.tau_max, key);
    } else if (key == "integrator") {
        rc.integrator = as_string(value, key);
        check_member(rc.integrator, {"euler", "rk4"}, key);
    } else if (key == "samples") {
        rc.samples = static_cast<int>(as_number(value, key));
        if (rc.samples < 2)
            throw std::invalid_argument("config key 'samples' must be >= 2");
    } else if (key == "closed_form") {
        rc.closed_form = as_bool(value, key);
    } else if (key == "check_closed_form") {
        rc.check_closed_form = as_bool(value, key);
    } else if (key == "rate") {
        rc.rate = as_number(value, key);
        check_positive(rc.rate, key);
    } else if (key == "only") {
        rc.only = as_string(value, key);
    } else if (key == "tolerance_scale") {
        rc.tolerance_scale = as_number(value, key);
        if (rc.tolerance_scale < 0.0)
            throw std::invalid_argument(
                "config key 'tolerance_scale' must be >= 0");
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(const std::string& path, CLI::App* sub, RunConfig& rc) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (!cfg.is_object())
        throw std::invalid_argument("config file must hold one JSON object");
    for (const auto& [key, value] : cfg.items())
        apply_config_entry(key, value, sub, rc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Differential geometry of the Gaussian statistical manifold: "
        "metrics, curvature, geodesics and entropic growth"};
    app.name("infogeo");
    app.set_version_flag("--version", "infogeo 0.1.0");
    app.require_subcommand(1);

    RunConfig rc;
    std::vector<std::string> point_strs;
    std::string probes_str, ic_str, config_path;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--metrization", rc.metrization,
                        "Metric family: fr, alpha or both")
            ->check(CLI::IsMember({"fr", "alpha", "both"}));
        sub->add_option("--format", rc.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", rc.out_path,
                        "Output path (default: standard output)");
        sub->add_option("--config", config_path,
                        "JSON config file mirroring the flags; explicit flags "
                        "take precedence");
    };
    const auto add_point = [&](CLI::App* sub) {
        sub->add_option("--point", point_strs,
                        "Evaluation point mu,sigma (repeatable; default 0,1)");
    };

    CLI::App* metric =
        app.add_subcommand("metric", "Metric tensor components and inverse");
    add_common(metric);
    add_point(metric);

    CLI::App* curvature = app.add_subcommand(
        "curvature", "Curvature report and symmetry verdict");
    add_common(curvature);
    add_point(curvature);
    curvature->add_option("--sigma-probes", probes_str,
                          "Comma-separated sigma probe list (points (0, sigma); "
                          "5 or more also yield a symmetry verdict)");

    CLI::App* geodesic = app.add_subcommand(
        "geodesic", "Integrate the geodesic equations from initial conditions");
    add_common(geodesic);
    geodesic->add_option("--ic", ic_str,
                         "Initial conditions mu,sigma,mu_dot,sigma_dot "
                         "(default 0,1,1,0)");
    geodesic->add_option("--step", rc.step, "Integration step (default 1e-3)")
        ->check(CLI::PositiveNumber);
    geodesic->add_option("--tau-max", rc.tau_max,
                         "Affine-parameter horizon (default 10)")
        ->check(CLI::PositiveNumber);
    geodesic
        ->add_option("--integrator", rc.integrator,
                     "Scheme: euler or rk4 (default euler)")
        ->check(CLI::IsMember({"euler", "rk4"}));
    geodesic
        ->add_option("--samples", rc.samples,
                     "Rows to export, evenly spaced (default 1001)")
        ->check(CLI::Range(2, 1000000000));
    geodesic->add_flag("--closed-form", rc.closed_form,
                       "Add closed-form columns and the pointwise gap (for "
                       "alpha this is the moduli-space profile)");

    CLI::App* ige = app.add_subcommand(
        "ige", "Volume, time-averaged volume and entropic growth along the "
               "closed-form trajectories");
    add_common(ige);
    ige->add_option("--tau-max", rc.tau_max,
                    "Horizon (default 50 for fr, 1e4 for alpha)")
        ->check(CLI::PositiveNumber);
    ige->add_option("--samples", rc.samples,
                    "Grid points including tau=0 (default 2001)")
        ->check(CLI::Range(2, 1000000000));
    ige->add_option("--rate", rc.rate,
                    "Trajectory rate: lambda for fr, a for alpha (default 1)")
        ->check(CLI::PositiveNumber);
    ige->add_flag("--check-closed-form", rc.check_closed_form,
                  "Compare the averaged volume against its closed form");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the built-in check suite (exit 0 iff all checks pass)");
    add_common(verify);
    verify->add_option("--only", rc.only,
                       "Run only checks whose name contains this substring");
    verify
        ->add_option("--tolerance-scale", rc.tolerance_scale,
                     "Multiplies every tolerance (0 forces failures)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) apply_config_file(config_path, sub, rc);
        if (!point_strs.empty()) {
            rc.points.clear();
            for (const auto& s : point_strs) {
                const auto pair =
                    infogeo::cli::parse_double_list(s, "--point", 2);
                rc.points.push_back({pair[0], pair[1]});
            }
        }
        if (!probes_str.empty())
            rc.sigma_probes =
                infogeo::cli::parse_double_list(probes_str, "--sigma-probes");
        if (!ic_str.empty()) {
            const auto ic = infogeo::cli::parse_double_list(ic_str, "--ic", 4);
            rc.ic = {ic[0], ic[1], ic[2], ic[3]};
        }

        if (sub == metric) return infogeo::cli::cmd_metric(rc);
        if (sub == curvature) return infogeo::cli::cmd_curvature(rc);
        if (sub == geodesic) return infogeo::cli::cmd_geodesic(rc);
        if (sub == ige) return infogeo::cli::cmd_ige(rc);
        return infogeo::cli::cmd_verify(rc);
    } catch (const infogeo::numeric_error& e) {
        std::cerr << "infogeo: numerical failure: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "infogeo: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "infogeo: failure: " << e.what() << '\n';
        return 1;
    }
}
