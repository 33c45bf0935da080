#pragma once

#include <array>
#include <string>
#include <vector>

namespace infogeo::cli {

// Fully resolved invocation: hard defaults, then config-file values, then
// command-line flags, merged in that order before dispatch. Sentinels
// tau_max < 0 and samples < 0 mean "per-command default".
struct RunConfig {
    std::string metrization = "both";  // fr | alpha | both
    std::string format = "csv";        // csv | json
    std::string out_path;              // empty -> stdout

    std::vector<std::array<double, 2>> points;  // empty -> {(0, 1)}
    std::vector<double> sigma_probes;           // curvature probe set (mu = 0)

    std::array<double, 4> ic{0.0, 1.0, 1.0, 0.0};  // mu, sigma, mu', sigma'
    double step = 1e-3;
    double tau_max = -1.0;
    std::string integrator = "euler";  // euler | rk4
    int samples = -1;

    bool closed_form = false;        // geodesic: add closed-form columns
    bool check_closed_form = false;  // ige: add closed-form comparison columns
    double rate = 1.0;               // ige: lambda (fr) / a (alpha)

    std::string only;              // verify: substring filter on check names
    double tolerance_scale = 1.0;  // verify: 0 turns it into a failure probe
};

// Each command writes its table to stdout or --out and returns the process
// exit code: 0 success, 1 verification/numerical failure, 2 usage error
// (the latter two usually via exceptions handled in main).
int cmd_metric(const RunConfig& rc);
int cmd_curvature(const RunConfig& rc);
int cmd_geodesic(const RunConfig& rc);
int cmd_ige(const RunConfig& rc);
int cmd_verify(const RunConfig& rc);

}  // namespace infogeo::cli
