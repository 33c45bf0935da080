#pragma once

#include <string>
#include <vector>

namespace infogeo {

// One self-check of the library against its golden values and cross-route
// oracles. residual is the worst deviation observed; the check passes when
// residual <= tolerance (after scaling) and every categorical expectation in
// it holds.
struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    // Multiplies every tolerance; 0 turns the suite into a failure probe.
    double tolerance_scale = 1.0;
    // When non-empty, only checks whose name contains this substring run.
    std::string only;
    bool run_fr = true;
    bool run_alpha = true;
};

// Runs the full check suite (deterministic, no I/O): metric golden values,
// quadrature-vs-closed-form agreement, the KL-Hessian route, curvature golden
// values, symmetry verdicts, closed-form ODE residuals, numeric-vs-closed
// geodesics, the mean-velocity ratio, IGE growth classes, and closed-form
// IGC agreement.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// Fixed-format text report, one line per check plus a summary line. Contains
// no timestamps or timing, so identical runs render byte-identical reports.
std::string render_report(const std::vector<CheckResult>& results);

}  // namespace infogeo
