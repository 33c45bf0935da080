#include "infogeo/geodesics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace infogeo {

namespace {

void require_closed_form_metrization(Metrization m) {
    if (m != Metrization::FisherRao && m != Metrization::AlphaOrder)
        throw std::domain_error(
            "geodesics need the Fisher-Rao or alpha-order metrization");
}

using State = std::array<double, 4>;  // mu, sigma, mu_dot, sigma_dot

// Right-hand side without the sigma > 0 domain check (callers guard it);
// returns the derivative of the state vector.
State rhs_raw(Metrization m, const State& y) {
    const double sigma = y[1], mu_dot = y[2], sigma_dot = y[3];
    double mu_ddot, sigma_ddot;
    if (m == Metrization::FisherRao) {
        mu_ddot = 2.0 * mu_dot * sigma_dot / sigma;
        sigma_ddot = -0.5 * mu_dot * mu_dot / sigma +
                     sigma_dot * sigma_dot / sigma;
    } else {
        mu_ddot = 3.0 * mu_dot * sigma_dot / sigma;
        sigma_ddot = -mu_dot * mu_dot / sigma +
                     1.5 * sigma_dot * sigma_dot / sigma;
    }
    return {mu_dot, sigma_dot, mu_ddot, sigma_ddot};
}

bool state_ok(const State& y) {
    return y[1] > geodesic_sigma_floor && std::isfinite(y[0]) &&
           std::isfinite(y[1]) && std::isfinite(y[2]) && std::isfinite(y[3]);
}

State axpy(const State& y, double a, const State& d) {
    return {y[0] + a * d[0], y[1] + a * d[1], y[2] + a * d[2], y[3] + a * d[3]};
}

void validate_closed_form(const ClosedFormGeodesic& params, Metrization want,
                          double tau) {
    if (params.metrization != want)
        throw std::domain_error("closed-form parameters built for a different metrization");
    if (!std::isfinite(params.lambda_or_a) || params.lambda_or_a <= 0.0)
        throw std::domain_error("closed-form rate must be positive");
    require_valid(ParameterPoint{params.mu0, params.sigma0});
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::domain_error("tau must be nonnegative");
}

}  // namespace

GeodesicDerivative geodesic_rhs(Metrization m, const GeodesicState& state) {
    require_closed_form_metrization(m);
    if (!(state.sigma > 0.0))
        throw std::domain_error("sigma must be positive");
    const State d = rhs_raw(m, {state.mu, state.sigma, state.mu_dot, state.sigma_dot});
    return {d[0], d[1], d[2], d[3]};
}

GeodesicPath integrate(Metrization m, const GeodesicInitialConditions& ic,
                       double step, double tau_max, Integrator integrator) {
    require_closed_form_metrization(m);
    require_valid(ParameterPoint{ic.mu0, ic.sigma0});
    if (!std::isfinite(ic.mu_dot0) || !std::isfinite(ic.sigma_dot0))
        throw std::domain_error("initial velocities must be finite");
    if (!std::isfinite(step) || step <= 0.0)
        throw std::domain_error("step must be positive");
    if (!std::isfinite(tau_max) || tau_max <= 0.0)
        throw std::domain_error("tau_max must be positive");

    const long n_steps = static_cast<long>(std::floor(tau_max / step + 1e-9));
    GeodesicPath path;
    path.metrization = m;
    path.integrator = integrator;
    path.step = step;
    path.samples.reserve(static_cast<size_t>(n_steps) + 1);

    State y = {ic.mu0, ic.sigma0, ic.mu_dot0, ic.sigma_dot0};
    path.samples.push_back({0.0, y[0], y[1], y[2], y[3]});

    for (long k = 0; k < n_steps; ++k) {
        const double tau_k = static_cast<double>(k) * step;
        bool stage_failed = false;
        State next{};
        if (integrator == Integrator::ForwardEuler) {
            next = axpy(y, step, rhs_raw(m, y));
        } else {
            // Classical RK4; intermediate stages can dip through the sigma
            // floor near the singular end of the trajectory.
            const State k1 = rhs_raw(m, y);
            const State y2 = axpy(y, 0.5 * step, k1);
            if (!state_ok(y2)) {
                stage_failed = true;
            } else {
                const State k2 = rhs_raw(m, y2);
                const State y3 = axpy(y, 0.5 * step, k2);
                if (!state_ok(y3)) {
                    stage_failed = true;
                } else {
                    const State k3 = rhs_raw(m, y3);
                    const State y4 = axpy(y, step, k3);
                    if (!state_ok(y4)) {
                        stage_failed = true;
                    } else {
                        const State k4 = rhs_raw(m, y4);
                        for (int i = 0; i < 4; ++i)
                            next[i] = y[i] + step / 6.0 *
                                      (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                    }
                }
            }
        }
        if (stage_failed || !state_ok(next)) {
            path.halted = true;
            path.halt_reason = (stage_failed || next[1] <= geodesic_sigma_floor)
                                   ? "sigma_floor"
                                   : "nonfinite_state";
            path.halt_tau = tau_k;
            break;
        }
        y = next;
        path.samples.push_back({(k + 1) * step, y[0], y[1], y[2], y[3]});
    }
    return path;
}

std::pair<double, double> closed_form_fr(const ClosedFormGeodesic& params,
                                         double tau) {
    validate_closed_form(params, Metrization::FisherRao, tau);
    const double u = params.sigma0 * params.lambda_or_a * tau;
    // sech/tanh rendering of
    //   sigma = 2 sigma0 e^u / (1 + e^{2u}),
    //   mu    = mu0 + sqrt(2) sigma0 - 2 sqrt(2) sigma0 / (1 + e^{2u});
    // identical values, stable for large u.
    const double sigma = params.sigma0 / std::cosh(u);
    const double mu = params.mu0 + std::sqrt(2.0) * params.sigma0 * std::tanh(u);
    return {mu, sigma};
}

std::pair<double, double> closed_form_alpha_moduli(
    const ClosedFormGeodesic& params, double tau) {
    validate_closed_form(params, Metrization::AlphaOrder, tau);
    if (params.mu0 != 0.0 || params.sigma0 != 1.0)
        throw std::domain_error(
            "alpha moduli form is only available for (mu0, sigma0) = (0, 1)");
    const double k = 4.0 * params.lambda_or_a / std::sqrt(6.0);
    const double w = std::sqrt(1.0 + k * tau);
    return {0.5 * std::sqrt(6.0) * (1.0 - 1.0 / w), 1.0 / w};
}

double residual_check(Metrization m, const Trajectory& trajectory) {
    require_closed_form_metrization(m);
    if (!trajectory) throw std::domain_error("residual_check needs a trajectory");

    constexpr double h = 1e-4;
    constexpr int probes = 512;
    constexpr double lo = h, hi = 5.0;
    double max_residual = 0.0;
    for (int i = 0; i < probes; ++i) {
        const double tau = lo + (hi - lo) * i / (probes - 1);
        const auto [mu_m, sigma_m] = trajectory(tau - h);
        const auto [mu_0, sigma_0] = trajectory(tau);
        const auto [mu_p, sigma_p] = trajectory(tau + h);
        if (!(sigma_0 > 0.0))
            throw std::domain_error("trajectory sigma must be positive");
        const double mu_dot = (mu_p - mu_m) / (2.0 * h);
        const double sigma_dot = (sigma_p - sigma_m) / (2.0 * h);
        const double mu_ddot = (mu_p - 2.0 * mu_0 + mu_m) / (h * h);
        const double sigma_ddot = (sigma_p - 2.0 * sigma_0 + sigma_m) / (h * h);

        double r_mu, r_sigma;
        if (m == Metrization::FisherRao) {
            r_mu = mu_ddot - 2.0 * mu_dot * sigma_dot / sigma_0;
            r_sigma = sigma_ddot + 0.5 * mu_dot * mu_dot / sigma_0 -
                      sigma_dot * sigma_dot / sigma_0;
        } else {
            // Moduli rendering: the underlying mean moves along the imaginary
            // axis, so the squared mean-velocity coupling flips sign (the
            // squared unit phase is -1).
            r_mu = mu_ddot - 3.0 * mu_dot * sigma_dot / sigma_0;
            r_sigma = sigma_ddot - mu_dot * mu_dot / sigma_0 -
                      1.5 * sigma_dot * sigma_dot / sigma_0;
        }
        max_residual =
            std::max({max_residual, std::abs(r_mu), std::abs(r_sigma)});
    }
    return max_residual;
}

double convergence_rate_ratio(double tau_max, double step) {
    if (!std::isfinite(tau_max) || tau_max <= 0.0)
        throw std::domain_error("tau_max must be positive");
    if (!std::isfinite(step) || step <= 0.0 || step > tau_max)
        throw std::domain_error("step must be positive and at most tau_max");

    // Canonical rates induced by initial conditions (0, 1, 1, 0):
    // mu_dot(0) = 1 gives sqrt(2) lambda = 1 for the Fisher-Rao form and
    // a = 1 for the alpha moduli form.
    const double lambda = 1.0 / std::sqrt(2.0);
    const double a = 1.0;

    // Central differences of the means, written through exact difference
    // identities so the quotient survives cancellation at large tau:
    //   tanh(u+) - tanh(u-) = sinh(u+ - u-) / (cosh(u+) cosh(u-))
    const double up = lambda * (tau_max + step);
    const double um = lambda * (tau_max - step);
    const double mu_dot_fr = std::sqrt(2.0) * std::sinh(up - um) /
                             (std::cosh(up) * std::cosh(um)) / (2.0 * step);

    //   w+ - w- = k (tau+ - tau-) / (w+ + w-)
    const double k = 4.0 * a / std::sqrt(6.0);
    const double wp = std::sqrt(1.0 + k * (tau_max + step));
    const double wm = std::sqrt(1.0 + k * (tau_max - step));
    const double mu_dot_alpha =
        0.5 * std::sqrt(6.0) * k / ((wp + wm) * wp * wm);

    return mu_dot_fr / mu_dot_alpha;
}

}  // namespace infogeo
