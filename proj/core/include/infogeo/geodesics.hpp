#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "infogeo/metrics.hpp"

namespace infogeo {

struct GeodesicInitialConditions {
    double mu0 = 0.0;
    double sigma0 = 1.0;
    double mu_dot0 = 1.0;
    double sigma_dot0 = 0.0;
};

enum class Integrator { ForwardEuler, RK4 };

struct GeodesicState {
    double mu, sigma, mu_dot, sigma_dot;
};

struct GeodesicDerivative {
    double mu_dot, sigma_dot, mu_ddot, sigma_ddot;
};

struct GeodesicSample {
    double tau, mu, sigma, mu_dot, sigma_dot;
};

// Both geodesic families drive sigma toward 0 where the equations are
// singular; integration halts at this floor instead of producing NaNs.
inline constexpr double geodesic_sigma_floor = 1e-9;

struct GeodesicPath {
    std::vector<GeodesicSample> samples;  // tau strictly increasing from 0
    Metrization metrization = Metrization::FisherRao;
    Integrator integrator = Integrator::ForwardEuler;
    double step = 1e-3;
    bool halted = false;      // sigma reached the floor before tau_max
    std::string halt_reason;  // "sigma_floor" or "nonfinite_state"
    double halt_tau = 0.0;    // tau of the last retained sample when halted
};

// Second-order geodesic systems, first-order form.
//   Fisher-Rao:   mu'' = (2/sigma) mu' sigma'
//                 sigma'' = -mu'^2/(2 sigma) + sigma'^2/sigma
//   alpha-order:  mu'' = (3/sigma) mu' sigma'
//                 sigma'' = -mu'^2/sigma + 3 sigma'^2/(2 sigma)
GeodesicDerivative geodesic_rhs(Metrization m, const GeodesicState& state);

// Fixed-step integration sampled at multiples of step up to tau_max.
// Forward Euler is the reference scheme of record; RK4 is the accuracy
// reference. The returned path is truncated and flagged when sigma reaches
// geodesic_sigma_floor.
GeodesicPath integrate(Metrization m, const GeodesicInitialConditions& ic,
                       double step, double tau_max, Integrator integrator);

// Closed-form parameters. lambda_or_a is lambda for the Fisher-Rao form and
// the rate a for the alpha-order moduli form; both are positive.
struct ClosedFormGeodesic {
    Metrization metrization = Metrization::FisherRao;
    double lambda_or_a = 1.0;
    double mu0 = 0.0;
    double sigma0 = 1.0;
};

// Fisher-Rao geodesic with sigma'(0) = 0 and mu'(0) = sqrt(2) lambda sigma0^2:
//   sigma(tau) = 2 sigma0 e^{sigma0 lambda tau} / (1 + e^{2 sigma0 lambda tau})
//              = sigma0 sech(sigma0 lambda tau)
//   mu(tau)    = mu0 + sqrt(2) sigma0 tanh(sigma0 lambda tau)
// As tau -> infinity, sigma -> 0 and mu -> mu0 + sqrt(2) sigma0.
std::pair<double, double> closed_form_fr(const ClosedFormGeodesic& params,
                                         double tau);

// alpha-order moduli form, restricted to (mu0, sigma0) = (0, 1)
// (std::domain_error otherwise):
//   mu~(tau) = (sqrt(6)/2) (1 - 1/w),  sigma~(tau) = 1/w,
//   w = sqrt(1 + k tau),  k = 4 a / sqrt(6).
// sigma~ decays as tau^{-1/2}; mu~ -> sqrt(6)/2. These are the moduli of a
// solution whose mean evolves along the imaginary axis; see residual_check.
std::pair<double, double> closed_form_alpha_moduli(
    const ClosedFormGeodesic& params, double tau);

using Trajectory = std::function<std::pair<double, double>(double)>;

// Maximum absolute residual of the governing ODE system along the trajectory,
// with derivatives taken by central differences (step 1e-4) on a 512-point
// grid over tau in [1e-4, 5]. For Metrization::AlphaOrder the trajectory is
// interpreted as the moduli of a mean moving along the imaginary axis, so the
// squared mean-velocity coupling enters the sigma equation with reversed sign
// (the squared unit phase is -1):
//   r_mu    = mu'' - (3/sigma) mu' sigma'
//   r_sigma = sigma'' - mu'^2/sigma - 3 sigma'^2/(2 sigma)
double residual_check(Metrization m, const Trajectory& trajectory);

// Ratio of the mean-velocities of the two canonical closed forms at tau_max:
// Fisher-Rao with lambda = 1/sqrt(2) (induced by initial conditions
// (0, 1, 1, 0)) over the alpha moduli form with a = 1. Velocities are central
// differences with the given step, evaluated through exact difference
// identities so the quotient survives cancellation at large tau. The ratio
// decays to 0 (exponential vs tau^{-3/2} decay); asymptotic statements need
// tau_max of a few tens.
double convergence_rate_ratio(double tau_max, double step = 1e-4);

}  // namespace infogeo
