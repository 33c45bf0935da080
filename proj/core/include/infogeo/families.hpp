#pragma once

namespace infogeo {

// Macrostate theta = (theta^1, theta^2) = (mu, sigma) of the one-dimensional
// Gaussian family. sigma is strictly positive; values at or below sigma_floor
// are rejected rather than clamped so the 1/sigma^2 and 1/sigma^3 metric
// singularities stay visible to callers.
struct ParameterPoint {
    double mu = 0.0;
    double sigma = 1.0;
};

inline constexpr double sigma_floor = 1e-12;

// Throws std::domain_error when the point lies outside the manifold
// (non-finite fields, or sigma <= sigma_floor).
void require_valid(const ParameterPoint& theta);

// Truncation and resolution for microspace quadrature. The sample space is
// all of R; integrands are cut off at mu +/- half_width_sigmas * sigma.
// Gaussian tails beyond the default width contribute < 1e-22.
struct MicrospaceGrid {
    double half_width_sigmas = 10.0;
    int nodes = 256;
};

// Throws std::domain_error unless half_width_sigmas >= 8 and nodes >= 64.
void require_valid(const MicrospaceGrid& grid);

// p(x|theta) = exp(-(x-mu)^2 / (2 sigma^2)) / sqrt(2 pi sigma^2).
double density(const ParameterPoint& theta, double x);

struct DensityGradient {
    double dp_dmu;     // p * (x-mu)/sigma^2
    double dp_dsigma;  // p * ((x-mu)^2/sigma^3 - 1/sigma)
};

DensityGradient density_gradient(const ParameterPoint& theta, double x);

// Negative Kullback-Leibler divergence
//   -KL(p(.|theta_prime) || p(.|theta)) <= 0, zero iff the points coincide.
// Closed Gaussian form; a quadrature version lives in the tests as an oracle.
double relative_entropy(const ParameterPoint& theta_prime,
                        const ParameterPoint& theta);

}  // namespace infogeo
