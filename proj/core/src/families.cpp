#include "infogeo/families.hpp"

#include <cmath>
#include <stdexcept>

namespace infogeo {

void require_valid(const ParameterPoint& theta) {
    if (!std::isfinite(theta.mu))
        throw std::domain_error("mu must be finite");
    if (!std::isfinite(theta.sigma))
        throw std::domain_error("sigma must be finite");
    if (theta.sigma <= sigma_floor)
        throw std::domain_error("sigma must be positive (floor 1e-12)");
}

void require_valid(const MicrospaceGrid& grid) {
    if (!std::isfinite(grid.half_width_sigmas) || grid.half_width_sigmas < 8.0)
        throw std::domain_error("microspace half width must be >= 8 sigma");
    if (grid.nodes < 64)
        throw std::domain_error("microspace grid needs >= 64 nodes");
}

double density(const ParameterPoint& theta, double x) {
    require_valid(theta);
    const double z = (x - theta.mu) / theta.sigma;
    return std::exp(-0.5 * z * z) / (theta.sigma * std::sqrt(2.0 * M_PI));
}

DensityGradient density_gradient(const ParameterPoint& theta, double x) {
    require_valid(theta);
    const double p = density(theta, x);
    const double d = x - theta.mu;
    const double s2 = theta.sigma * theta.sigma;
    return {p * d / s2, p * (d * d / (s2 * theta.sigma) - 1.0 / theta.sigma)};
}

double relative_entropy(const ParameterPoint& theta_prime,
                        const ParameterPoint& theta) {
    require_valid(theta_prime);
    require_valid(theta);
    const double dmu = theta_prime.mu - theta.mu;
    const double s2 = theta.sigma * theta.sigma;
    const double sp2 = theta_prime.sigma * theta_prime.sigma;
    const double kl = std::log(theta.sigma / theta_prime.sigma) +
                      (sp2 + dmu * dmu) / (2.0 * s2) - 0.5;
    return -kl;
}

}  // namespace infogeo
