#include "infogeo/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "infogeo/quadrature.hpp"

namespace infogeo {

double det(const MetricTensor2& g) {
    return g.g11 * g.g22 - g.g12 * g.g12;
}

PhiKernel phi1_kernel() {
    return {[](double p) { return 1.0 / p; }, "phi1"};
}

PhiKernel phi2_kernel() {
    return {[](double) { return 2.0; }, "phi2"};
}

namespace {

struct Components {
    double g11, g12, g22;
};

Components quadrature_pass(const PhiKernel& kernel, const ParameterPoint& theta,
                           double half_width, int n) {
    const auto rule = gauss_legendre(n);
    const double a = theta.mu - half_width * theta.sigma;
    const double b = theta.mu + half_width * theta.sigma;
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    Components c{0.0, 0.0, 0.0};
    for (const auto& node : rule) {
        const double x = mid + hw * node.x;
        const double p = density(theta, x);
        const auto dp = density_gradient(theta, x);
        const double k = node.weight * kernel.second_derivative(p);
        c.g11 += k * dp.dp_dmu * dp.dp_dmu;
        c.g12 += k * dp.dp_dmu * dp.dp_dsigma;
        c.g22 += k * dp.dp_dsigma * dp.dp_dsigma;
    }
    c.g11 *= hw;
    c.g12 *= hw;
    c.g22 *= hw;
    return c;
}

}  // namespace

MetricTensor2 phi_metric(const PhiKernel& kernel, const ParameterPoint& theta,
                         const MicrospaceGrid& grid) {
    require_valid(theta);
    require_valid(grid);
    if (!kernel.second_derivative)
        throw std::domain_error("phi kernel has no second derivative");

    const Components coarse =
        quadrature_pass(kernel, theta, grid.half_width_sigmas, grid.nodes);
    const Components fine =
        quadrature_pass(kernel, theta, grid.half_width_sigmas, 2 * grid.nodes);

    // Relative change under node doubling, with the off-diagonal component
    // measured against the diagonal scale (its exact value is 0 here).
    const double scale =
        1e-3 * (std::abs(fine.g11) + std::abs(fine.g22));
    const auto converged = [scale](double was, double now) {
        const double denom = std::max(std::abs(now), scale);
        return std::abs(now - was) <= 1e-9 * denom;
    };
    if (!converged(coarse.g11, fine.g11) || !converged(coarse.g12, fine.g12) ||
        !converged(coarse.g22, fine.g22))
        throw numeric_error("phi_metric quadrature did not converge under node doubling (kernel " +
                            kernel.label + ")");
    if (!(fine.g11 > 0.0) || !(fine.g11 * fine.g22 - fine.g12 * fine.g12 > 0.0))
        throw numeric_error("phi_metric result is not positive definite (kernel " +
                            kernel.label + ")");
    return {fine.g11, fine.g12, fine.g22, Metrization::PhiGeneric, theta};
}

MetricTensor2 fisher_rao_metric(const ParameterPoint& theta) {
    require_valid(theta);
    const double s2 = theta.sigma * theta.sigma;
    return {1.0 / s2, 0.0, 2.0 / s2, Metrization::FisherRao, theta};
}

MetricTensor2 alpha_metric(const ParameterPoint& theta) {
    require_valid(theta);
    const double s3 = theta.sigma * theta.sigma * theta.sigma;
    const double root_pi = std::sqrt(M_PI);
    return {1.0 / (4.0 * root_pi * s3), 0.0, 3.0 / (8.0 * root_pi * s3),
            Metrization::AlphaOrder, theta};
}

MetricTensor2 fisher_from_kl_hessian(const ParameterPoint& theta, double step) {
    require_valid(theta);
    if (!(step >= 1e-6 && step <= 1e-2))
        throw std::domain_error("hessian step must lie in [1e-6, 1e-2]");

    const double h = step;
    const auto s = [&theta](double dmu, double dsigma) {
        return relative_entropy({theta.mu + dmu, theta.sigma + dsigma}, theta);
    };
    // S(theta, theta) = 0, so the diagonal stencils drop the center term.
    const double g11 = -(s(h, 0.0) + s(-h, 0.0)) / (h * h);
    const double g22 = -(s(0.0, h) + s(0.0, -h)) / (h * h);
    const double g12 =
        -(s(h, h) - s(h, -h) - s(-h, h) + s(-h, -h)) / (4.0 * h * h);
    return {g11, g12, g22, Metrization::FisherRao, theta};
}

MetricTensor2 inverse_metric(const MetricTensor2& g) {
    const double d = det(g);
    if (!(g.g11 > 0.0) || !(d > 0.0))
        throw std::domain_error("metric must be positive definite to invert");
    // + 0.0 normalizes the -0 arising from exactly diagonal inputs.
    return {g.g22 / d, -g.g12 / d + 0.0, g.g11 / d, g.metrization, g.at};
}

}  // namespace infogeo
