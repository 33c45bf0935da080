#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "infogeo/families.hpp"

namespace infogeo {

enum class Metrization { FisherRao, AlphaOrder, PhiGeneric };

// Thrown when a quadrature result fails its node-doubling convergence test.
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Symmetric positive-definite 2x2 metric at a point, indices (mu, sigma).
// For inverse_metric results the stored components are contravariant.
struct MetricTensor2 {
    double g11 = 1.0;
    double g12 = 0.0;
    double g22 = 1.0;
    Metrization metrization = Metrization::PhiGeneric;
    ParameterPoint at;
};

double det(const MetricTensor2& g);

// phi''(p) of a convex entropy kernel; must be positive on (0, 1] so the
// induced quadratic form is positive definite.
struct PhiKernel {
    std::function<double(double)> second_derivative;
    std::string label;
};

PhiKernel phi1_kernel();  // phi''(p) = 1/p   (Shannon case)
PhiKernel phi2_kernel();  // phi''(p) = 2     (quadratic case)

// g_ij = integral of phi''(p) (dp/dtheta^i)(dp/dtheta^j) dx by Gauss-Legendre
// quadrature on the truncated microspace. A component is accepted when
// doubling the node count changes it by < 1e-9 relative; otherwise throws
// numeric_error. The alpha-order metric equals half of the phi2 result.
MetricTensor2 phi_metric(const PhiKernel& kernel, const ParameterPoint& theta,
                         const MicrospaceGrid& grid = {});

// Closed form (1/sigma^2) diag(1, 2).
MetricTensor2 fisher_rao_metric(const ParameterPoint& theta);

// Closed form (1/sigma^3) diag(1/(4 sqrt(pi)), 3/(8 sqrt(pi))).
MetricTensor2 alpha_metric(const ParameterPoint& theta);

// Central-difference Hessian of -relative_entropy in the first argument at
// coincidence; agrees with fisher_rao_metric to O(step^2).
// step must lie in [1e-6, 1e-2].
MetricTensor2 fisher_from_kl_hessian(const ParameterPoint& theta,
                                     double step = 1e-3);

// Contravariant components; the product with g is the identity to rounding.
// Throws std::domain_error when g is not positive definite.
MetricTensor2 inverse_metric(const MetricTensor2& g);

}  // namespace infogeo
