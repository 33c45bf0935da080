#include "infogeo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace infogeo {

std::vector<QuadratureNode> gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: node count must be >= 1");
    std::vector<QuadratureNode> rule(n);
    const int half = (n + 1) / 2;  // nodes come in +/- pairs
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
            double p0 = 1.0, p1 = x;
            for (int j = 1; j < n; ++j) {
                const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[i] = {-x, w};           // roots found in descending order
        rule[n - 1 - i] = {x, w};    // mirror node (same node when n is odd)
    }
    return rule;
}

double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double a, double b, int n) {
    const auto rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (const auto& node : rule)
        sum += node.weight * f(mid + halfwidth * node.x);
    return halfwidth * sum;
}

}  // namespace infogeo
