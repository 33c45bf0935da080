#pragma once

#include <functional>
#include <vector>

namespace infogeo {

struct QuadratureNode {
    double x;       // abscissa in [-1, 1]
    double weight;
};

// n-node Gauss-Legendre rule on [-1, 1]. Nodes are found by Newton iteration
// on the Legendre recurrence; exact to machine precision for polynomial
// degree <= 2n-1. Deterministic for a given n.
std::vector<QuadratureNode> gauss_legendre(int n);

// Integral of f over [a, b] with an n-node Gauss-Legendre rule.
double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double a, double b, int n);

}  // namespace infogeo
