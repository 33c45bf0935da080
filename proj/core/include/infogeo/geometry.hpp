#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infogeo/families.hpp"
#include "infogeo/metrics.hpp"

namespace infogeo {

// Tensor indices are zero-based throughout: 0 <-> mu, 1 <-> sigma.

// Connection coefficients Gamma^k_ij, upper index first, symmetric in (i, j).
struct Christoffel2 {
    double gamma[2][2][2] = {};
};

// Riemann components R^l_ijk in the convention
//   R^l_ijk = d_j Gamma^l_ki - d_k Gamma^l_ji
//           + Gamma^l_jm Gamma^m_ki - Gamma^l_km Gamma^m_ji,
// antisymmetric in the last two indices.
struct Riemann2 {
    double r[2][2][2][2] = {};
};

struct Ricci2 {
    double r[2][2] = {};  // R_ij = sum_m R^m_imj; symmetric
};

struct CurvatureReport {
    Riemann2 riemann;
    Ricci2 ricci;
    double scalar = 0.0;        // g^ij R_ij
    double sectional = 0.0;     // R_1212 / det g (first index lowered)
    double weyl_max_abs = 0.0;  // max |W_lijk|
    ParameterPoint at;
    Metrization metrization = Metrization::FisherRao;
};

// Residual bound for the symmetry checks below. Closed-form inputs leave only
// rounding noise, so the bound is tight.
inline constexpr double symmetry_tolerance = 1e-9;

struct SymmetryVerdict {
    bool isotropic = false;
    bool homogeneous = false;
    bool maximally_symmetric = false;  // isotropic AND homogeneous
    std::vector<std::pair<std::string, double>> evidence;  // (check, residual)
};

// All operations below accept Metrization::FisherRao or ::AlphaOrder and
// throw std::domain_error for PhiGeneric (no closed-form geometry there).

Christoffel2 christoffel(Metrization m, const ParameterPoint& theta);
Riemann2 riemann(Metrization m, const ParameterPoint& theta);
Ricci2 ricci(Metrization m, const ParameterPoint& theta);
double scalar_curvature(Metrization m, const ParameterPoint& theta);
double sectional_curvature(Metrization m, const ParameterPoint& theta);

// Maximum absolute component of the anisotropy tensor
//   W^l_ijk = R^l_ijk - (R_ik delta^l_j - R_ij delta^l_k) / (N - 1)
// lowered with the covariant diagonal component, W_lijk = g_ll W^l_ijk.
// Identically zero for both metrizations (isotropy).
double weyl_anisotropy(Metrization m, const ParameterPoint& theta);

CurvatureReport curvature_report(Metrization m, const ParameterPoint& theta);

// Probes must number at least 5 (std::domain_error otherwise); distinct sigma
// values are recommended, since homogeneity is judged as constancy of the
// scalar curvature across the probes. Isotropy holds when, at every probe,
// Ricci is proportional to the metric, the lowered Riemann tensor has the
// constant-curvature form R_lijk = R (g_ik g_jl - g_ij g_kl) / (N (N-1)),
// and the anisotropy tensor vanishes, all within symmetry_tolerance.
SymmetryVerdict classify_symmetry(Metrization m,
                                  const std::vector<ParameterPoint>& probes);

}  // namespace infogeo
