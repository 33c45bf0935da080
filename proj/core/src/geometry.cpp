#include "infogeo/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace infogeo {

namespace {

void require_closed_form(Metrization m) {
    if (m != Metrization::FisherRao && m != Metrization::AlphaOrder)
        throw std::domain_error(
            "closed-form geometry needs the Fisher-Rao or alpha-order metrization");
}

MetricTensor2 metric_for(Metrization m, const ParameterPoint& theta) {
    return m == Metrization::FisherRao ? fisher_rao_metric(theta)
                                       : alpha_metric(theta);
}

void as_matrix(const MetricTensor2& g, double out[2][2]) {
    out[0][0] = g.g11;
    out[0][1] = out[1][0] = g.g12;
    out[1][1] = g.g22;
}

// Lowered Riemann components R_lijk = g_lm R^m_ijk.
void lower_riemann(const Riemann2& rm, const double g[2][2],
                   double out[2][2][2][2]) {
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    out[l][i][j][k] = g[l][0] * rm.r[0][i][j][k] +
                                      g[l][1] * rm.r[1][i][j][k];
}

}  // namespace

Christoffel2 christoffel(Metrization m, const ParameterPoint& theta) {
    require_closed_form(m);
    require_valid(theta);
    const double inv_s = 1.0 / theta.sigma;
    Christoffel2 c;
    if (m == Metrization::FisherRao) {
        c.gamma[0][0][1] = c.gamma[0][1][0] = -inv_s;
        c.gamma[1][0][0] = 0.5 * inv_s;
        c.gamma[1][1][1] = -inv_s;
    } else {
        c.gamma[0][0][1] = c.gamma[0][1][0] = -1.5 * inv_s;
        c.gamma[1][0][0] = inv_s;
        c.gamma[1][1][1] = -1.5 * inv_s;
    }
    return c;
}

Riemann2 riemann(Metrization m, const ParameterPoint& theta) {
    require_closed_form(m);
    require_valid(theta);
    const double inv_s2 = 1.0 / (theta.sigma * theta.sigma);
    Riemann2 rm;
    if (m == Metrization::FisherRao) {
        rm.r[0][1][0][1] = -inv_s2;
        rm.r[0][1][1][0] = inv_s2;
        rm.r[1][0][0][1] = 0.5 * inv_s2;
        rm.r[1][0][1][0] = -0.5 * inv_s2;
    } else {
        rm.r[0][1][0][1] = -1.5 * inv_s2;
        rm.r[0][1][1][0] = 1.5 * inv_s2;
        rm.r[1][0][0][1] = inv_s2;
        rm.r[1][0][1][0] = -inv_s2;
    }
    return rm;
}

Ricci2 ricci(Metrization m, const ParameterPoint& theta) {
    const Riemann2 rm = riemann(m, theta);
    Ricci2 rc;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rc.r[i][j] = rm.r[0][i][0][j] + rm.r[1][i][1][j];
    return rc;
}

double scalar_curvature(Metrization m, const ParameterPoint& theta) {
    const Ricci2 rc = ricci(m, theta);
    const MetricTensor2 ginv = inverse_metric(metric_for(m, theta));
    return ginv.g11 * rc.r[0][0] + 2.0 * ginv.g12 * rc.r[0][1] +
           ginv.g22 * rc.r[1][1];
}

double sectional_curvature(Metrization m, const ParameterPoint& theta) {
    const Riemann2 rm = riemann(m, theta);
    const MetricTensor2 g = metric_for(m, theta);
    const double r_1212 =
        g.g11 * rm.r[0][1][0][1] + g.g12 * rm.r[1][1][0][1];
    return r_1212 / det(g);
}

double weyl_anisotropy(Metrization m, const ParameterPoint& theta) {
    const Riemann2 rm = riemann(m, theta);
    const Ricci2 rc = ricci(m, theta);
    const MetricTensor2 g = metric_for(m, theta);
    const double g_ll[2] = {g.g11, g.g22};
    double max_abs = 0.0;
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    // N = 2, so the trace correction divides by N - 1 = 1.
                    const double upper = rm.r[l][i][j][k] -
                                         (rc.r[i][k] * (l == j ? 1.0 : 0.0) -
                                          rc.r[i][j] * (l == k ? 1.0 : 0.0));
                    max_abs = std::max(max_abs, std::abs(g_ll[l] * upper));
                }
    return max_abs;
}

CurvatureReport curvature_report(Metrization m, const ParameterPoint& theta) {
    CurvatureReport report;
    report.riemann = riemann(m, theta);
    report.ricci = ricci(m, theta);
    report.scalar = scalar_curvature(m, theta);
    report.sectional = sectional_curvature(m, theta);
    report.weyl_max_abs = weyl_anisotropy(m, theta);
    report.at = theta;
    report.metrization = m;
    return report;
}

SymmetryVerdict classify_symmetry(Metrization m,
                                  const std::vector<ParameterPoint>& probes) {
    require_closed_form(m);
    if (probes.size() < 5)
        throw std::domain_error("classify_symmetry needs at least 5 probe points");

    double ricci_res = 0.0, riemann_res = 0.0, weyl_res = 0.0, scalar_res = 0.0;
    double scalar_first = 0.0;
    bool first = true;
    for (const auto& theta : probes) {
        const MetricTensor2 gt = metric_for(m, theta);
        double g[2][2];
        as_matrix(gt, g);
        const Riemann2 rm = riemann(m, theta);
        const Ricci2 rc = ricci(m, theta);
        const double scalar = scalar_curvature(m, theta);

        // Ricci proportional to the metric: R_ij = (R/N) g_ij.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                ricci_res = std::max(
                    ricci_res, std::abs(rc.r[i][j] - 0.5 * scalar * g[i][j]));

        // Constant-curvature form of the lowered Riemann tensor:
        // R_lijk = R (g_ik g_jl - g_ij g_kl) / (N (N-1)).
        double low[2][2][2][2];
        lower_riemann(rm, g, low);
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        const double expected =
                            0.5 * scalar *
                            (g[i][k] * g[j][l] - g[i][j] * g[k][l]);
                        riemann_res = std::max(
                            riemann_res, std::abs(low[l][i][j][k] - expected));
                    }

        weyl_res = std::max(weyl_res, weyl_anisotropy(m, theta));

        if (first) {
            scalar_first = scalar;
            first = false;
        } else {
            scalar_res = std::max(scalar_res, std::abs(scalar - scalar_first));
        }
    }

    SymmetryVerdict verdict;
    verdict.isotropic = ricci_res <= symmetry_tolerance &&
                        riemann_res <= symmetry_tolerance &&
                        weyl_res <= symmetry_tolerance;
    verdict.homogeneous = scalar_res <= symmetry_tolerance;
    verdict.maximally_symmetric = verdict.isotropic && verdict.homogeneous;
    verdict.evidence = {{"ricci_isotropy", ricci_res},
                        {"riemann_isotropy", riemann_res},
                        {"weyl_anisotropy", weyl_res},
                        {"scalar_constancy", scalar_res}};
    return verdict;
}

}  // namespace infogeo
