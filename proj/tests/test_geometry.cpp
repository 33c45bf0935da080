#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <infogeo/geometry.hpp>
#include <infogeo/metrics.hpp>

#include "support/oracles.hpp"

using namespace infogeo;

namespace {

std::vector<ParameterPoint> random_points(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> mu_draw(-3.0, 3.0);
    std::uniform_real_distribution<double> sigma_draw(0.5, 4.0);
    std::vector<ParameterPoint> points;
    for (int i = 0; i < count; ++i)
        points.push_back({mu_draw(rng), sigma_draw(rng)});
    return points;
}

const Metrization both[] = {Metrization::FisherRao, Metrization::AlphaOrder};

}  // namespace

TEST_CASE("christoffel symbols match the metric-derivative route") {
    for (Metrization m : both)
        for (const auto& theta : random_points(20, 90210)) {
            const Christoffel2 closed = christoffel(m, theta);
            const Christoffel2 fd = infogeo::testing::fd_christoffel(m, theta);
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        CHECK(std::abs(closed.gamma[k][i][j] -
                                       fd.gamma[k][i][j]) <= 1e-6);
        }
}

TEST_CASE("christoffel symbols are symmetric in the lower indices") {
    for (Metrization m : both)
        for (const auto& theta : random_points(10, 777)) {
            const Christoffel2 c = christoffel(m, theta);
            for (int k = 0; k < 2; ++k)
                CHECK(c.gamma[k][0][1] == c.gamma[k][1][0]);
        }
}

TEST_CASE("riemann tensor matches the christoffel-derivative route") {
    for (Metrization m : both)
        for (const auto& theta : random_points(20, 5150)) {
            const Riemann2 closed = riemann(m, theta);
            const Riemann2 fd = infogeo::testing::fd_riemann(m, theta);
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k)
                            CHECK(std::abs(closed.r[l][i][j][k] -
                                           fd.r[l][i][j][k]) <= 1e-5);
        }
}

TEST_CASE("riemann tensor is antisymmetric in its last two indices") {
    for (Metrization m : both)
        for (const auto& theta : random_points(10, 31415)) {
            const Riemann2 rm = riemann(m, theta);
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 2; ++i) {
                    CHECK(rm.r[l][i][0][0] == 0.0);
                    CHECK(rm.r[l][i][1][1] == 0.0);
                    CHECK(rm.r[l][i][0][1] == -rm.r[l][i][1][0]);
                }
        }
}

TEST_CASE("lowered riemann tensor has the pair symmetries") {
    for (Metrization m : both)
        for (const auto& theta : random_points(10, 2718)) {
            const Riemann2 rm = riemann(m, theta);
            const MetricTensor2 gt = m == Metrization::FisherRao
                                         ? fisher_rao_metric(theta)
                                         : alpha_metric(theta);
            const double g[2][2] = {{gt.g11, gt.g12}, {gt.g12, gt.g22}};
            double low[2][2][2][2];
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k)
                            low[l][i][j][k] = g[l][0] * rm.r[0][i][j][k] +
                                              g[l][1] * rm.r[1][i][j][k];
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k) {
                            // Antisymmetry in the first pair.
                            CHECK(low[l][i][j][k] ==
                                  doctest::Approx(-low[i][l][j][k])
                                      .scale(std::abs(low[l][i][j][k]) + 1e-30)
                                      .epsilon(1e-13));
                            // Exchange symmetry of the pairs.
                            CHECK(low[l][i][j][k] ==
                                  doctest::Approx(low[j][k][l][i])
                                      .scale(std::abs(low[l][i][j][k]) + 1e-30)
                                      .epsilon(1e-13));
                        }
        }
}

TEST_CASE("ricci is the documented contraction of riemann") {
    for (Metrization m : both)
        for (const auto& theta : random_points(10, 161803)) {
            const Riemann2 rm = riemann(m, theta);
            const Ricci2 rc = ricci(m, theta);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(rc.r[i][j] ==
                          rm.r[0][i][0][j] + rm.r[1][i][1][j]);
        }
}

TEST_CASE("scalar and sectional curvature take their golden values") {
    const double root_pi = std::sqrt(M_PI);
    for (double sigma : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const ParameterPoint theta{0.0, sigma};
        CHECK(scalar_curvature(Metrization::FisherRao, theta) ==
              doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(sectional_curvature(Metrization::FisherRao, theta) ==
              doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(scalar_curvature(Metrization::AlphaOrder, theta) ==
              doctest::Approx(-8.0 * root_pi * sigma).epsilon(1e-13));
        CHECK(sectional_curvature(Metrization::AlphaOrder, theta) ==
              doctest::Approx(-4.0 * root_pi * sigma).epsilon(1e-13));
    }
    // In two dimensions the scalar is twice the sectional curvature.
    for (Metrization m : both)
        for (const auto& theta : random_points(10, 424242))
            CHECK(scalar_curvature(m, theta) ==
                  doctest::Approx(2.0 * sectional_curvature(m, theta))
                      .epsilon(1e-13));
}

TEST_CASE("curvature does not depend on mu") {
    for (Metrization m : both)
        for (double sigma : {0.5, 1.7, 3.0}) {
            const double at_zero = scalar_curvature(m, {0.0, sigma});
            const double shifted = scalar_curvature(m, {57.0, sigma});
            CHECK(at_zero == doctest::Approx(shifted).epsilon(1e-14));
        }
}

TEST_CASE("the anisotropy tensor vanishes identically") {
    for (Metrization m : both)
        for (const auto& theta : random_points(20, 606)) {
            CHECK(weyl_anisotropy(m, theta) <= 1e-15);
        }
}

TEST_CASE("curvature reports assemble the pointwise fields") {
    const ParameterPoint theta{0.3, 2.0};
    const CurvatureReport report =
        curvature_report(Metrization::AlphaOrder, theta);
    CHECK(report.metrization == Metrization::AlphaOrder);
    CHECK(report.at.sigma == 2.0);
    CHECK(report.scalar ==
          doctest::Approx(-16.0 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(report.sectional == doctest::Approx(0.5 * report.scalar).epsilon(1e-13));
    CHECK(report.weyl_max_abs <= 1e-15);
    CHECK(report.ricci.r[0][1] == 0.0);
}

TEST_CASE("symmetry classification separates the two geometries") {
    std::vector<ParameterPoint> probes;
    for (double sigma : {0.5, 1.0, 2.0, 4.0, 8.0}) probes.push_back({0.0, sigma});

    const SymmetryVerdict fr = classify_symmetry(Metrization::FisherRao, probes);
    CHECK(fr.isotropic);
    CHECK(fr.homogeneous);
    CHECK(fr.maximally_symmetric);

    const SymmetryVerdict al = classify_symmetry(Metrization::AlphaOrder, probes);
    CHECK(al.isotropic);
    CHECK_FALSE(al.homogeneous);
    CHECK_FALSE(al.maximally_symmetric);

    // Evidence carries the four residual channels with tiny isotropy values.
    REQUIRE(al.evidence.size() == 4);
    CHECK(al.evidence[0].first == "ricci_isotropy");
    CHECK(al.evidence[1].first == "riemann_isotropy");
    CHECK(al.evidence[2].first == "weyl_anisotropy");
    CHECK(al.evidence[3].first == "scalar_constancy");
    CHECK(al.evidence[0].second <= symmetry_tolerance);
    CHECK(al.evidence[3].second > symmetry_tolerance);  // sigma-dependent scalar
}

TEST_CASE("geometry operations reject unsupported inputs") {
    CHECK_THROWS_AS(christoffel(Metrization::PhiGeneric, {0.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(scalar_curvature(Metrization::PhiGeneric, {0.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(riemann(Metrization::FisherRao, {0.0, -1.0}),
                    std::domain_error);
    const std::vector<ParameterPoint> four = {
        {0.0, 0.5}, {0.0, 1.0}, {0.0, 2.0}, {0.0, 4.0}};
    CHECK_THROWS_WITH_AS(classify_symmetry(Metrization::FisherRao, four),
                         "classify_symmetry needs at least 5 probe points",
                         std::domain_error);
}
