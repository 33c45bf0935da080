#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <infogeo/metrics.hpp>

using namespace infogeo;

namespace {

void check_metric_close(const MetricTensor2& got, const MetricTensor2& want,
                        double rel) {
    const double off_scale = std::sqrt(want.g11 * want.g22);
    CHECK(std::abs(got.g11 - want.g11) <= rel * std::abs(want.g11));
    CHECK(std::abs(got.g12 - want.g12) <= rel * off_scale);
    CHECK(std::abs(got.g22 - want.g22) <= rel * std::abs(want.g22));
}

}  // namespace

TEST_CASE("closed-form metrics take their golden values at (0, 1)") {
    const MetricTensor2 fr = fisher_rao_metric({0.0, 1.0});
    CHECK(fr.g11 == 1.0);
    CHECK(fr.g12 == 0.0);
    CHECK(fr.g22 == 2.0);
    CHECK(fr.metrization == Metrization::FisherRao);

    const MetricTensor2 al = alpha_metric({0.0, 1.0});
    CHECK(al.g11 == doctest::Approx(0.25 / std::sqrt(M_PI)).epsilon(1e-16));
    CHECK(al.g12 == 0.0);
    CHECK(al.g22 == doctest::Approx(0.375 / std::sqrt(M_PI)).epsilon(1e-16));
    CHECK(al.metrization == Metrization::AlphaOrder);
    CHECK(al.at.sigma == 1.0);
}

TEST_CASE("closed-form metrics obey their sigma scaling laws") {
    std::mt19937 rng(7041);
    std::uniform_real_distribution<double> sigma_draw(0.2, 8.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double sigma = sigma_draw(rng);
        const MetricTensor2 fr = fisher_rao_metric({0.4, sigma});
        const double s2 = sigma * sigma;
        CHECK(fr.g11 == doctest::Approx(1.0 / s2).epsilon(1e-15));
        CHECK(fr.g22 == doctest::Approx(2.0 / s2).epsilon(1e-15));

        const MetricTensor2 al = alpha_metric({-1.2, sigma});
        const MetricTensor2 al_unit = alpha_metric({-1.2, 1.0});
        const double s3 = s2 * sigma;
        CHECK(al.g11 == doctest::Approx(al_unit.g11 / s3).epsilon(1e-15));
        CHECK(al.g22 == doctest::Approx(al_unit.g22 / s3).epsilon(1e-15));
        // Neither metric depends on mu.
        CHECK(fisher_rao_metric({3.0, sigma}).g11 == fr.g11);
        CHECK(alpha_metric({3.0, sigma}).g22 == al.g22);
    }
}

TEST_CASE("quadrature metrics agree with the closed forms") {
    std::mt19937 rng(50923);
    std::uniform_real_distribution<double> mu_draw(-2.0, 2.0);
    std::uniform_real_distribution<double> sigma_draw(0.5, 4.0);
    const PhiKernel phi1 = phi1_kernel();
    const PhiKernel phi2 = phi2_kernel();
    for (int trial = 0; trial < 8; ++trial) {
        const ParameterPoint theta{mu_draw(rng), sigma_draw(rng)};
        check_metric_close(phi_metric(phi1, theta), fisher_rao_metric(theta),
                           1e-9);
        MetricTensor2 half_phi2 = phi_metric(phi2, theta);
        half_phi2.g11 *= 0.5;
        half_phi2.g12 *= 0.5;
        half_phi2.g22 *= 0.5;
        check_metric_close(half_phi2, alpha_metric(theta), 1e-9);
    }
}

TEST_CASE("quadrature metric honors a custom microspace grid") {
    const ParameterPoint theta{0.7, 1.3};
    const MetricTensor2 base = phi_metric(phi1_kernel(), theta);
    const MetricTensor2 custom =
        phi_metric(phi1_kernel(), theta, MicrospaceGrid{12.0, 384});
    check_metric_close(custom, base, 1e-9);
    CHECK_THROWS_AS(phi_metric(phi1_kernel(), theta, MicrospaceGrid{4.0, 256}),
                    std::domain_error);
    CHECK_THROWS_AS(phi_metric(phi1_kernel(), theta, MicrospaceGrid{10.0, 32}),
                    std::domain_error);
}

TEST_CASE("non-converging kernels raise numeric_error") {
    // phi''(p) oscillating on the scale of p itself defeats node doubling.
    const PhiKernel wild{
        [](double p) { return 1.0 + std::sin(5000.0 * p) * std::sin(5000.0 * p); },
        "oscillatory"};
    CHECK_THROWS_AS(phi_metric(wild, {0.0, 1.0}), numeric_error);
    // A kernel without a callable is rejected up front.
    CHECK_THROWS_AS(phi_metric(PhiKernel{nullptr, "empty"}, {0.0, 1.0}),
                    std::domain_error);
}

TEST_CASE("the KL Hessian route reproduces the Fisher-Rao metric") {
    for (double mu : {-2.0, 0.0, 2.0})
        for (double sigma : {0.5, 1.0, 2.25, 4.0}) {
            const ParameterPoint theta{mu, sigma};
            check_metric_close(fisher_from_kl_hessian(theta, 1e-3),
                               fisher_rao_metric(theta), 1e-4);
        }
    CHECK_THROWS_WITH_AS(fisher_from_kl_hessian({0.0, 1.0}, 1e-7),
                         "hessian step must lie in [1e-6, 1e-2]",
                         std::domain_error);
    CHECK_THROWS_AS(fisher_from_kl_hessian({0.0, 1.0}, 0.1), std::domain_error);
}

TEST_CASE("metric inversion is exact for diagonal inputs") {
    std::mt19937 rng(1113);
    std::uniform_real_distribution<double> sigma_draw(0.3, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const ParameterPoint theta{0.0, sigma_draw(rng)};
        const MetricTensor2 g = fisher_rao_metric(theta);
        const MetricTensor2 inv = inverse_metric(g);
        CHECK(g.g11 * inv.g11 + g.g12 * inv.g12 ==
              doctest::Approx(1.0).epsilon(1e-15));
        CHECK(g.g12 * inv.g12 + g.g22 * inv.g22 ==
              doctest::Approx(1.0).epsilon(1e-15));
        CHECK(g.g11 * inv.g12 + g.g12 * inv.g22 ==
              doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
        CHECK(inv.metrization == g.metrization);
    }
    CHECK(det(fisher_rao_metric({0.0, 1.0})) == 2.0);

    MetricTensor2 bad;
    bad.g11 = 1.0;
    bad.g12 = 2.0;  // det = 1*1 - 4 < 0
    bad.g22 = 1.0;
    CHECK_THROWS_WITH_AS(inverse_metric(bad),
                         "metric must be positive definite to invert",
                         std::domain_error);
}

TEST_CASE("general phi kernels yield positive definite metrics") {
    // A smooth non-reference kernel: phi''(p) = 1/p + 3.
    const PhiKernel mixed{[](double p) { return 1.0 / p + 3.0; }, "mixed"};
    const MetricTensor2 g = phi_metric(mixed, {0.5, 1.5});
    CHECK(g.g11 > 0.0);
    CHECK(det(g) > 0.0);
    CHECK(g.metrization == Metrization::PhiGeneric);
    // Superposition: the mixed metric is the phi1 metric plus 1.5x the phi2
    // metric (integrands add linearly).
    const MetricTensor2 a = phi_metric(phi1_kernel(), {0.5, 1.5});
    const MetricTensor2 b = phi_metric(phi2_kernel(), {0.5, 1.5});
    CHECK(g.g11 == doctest::Approx(a.g11 + 1.5 * b.g11).epsilon(1e-12));
    CHECK(g.g22 == doctest::Approx(a.g22 + 1.5 * b.g22).epsilon(1e-12));
}
