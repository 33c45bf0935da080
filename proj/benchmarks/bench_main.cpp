#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include <infogeo/geodesics.hpp>
#include <infogeo/geometry.hpp>
#include <infogeo/ige.hpp>
#include <infogeo/metrics.hpp>

namespace {

using namespace infogeo;

void BM_fisher_rao_metric(benchmark::State& state) {
    const ParameterPoint theta{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(fisher_rao_metric(theta));
}
BENCHMARK(BM_fisher_rao_metric);

void BM_phi_metric_shannon(benchmark::State& state) {
    const PhiKernel kernel = phi1_kernel();
    const ParameterPoint theta{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(phi_metric(kernel, theta));
}
BENCHMARK(BM_phi_metric_shannon);

void BM_phi_metric_quadratic(benchmark::State& state) {
    const PhiKernel kernel = phi2_kernel();
    const ParameterPoint theta{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(phi_metric(kernel, theta));
}
BENCHMARK(BM_phi_metric_quadratic);

void BM_fisher_from_kl_hessian(benchmark::State& state) {
    const ParameterPoint theta{0.3, 1.7};
    for (auto _ : state)
        benchmark::DoNotOptimize(fisher_from_kl_hessian(theta, 1e-3));
}
BENCHMARK(BM_fisher_from_kl_hessian);

void BM_curvature_report(benchmark::State& state) {
    const ParameterPoint theta{0.3, 1.7};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            curvature_report(Metrization::AlphaOrder, theta));
}
BENCHMARK(BM_curvature_report);

void BM_integrate(benchmark::State& state) {
    const Integrator integrator =
        state.range(0) == 0 ? Integrator::ForwardEuler : Integrator::RK4;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(Metrization::FisherRao, {}, 1e-3,
                                           10.0, integrator));
}
BENCHMARK(BM_integrate)->Arg(0)->Arg(1);

void BM_ige_curve_fr(benchmark::State& state) {
    const ClosedFormGeodesic params{Metrization::FisherRao, 1.0, 0.0, 1.0};
    const ModuliPath path = [params](double t) {
        return closed_form_fr(params, t);
    };
    std::vector<double> grid(2001);
    for (int i = 0; i < 2001; ++i) grid[i] = 50.0 * i / 2000;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ige_curve(Metrization::FisherRao, path, grid));
}
BENCHMARK(BM_ige_curve_fr);

void BM_igc_closed_form_alpha(benchmark::State& state) {
    double tau = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(igc_closed_form_alpha(1.0, tau));
        tau += 1.0;
    }
}
BENCHMARK(BM_igc_closed_form_alpha);

}  // namespace

BENCHMARK_MAIN();
