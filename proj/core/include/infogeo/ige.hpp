#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "infogeo/metrics.hpp"

namespace infogeo {

enum class GrowthClass { Linear, Logarithmic, Undetermined };

struct IgePoint {
    double tau;
    double volume;      // Fisher volume of the rectangle spanned up to tau
    double avg_volume;  // (1/tau) * integral_0^tau volume(t) dt
    double ige;         // log(avg_volume); NaN where avg_volume is zero
};

struct FitStats {
    double slope = 0.0;
    double r_squared = 0.0;
};

struct IgeCurve {
    std::vector<IgePoint> points;  // tau strictly increasing
    Metrization metrization = Metrization::FisherRao;
    GrowthClass growth_class = GrowthClass::Undetermined;
    FitStats fit_stats;  // of the winning fit (slope in its own abscissa)
};

// Moduli trajectory tau -> (mu~, sigma~).
using ModuliPath = std::function<std::pair<double, double>(double)>;

// Fisher volume of the axis-aligned rectangle between the two corners,
// orientation-normalized to [min, max] per coordinate (volumes are unsigned).
// Exact antiderivatives of the diagonal Fisher densities:
//   Fisher-Rao:  sqrt(det g) = sqrt(2)/sigma^2
//   alpha-order: sqrt(det g) = sqrt(3/(32 pi))/sigma^3
// Throws std::domain_error for non-positive sigma bounds or PhiGeneric.
double parameter_volume(Metrization m, std::pair<double, double> theta_from,
                        std::pair<double, double> theta_to);

// Volume, running time-average and IGE = log(average) along the path over the
// given strictly increasing grid (entries >= 0). The average always starts at
// tau = 0; a zero-volume sample there is prepended internally when the grid
// does not include it. The time average is a composite trapezoid with fixed
// summation order; the inner rectangle volumes are exact antiderivatives.
// growth_class is fitted per classify_growth when the last decade of the grid
// holds at least 20 defined samples, else Undetermined.
IgeCurve ige_curve(Metrization m, const ModuliPath& path,
                   const std::vector<double>& tau_grid);

// Closed-form time-averaged volume along the Fisher-Rao moduli path with rate
// lambda, evaluated in its five-term form:
//   (e^{lt}/(lt)) [e^{-2lt} - 2 e^{-lt} log(1 + e^{2lt}) + 2 lt e^{-lt} + 1]
//   - (2/(lt)) [1 - log 2],  lt = lambda tau.
// Grows like e^{lt}/lt; overflows for lt beyond ~700. tau = 0 is a domain
// error (1/tau singularity).
double igc_closed_form_fr(double lambda, double tau);

// Closed-form time-averaged volume along the alpha moduli path with rate a,
// evaluated term by term as
//   1/(8 sqrt(pi) W) + sqrt(6) a tau / (16 sqrt(pi))
//   + sqrt(6) / (16 sqrt(pi) a W tau) - sqrt(6) a tau / (12 sqrt(pi) W)
//   - sqrt(6) / (16 sqrt(pi) a tau),  W = sqrt(2^{3/2} a tau / sqrt(3) + 1).
// Grows linearly in tau. tau = 0 is a domain error.
double igc_closed_form_alpha(double a, double tau);

// Least-squares fit of IGE against tau and against log tau over the last
// decade of the curve. Linear when the tau-fit wins with r^2 >= 0.999,
// half-window slopes agreeing within 10% and |slope| >= 1e-6; Logarithmic
// symmetrically; Undetermined otherwise. Throws std::domain_error when the
// window holds fewer than 20 defined samples. stats, when non-null, receives
// the winning fit (or the tau-fit when undetermined).
GrowthClass classify_growth(const IgeCurve& curve, FitStats* stats = nullptr);

}  // namespace infogeo
