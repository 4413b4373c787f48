#pragma once

#include <limits>

#include "rendezvous/geometry.hpp"

namespace rendezvous {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Best known symmetric-rendezvous-on-a-line ratio, used as a constant benchmark.
inline constexpr double kLineRendezvousBenchmark = 4.2574;

/// Threshold that defines effectiveness.
inline constexpr double kEffectivenessThreshold = 4.25;

/// Above this many rounds the finite-k expected time uses the regrouped form.
inline constexpr std::int64_t kRegroupedFormThreshold = 60;

// Times below are in unit-disk units unless the name says otherwise.

double expected_time(const Instance& instance, const Strategy& strategy,
                     Bounds bounds = Bounds::Checked);

/// Expected time from a round's geometry. Finite k uses
///   (1/2)^{k+1} (x^k (3d+4w+2x-4) - 2^k (3d+4w)) / (x-2),
/// unbounded uses (3d+4w) / (2(2-x)).
double expected_time_from_geometry(const DartingGeometry& g, StepCount steps);

/// Trigonometric one-round form, independent of the w/y/d/x route.
double expected_time_one_round_trig(double alpha, double beta, double gamma) noexcept;

/// Trigonometric unbounded form, independent of the w/y/d/x route.
double expected_time_unbounded_trig(double alpha, double beta, double gamma) noexcept;

/// expected_time / sin(alpha).
double competitive_ratio(const Instance& instance, const Strategy& strategy,
                         Bounds bounds = Bounds::Checked);

/// Worst-case travel (energy); kInfinity when unbounded rounds do not shrink the disk.
double energy(const Instance& instance, const Strategy& strategy, Bounds bounds = Bounds::Checked);
double energy_from_geometry(const DartingGeometry& g, StepCount steps) noexcept;

struct PerformanceReport
{
    double expected_time_alpha = 0.0;
    double competitive_ratio = 0.0;
    double energy_alpha = 0.0;  ///< may be kInfinity
    double rho = 0.0;

    /// Energy scaled to the instance where the agents start at distance 2.
    double energy_rho() const noexcept { return energy_alpha * rho; }
};

PerformanceReport evaluate(const Instance& instance, const Strategy& strategy,
                           Bounds bounds = Bounds::Checked);

struct BenchmarkCurves
{
    double naive = 0.0;            ///< go to the origin
    double han = 0.0;              ///< line strategy run along chords
    double greedy_bisector = 0.0;  ///< meet at bisectors, shrink by cos(alpha) per round
    double one_rb = 0.0;           ///< optimal single random bit
};

/// Competitive ratios of the benchmark algorithms, all in closed form.
BenchmarkCurves benchmark_curves(double rho);

/// Closed-form greedy-bisector ratio (7 rho^2 + 8 rho sqrt(rho^2-1) - 3) / (3 rho^2 + 1).
double greedy_bisector_ratio(double rho);

/// Closed-form optimal single-bit ratio (3 sqrt(rho^2-1) + sqrt 7) / 4.
double one_rb_ratio(double rho);

/// Expected times of the two line strategies obtained by solving their renewal
/// equations f = a + b f, with the residual |f - (a + b f)| of each solution.
struct SrlReferenceTimes
{
    double two_markov = 0.0;
    double alpern_three_markov = 0.0;
    double two_markov_residual = 0.0;
    double alpern_residual = 0.0;
};

SrlReferenceTimes srl_reference_times() noexcept;

}  // namespace rendezvous
