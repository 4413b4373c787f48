#pragma once

#include <array>
#include <utility>

#include "rendezvous/geometry.hpp"

namespace rendezvous {

/// Rounds-unbounded critical points exist inside the admissible box only for
/// alpha below this value (rho above ~2.3566); beyond it the minimizer sits on
/// the gamma = 0 face.
double interior_critical_alpha_limit();

/// Alpha at or below which the single-round optimum has gamma > 0: (1/2) arccos(2/3).
double one_round_gamma_regime_alpha();

enum class OptimumSource
{
    ClosedForm,       ///< interior critical point from the closed-form root
    NumericFallback,  ///< closed form not applicable; minimizer found by grid_refine
};

struct Optimum
{
    Strategy strategy;
    OptimumSource source = OptimumSource::ClosedForm;
};

/// Optimal single-bit strategy: k = 1, gamma = 0, beta = max(0, arccos(3/4) - alpha).
Strategy optimal_1rb(const Instance& instance);

/// Optimal single-round (beta, gamma) strategy. Falls back to optimal_1rb when
/// alpha exceeds one_round_gamma_regime_alpha().
Strategy optimal_1rb2(const Instance& instance);

/// Critical point of the unbounded expected time regarded as a smooth function
/// of (beta, gamma) on the real plane. gamma may be negative when alpha is past
/// interior_critical_alpha_limit(). Throws NumericDomainError if no real root.
struct CriticalAngles
{
    double beta = 0.0;
    double gamma = 0.0;
};

CriticalAngles critical_point_inf(double alpha);

/// The two algebraic routes to gamma at a given beta:
///   arccos((4/3) cos(alpha + beta))   and   arccos((2/3) cos(beta)) - 2 alpha.
std::pair<double, double> critical_gamma_routes(double alpha, double beta);

/// Optimal unbounded strategy. Uses the closed form whenever the critical point
/// lies in the admissible box, and grid_refine otherwise.
Optimum optimal_inf(const Instance& instance);

/// ((3/4) cos gamma - cos(alpha+beta), (2/3) cos beta - cos(2alpha+gamma))
std::pair<double, double> residuals_inf(const Instance& instance, const Strategy& strategy);

/// (cos(2alpha+gamma) - 2/3, cos(alpha+beta) - (3/4) cos gamma)
std::pair<double, double> residuals_1rb2(const Instance& instance, const Strategy& strategy);

struct CriticalPointReport
{
    double beta_bar = 0.0;
    double gamma_bar = 0.0;
    double residual_1 = 0.0;
    double residual_2 = 0.0;
    std::array<double, 2> gradient{};             ///< central differences
    std::array<std::array<double, 2>, 2> hessian{};
    std::array<double, 2> hessian_eigenvalues{};  ///< ascending

    bool positive_definite(double threshold = 1e-8) const noexcept
    {
        return hessian_eigenvalues[0] > threshold;
    }
};

/// Finite-difference Hessian (h = 1e-5, one Richardson step) of the unbounded
/// expected time at critical_point_inf(alpha). Requires alpha < 1/2.
CriticalPointReport hessian_check_inf(const Instance& instance);

struct GridOptions
{
    int grid_points = 200;     ///< per axis
    double min_step = 1e-10;   ///< pattern search stops below this step
    bool gamma_fixed_zero = false;
};

/// Brute-force minimizer of expected_time over [0, pi/2 - alpha]^2: coarse grid
/// then compass search. Ties go to the lowest (beta, gamma).
Strategy grid_refine(const Instance& instance, StepCount steps, const GridOptions& options = {});

}  // namespace rendezvous
