#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rendezvous/geometry.hpp"

namespace rendezvous {

using CompetitiveRatioCurve = std::function<double(double rho)>;
using StrategyFamily = std::function<Strategy(const Instance&)>;

// Named curves of the optimal strategy of each class, as functions of rho.
double naive_curve(double rho);
double one_rb_curve(double rho);
double one_step_curve(double rho);
double unbounded_curve(double rho);

struct EffectivenessOptions
{
    double lower = 1.4142135623730951 + 1e-6;
    double upper = 1e6;
    double tolerance = 1e-6;       ///< bracket width at which bisection stops
    int monotonicity_samples = 64; ///< samples on [lower, root] checked for non-decrease
};

struct EffectivenessResult
{
    enum class Kind
    {
        Finite,            ///< largest rho with ratio <= 4.25
        Zero,              ///< ratio >= 4.25 on the whole range
        BeyondSearchRange, ///< ratio < 4.25 up to options.upper
    };

    Kind kind = Kind::Finite;
    double rho = 0.0;
    bool monotone_verified = false;
};

/// Largest rho with curve(rho) <= 4.25, by doubling bracket search then bisection.
EffectivenessResult effectiveness(const CompetitiveRatioCurve& curve, const EffectivenessOptions& options = {});
EffectivenessResult effectiveness(const StrategyFamily& family, const EffectivenessOptions& options = {});

/// Large-rho behaviour of the optimal unbounded strategy.
struct AsymptoticsReport
{
    double rho_probe = 0.0;
    double beta_slope = 0.0;      ///< (pi/2 - beta) / arcsin(1/rho)       -> 5
    double gamma_slope = 0.0;     ///< (pi/2 - gamma) / arcsin(1/rho)      -> 16/3
    double cr_gap_scaled = 0.0;   ///< rho^2 (5 - CR)                      -> 289/6
    double energy_scaled = 0.0;   ///< E / rho^2 (E for agents at distance 2) -> 18/79

    static constexpr double kBetaSlope = 5.0;
    static constexpr double kGammaSlope = 16.0 / 3.0;
    static constexpr double kCrGapScaled = 289.0 / 6.0;
    static constexpr double kEnergyScaled = 18.0 / 79.0;
};

/// Requires rho_probe >= 1e3.
AsymptoticsReport asymptotics_report(double rho_probe);

enum class EnergyScaling
{
    EnergyOverRhoSquared,
    EnergyOverRho,
};

enum class TradeoffFamily
{
    A,       ///< ratio 5, energy epsilon * rho^2
    B,       ///< ratio 5 + epsilon, energy linear in rho, sin beta / sin gamma set by lambda
    BEqual,  ///< ratio 5 + epsilon with sin beta = sin gamma
};

struct TradeoffPoint
{
    TradeoffFamily family = TradeoffFamily::A;
    double epsilon = 0.0;
    double lambda = 0.0;      ///< family B only
    // Family A: beta = pi/2 - k alpha, gamma = pi/2 - m alpha.
    double k = 0.0;
    double m = 0.0;
    // Family B: beta = arcsin(b), gamma = arcsin(c).
    double b = 0.0;
    double c = 0.0;
    EnergyScaling scaling = EnergyScaling::EnergyOverRhoSquared;
    double limit_competitive_ratio = 0.0;
    double limit_scaled_energy = 0.0;
    /// Family A only: limit of rho^2 (CR - 5).
    double limit_cr_gap_scaled = 0.0;

    Strategy strategy_of(const Instance& instance) const;
};

TradeoffPoint tradeoff_family_A(double epsilon);

/// Default lambda = 3/11, which minimizes the limiting energy.
TradeoffPoint tradeoff_family_B(double epsilon, double lambda = 3.0 / 11.0);
TradeoffPoint tradeoff_family_B_equal(double epsilon);

/// Closed-form limiting energy / rho of family B at lambda = 3/11.
double family_b_optimal_lambda_energy(double epsilon);

/// Exact finite-rho values of a tradeoff strategy.
struct TradeoffEvaluation
{
    double rho = 0.0;
    double competitive_ratio = 0.0;
    double scaled_energy = 0.0;    ///< per the point's scaling
    double cr_gap_scaled = 0.0;    ///< rho^2 (CR - 5)
};

TradeoffEvaluation evaluate_tradeoff(const TradeoffPoint& point, double rho);

struct CurveRow
{
    double rho = 0.0;
    double naive = 0.0;
    double one_rb = 0.0;
    double one_step = 0.0;
    double greedy_bisector = 0.0;
    double unbounded = 0.0;
};

std::vector<CurveRow> curve_table(const std::vector<double>& rho_values);

}  // namespace rendezvous
