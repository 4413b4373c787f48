#include "rendezvous/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"
#include "rendezvous/optimize.hpp"

namespace rendezvous {

double naive_curve(double rho)
{
    return Instance::from_rho(rho).rho();
}

double one_rb_curve(double rho)
{
    const Instance instance = Instance::from_rho(rho);
    return competitive_ratio(instance, optimal_1rb(instance));
}

double one_step_curve(double rho)
{
    const Instance instance = Instance::from_rho(rho);
    return competitive_ratio(instance, optimal_1rb2(instance));
}

double unbounded_curve(double rho)
{
    const Instance instance = Instance::from_rho(rho);
    return competitive_ratio(instance, optimal_inf(instance).strategy);
}

EffectivenessResult effectiveness(const CompetitiveRatioCurve& curve, const EffectivenessOptions& options)
{
    auto below = [&](double rho) { return curve(rho) <= kEffectivenessThreshold; };

    EffectivenessResult result;
    if (!below(options.lower)) {
        result.kind = EffectivenessResult::Kind::Zero;
        result.rho = 0.0;
        result.monotone_verified = true;
        return result;
    }

    double lo = options.lower;
    double hi = std::max(2.0, 2.0 * lo);
    while (below(hi)) {
        lo = hi;
        if (hi >= options.upper) {
            result.kind = EffectivenessResult::Kind::BeyondSearchRange;
            result.rho = options.upper;
            return result;
        }
        hi = std::min(2.0 * hi, options.upper);
    }
    while (hi - lo > 1e-3 * options.tolerance) {
        const double mid = 0.5 * (lo + hi);
        (below(mid) ? lo : hi) = mid;
    }
    result.kind = EffectivenessResult::Kind::Finite;
    result.rho = 0.5 * (lo + hi);

    // Non-decrease on [lower, 2 * root] justifies reading the crossing as the largest such rho.
    const int n = std::max(options.monotonicity_samples, 2);
    const double span_end = 2.0 * result.rho;
    double previous = curve(options.lower);
    bool monotone = true;
    for (int i = 1; i < n; ++i) {
        const double rho = options.lower + (span_end - options.lower) * i / (n - 1);
        const double value = curve(rho);
        if (value < previous - 1e-12) {
            monotone = false;
        }
        previous = value;
    }
    result.monotone_verified = monotone;
    return result;
}

EffectivenessResult effectiveness(const StrategyFamily& family, const EffectivenessOptions& options)
{
    return effectiveness(
        [&family](double rho) {
            const Instance instance = Instance::from_rho(rho);
            return competitive_ratio(instance, family(instance));
        },
        options);
}

AsymptoticsReport asymptotics_report(double rho_probe)
{
    if (!(rho_probe >= 1e3)) {
        throw OutOfValidatedRangeError("asymptotics_report needs rho_probe >= 1e3");
    }
    const Instance instance = Instance::from_rho(rho_probe);
    const Strategy strategy = optimal_inf(instance).strategy;
    const PerformanceReport perf = evaluate(instance, strategy);
    const double alpha = instance.alpha();

    AsymptoticsReport report;
    report.rho_probe = rho_probe;
    report.beta_slope = (kHalfPi - strategy.beta) / alpha;
    report.gamma_slope = (kHalfPi - strategy.gamma) / alpha;
    report.cr_gap_scaled = rho_probe * rho_probe * (5.0 - perf.competitive_ratio);
    report.energy_scaled = perf.energy_rho() / (rho_probe * rho_probe);
    return report;
}

Strategy TradeoffPoint::strategy_of(const Instance& instance) const
{
    const double alpha = instance.alpha();
    if (family == TradeoffFamily::A) {
        return Strategy{StepCount::unbounded(), kHalfPi - k * alpha, kHalfPi - m * alpha};
    }
    return Strategy{StepCount::unbounded(), std::asin(b), std::asin(c)};
}

namespace {

void require_positive_epsilon(double epsilon)
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw NumericDomainError("epsilon must be positive");
    }
}

double family_b_energy_limit(double b, double c)
{
    return (c + 2.0 * b) / (std::sqrt(1.0 - b * b) * c + 2.0 * std::sqrt(1.0 - c * c) * b);
}

}  // namespace

TradeoffPoint tradeoff_family_A(double epsilon)
{
    require_positive_epsilon(epsilon);
    TradeoffPoint p;
    p.family = TradeoffFamily::A;
    p.epsilon = epsilon;
    p.k = (31.0 * epsilon + 18.0) / (22.0 * epsilon);
    p.m = (6.0 * epsilon + 12.0) / (11.0 * epsilon);
    p.scaling = EnergyScaling::EnergyOverRhoSquared;
    p.limit_competitive_ratio = 5.0;
    p.limit_scaled_energy = 6.0 / (2.0 * p.k + 4.0 * p.m - 5.0);
    p.limit_cr_gap_scaled =
        27.0 / (11.0 * epsilon * epsilon) - 237.0 / (11.0 * epsilon) - 39.0 / 44.0;
    return p;
}

TradeoffPoint tradeoff_family_B(double epsilon, double lambda)
{
    require_positive_epsilon(epsilon);
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw NumericDomainError("lambda must lie in [0, 1]");
    }
    TradeoffPoint p;
    p.family = TradeoffFamily::B;
    p.epsilon = epsilon;
    p.lambda = lambda;
    p.b = 2.0 / (lambda * epsilon + 2.0);
    p.c = 3.0 / (-lambda * epsilon + epsilon + 3.0);
    p.scaling = EnergyScaling::EnergyOverRho;
    p.limit_competitive_ratio = 2.0 / p.b + 3.0 / p.c;
    p.limit_scaled_energy = family_b_energy_limit(p.b, p.c);
    return p;
}

TradeoffPoint tradeoff_family_B_equal(double epsilon)
{
    require_positive_epsilon(epsilon);
    TradeoffPoint p;
    p.family = TradeoffFamily::BEqual;
    p.epsilon = epsilon;
    p.b = p.c = 5.0 / (5.0 + epsilon);
    p.scaling = EnergyScaling::EnergyOverRho;
    p.limit_competitive_ratio = 2.0 / p.b + 3.0 / p.c;
    p.limit_scaled_energy = family_b_energy_limit(p.b, p.c);
    return p;
}

double family_b_optimal_lambda_energy(double epsilon)
{
    require_positive_epsilon(epsilon);
    const double e = epsilon;
    return (41.0 * e + 198.0) /
           (3.0 * std::sqrt(3.0) * std::sqrt(e * (3.0 * e + 44.0)) + 16.0 * std::sqrt(e * (4.0 * e + 33.0)));
}

TradeoffEvaluation evaluate_tradeoff(const TradeoffPoint& point, double rho)
{
    const Instance instance = Instance::from_rho(rho);
    const PerformanceReport perf = evaluate(instance, point.strategy_of(instance));
    TradeoffEvaluation out;
    out.rho = instance.rho();
    out.competitive_ratio = perf.competitive_ratio;
    out.scaled_energy = point.scaling == EnergyScaling::EnergyOverRhoSquared
                            ? perf.energy_rho() / (out.rho * out.rho)
                            : perf.energy_rho() / out.rho;
    out.cr_gap_scaled = out.rho * out.rho * (perf.competitive_ratio - 5.0);
    return out;
}

std::vector<CurveRow> curve_table(const std::vector<double>& rho_values)
{
    std::vector<CurveRow> rows;
    rows.reserve(rho_values.size());
    for (const double rho : rho_values) {
        CurveRow row;
        row.rho = rho;
        row.naive = naive_curve(rho);
        row.one_rb = one_rb_curve(rho);
        row.one_step = one_step_curve(rho);
        row.greedy_bisector = greedy_bisector_ratio(rho);
        row.unbounded = unbounded_curve(rho);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rendezvous
