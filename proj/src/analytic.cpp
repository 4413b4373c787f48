#include "rendezvous/analytic.hpp"

#include <cmath>

#include "rendezvous/errors.hpp"

namespace rendezvous {

namespace {

// (1 - x^k) / (1 - x), with the x -> 1 limit k.
double geometric_partial_sum(double x, std::int64_t k) noexcept
{
    const double kd = static_cast<double>(k);
    if (x == 1.0) {
        return kd;
    }
    if (x > 0.0 && std::abs(x - 1.0) < 1e-4) {
        return std::expm1(kd * std::log1p(x - 1.0)) / (x - 1.0);
    }
    return (1.0 - std::pow(x, kd)) / (1.0 - x);
}

}  // namespace

double expected_time_from_geometry(const DartingGeometry& g, StepCount steps)
{
    const double core = 3.0 * g.d + 4.0 * g.w;
    if (steps.is_unbounded()) {
        if (!(g.x < 2.0)) {
            return kInfinity;
        }
        return core / (2.0 * (2.0 - g.x));
    }

    const std::int64_t k = steps.count();
    const double kd = static_cast<double>(k);
    if (std::abs(g.x - 2.0) < 1e-9) {
        // Each failed round halves the probability and doubles the radius; sum directly.
        double total = 0.0;
        double radius = 1.0;
        double travelled = 0.0;
        double survive = 1.0;
        for (std::int64_t i = 0; i < k; ++i) {
            total += survive * (0.25 * (travelled + radius * g.w) +
                                0.25 * (travelled + radius * (g.w + g.d)));
            travelled += radius * (g.w + g.d);
            radius *= g.x;
            survive *= 0.5;
        }
        return total + survive * (travelled + radius);
    }
    const double tail = core + 2.0 * g.x - 4.0;
    if (k <= kRegroupedFormThreshold) {
        const double scale = std::ldexp(1.0, -static_cast<int>(k + 1));
        return scale * (std::pow(g.x, kd) * tail - std::ldexp(core, static_cast<int>(k))) /
               (g.x - 2.0);
    }
    return core / (2.0 * (2.0 - g.x)) + std::pow(g.x / 2.0, kd) * tail / (2.0 * (g.x - 2.0));
}

double expected_time(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    return expected_time_from_geometry(darting_geometry(instance, strategy, bounds), strategy.steps);
}

double expected_time_one_round_trig(double alpha, double beta, double gamma) noexcept
{
    return 0.5 / std::sin(alpha + beta) *
           (std::sin(beta) / std::sin(2.0 * alpha + gamma) *
                (3.0 * std::sin(alpha) * std::cos(alpha) + std::sin(gamma)) +
            2.0 * std::sin(alpha));
}

double expected_time_unbounded_trig(double alpha, double beta, double gamma) noexcept
{
    const double num = std::sin(alpha) * (3.0 * std::sin(alpha - beta) - 3.0 * std::sin(alpha + beta) -
                                          4.0 * std::sin(2.0 * alpha + gamma));
    const double den = -2.0 * std::cos(alpha - beta + gamma) + 2.0 * std::cos(3.0 * alpha + beta + gamma) +
                       std::cos(beta - gamma) - std::cos(beta + gamma);
    return num / den;
}

double competitive_ratio(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    return expected_time(instance, strategy, bounds) / std::sin(instance.alpha());
}

double energy_from_geometry(const DartingGeometry& g, StepCount steps) noexcept
{
    const double round = g.w + g.d;
    if (steps.is_unbounded()) {
        if (!(g.x < 1.0)) {
            return kInfinity;
        }
        return round / (1.0 - g.x);
    }
    const std::int64_t k = steps.count();
    return round * geometric_partial_sum(g.x, k) + std::pow(g.x, static_cast<double>(k));
}

double energy(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    return energy_from_geometry(darting_geometry(instance, strategy, bounds), strategy.steps);
}

PerformanceReport evaluate(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    const DartingGeometry g = darting_geometry(instance, strategy, bounds);
    PerformanceReport report;
    report.expected_time_alpha = expected_time_from_geometry(g, strategy.steps);
    report.competitive_ratio = report.expected_time_alpha / std::sin(instance.alpha());
    report.energy_alpha = energy_from_geometry(g, strategy.steps);
    report.rho = instance.rho();
    return report;
}

double greedy_bisector_ratio(double rho)
{
    Instance::from_rho(rho);
    const double r2 = rho * rho;
    return (7.0 * r2 + 8.0 * std::sqrt(r2 - 1.0) * rho - 3.0) / (3.0 * r2 + 1.0);
}

double one_rb_ratio(double rho)
{
    Instance::from_rho(rho);
    return (3.0 * std::sqrt(rho * rho - 1.0) + std::sqrt(7.0)) / 4.0;
}

BenchmarkCurves benchmark_curves(double rho)
{
    BenchmarkCurves curves;
    curves.naive = Instance::from_rho(rho).rho();
    curves.han = kLineRendezvousBenchmark;
    curves.greedy_bisector = greedy_bisector_ratio(rho);
    curves.one_rb = one_rb_ratio(rho);
    return curves;
}

SrlReferenceTimes srl_reference_times() noexcept
{
    // f = a + b f  =>  f = a / (1 - b)
    struct Renewal
    {
        double a;
        double b;
        double solve() const noexcept { return a / (1.0 - b); }
        double residual(double f) const noexcept { return std::abs(f - (a + b * f)); }
    };
    // Meet w.p. 1/4 after time 1, otherwise restart after time 2.
    const Renewal two_markov{0.25 * 1.0 + 0.75 * 2.0, 0.75};
    // Meet w.p. 1/4 after time 1, w.p. 1/4 after time 3, otherwise restart after 3.
    const Renewal alpern{0.25 * 1.0 + 0.25 * 3.0 + 0.5 * 3.0, 0.5};

    SrlReferenceTimes out;
    out.two_markov = two_markov.solve();
    out.alpern_three_markov = alpern.solve();
    out.two_markov_residual = two_markov.residual(out.two_markov);
    out.alpern_residual = alpern.residual(out.alpern_three_markov);
    return out;
}

}  // namespace rendezvous
