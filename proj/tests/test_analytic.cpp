#include <doctest.h>

#include <cmath>

#include "rendezvous/analysis.hpp"
#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"
#include "rendezvous/optimize.hpp"
#include "support.hpp"

using namespace rendezvous;
using rendezvous::testing::close_rel;
using rendezvous::testing::Gen;

namespace {

// Renewal recursions, independent of the closed forms:
//   T_k = w + (3/4) d + (x/2) T_{k-1},  E_k = w + d + x E_{k-1},  T_0 = E_0 = 1.
double time_by_recursion(const DartingGeometry& g, std::int64_t k)
{
    double t = 1.0;
    for (std::int64_t i = 0; i < k; ++i) {
        t = g.w + 0.75 * g.d + 0.5 * g.x * t;
    }
    return t;
}

double energy_by_recursion(const DartingGeometry& g, std::int64_t k)
{
    double e = 1.0;
    for (std::int64_t i = 0; i < k; ++i) {
        e = g.w + g.d + g.x * e;
    }
    return e;
}

}  // namespace

TEST_CASE("expected time matches high-precision values")
{
    const Instance inst = Instance::from_alpha(0.3);
    CHECK(expected_time(inst, Strategy{StepCount::finite(5), 1.0, 0.9}) ==
          doctest::Approx(1.0308182049771788).epsilon(1e-14));
    CHECK(expected_time(inst, Strategy{StepCount::finite(2), 1.0, 0.8}) ==
          doctest::Approx(0.99978767461081996).epsilon(1e-14));
}

TEST_CASE("finite-k closed form agrees with the renewal recursion")
{
    Gen gen(21);
    for (int i = 0; i < 500; ++i) {
        const Instance inst = Instance::from_rho(gen.rho());
        const std::int64_t k = gen.integer(1, 200);
        const Strategy s = gen.strategy(inst, StepCount::finite(k));
        const DartingGeometry g = darting_geometry(inst, s);
        REQUIRE(close_rel(expected_time(inst, s), time_by_recursion(g, k), 1e-12));
        REQUIRE(close_rel(energy(inst, s), energy_by_recursion(g, k), 1e-12));
    }
}

TEST_CASE("regrouped form is continuous across its threshold")
{
    const Instance inst = Instance::from_rho(4.0);
    const Strategy base = optimal_inf(inst).strategy;
    const DartingGeometry g = darting_geometry(inst, base);
    for (std::int64_t k = kRegroupedFormThreshold - 2; k <= kRegroupedFormThreshold + 2; ++k) {
        CHECK(close_rel(expected_time_from_geometry(g, StepCount::finite(k)), time_by_recursion(g, k), 1e-14));
    }
}

TEST_CASE("single round: three routes agree on a 30^3 grid")
{
    constexpr int n = 30;
    for (int i = 1; i <= n; ++i) {
        const double alpha = (kPi / 4) * i / (n + 1);
        const Instance inst = Instance::from_alpha(alpha);
        const double top = kHalfPi - alpha;
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                const Strategy s{StepCount::finite(1), top * j / (n - 1), top * l / (n - 1)};
                const DartingGeometry g = darting_geometry(inst, s);
                const double direct = g.w + 0.75 * g.d + 0.5 * g.x;
                REQUIRE(close_rel(expected_time(inst, s), direct, 1e-13));
                REQUIRE(close_rel(expected_time_one_round_trig(alpha, s.beta, s.gamma), direct, 1e-12));
            }
        }
    }
}

TEST_CASE("unbounded closed form agrees with its trigonometric form")
{
    Gen gen(3);
    for (int i = 0; i < 2000; ++i) {
        const Instance inst = Instance::from_rho(gen.rho(1.42, 1e4));
        const Strategy s = gen.strategy(inst, StepCount::unbounded());
        REQUIRE(close_rel(expected_time(inst, s), expected_time_unbounded_trig(inst.alpha(), s.beta, s.gamma),
                          1e-11));
    }
}

TEST_CASE("many rounds approach the unbounded strategy")
{
    Gen gen(8);
    for (int i = 0; i < 200; ++i) {
        const Instance inst = Instance::from_rho(gen.rho(1.5, 50.0));
        Strategy s = gen.strategy(inst, StepCount::unbounded());
        const double unbounded_time = expected_time(inst, s);
        const double unbounded_energy = energy(inst, s);
        s.steps = StepCount::finite(10000);
        REQUIRE(close_rel(expected_time(inst, s), unbounded_time, 1e-12));
        if (darting_geometry(inst, s).x < 0.999) {
            REQUIRE(close_rel(energy(inst, s), unbounded_energy, 1e-9));
        }
    }
}

TEST_CASE("competitive ratio is expected time over sin(alpha) and at least one")
{
    Gen gen(13);
    for (int i = 0; i < 2000; ++i) {
        const Instance inst = Instance::from_rho(gen.rho(1.42, 1e5));
        const std::int64_t k = gen.integer(0, 15);
        const Strategy s = gen.strategy(inst, k == 0 ? StepCount::unbounded() : StepCount::finite(k));
        const double cr = competitive_ratio(inst, s);
        REQUIRE(cr == doctest::Approx(expected_time(inst, s) / std::sin(inst.alpha())).epsilon(1e-15));
        REQUIRE(cr >= 1.0);
        const PerformanceReport r = evaluate(inst, s);
        REQUIRE(r.competitive_ratio == cr);
        REQUIRE(r.energy_rho() == doctest::Approx(r.energy_alpha * inst.rho()));
    }
}

TEST_CASE("optimal strategies reach the expected ratios and energies")
{
    const Instance r3 = Instance::from_rho(3.0);
    const Strategy s3 = optimal_inf(r3).strategy;
    CHECK(expected_time(r3, s3) == doctest::Approx(0.91576533653539971).epsilon(1e-13));
    CHECK(competitive_ratio(r3, s3) == doctest::Approx(2.7472960096061991).epsilon(1e-13));
    CHECK(energy(r3, s3) == doctest::Approx(1.1518109070852087).epsilon(1e-13));

    const Instance r5 = Instance::from_rho(5.0);
    const Strategy s5 = optimal_inf(r5).strategy;
    CHECK(expected_time(r5, s5) == doctest::Approx(0.74650307808512084).epsilon(1e-13));
    CHECK(competitive_ratio(r5, s5) == doctest::Approx(3.7325153904256042).epsilon(1e-13));
    CHECK(energy(r5, s5) == doctest::Approx(1.4781014561828890).epsilon(1e-13));

    const Instance r10 = Instance::from_rho(10.0);
    const Strategy s10 = optimal_inf(r10).strategy;
    CHECK(competitive_ratio(r10, s10) == doctest::Approx(4.5754420019775271).epsilon(1e-13));
    CHECK(energy(r10, s10) == doctest::Approx(2.4689980061377067).epsilon(1e-13));
}

TEST_CASE("energy is infinite only when rounds stop shrinking")
{
    const Instance inst = Instance::from_alpha(0.3);
    const Strategy wide{StepCount::unbounded(), 2.0, 2.0};
    REQUIRE(darting_geometry(inst, wide, Bounds::Unchecked).x >= 1.0);
    CHECK(energy(inst, wide, Bounds::Unchecked) == kInfinity);
    CHECK(std::isfinite(energy(inst, Strategy{StepCount::finite(4), 2.0, 2.0}, Bounds::Unchecked)));
    CHECK_THROWS_AS(energy(inst, wide), InvalidStrategyError);

    // x = 1 exactly: the finite-k energy becomes w + d per round plus the final leg.
    const DartingGeometry unit{0.25, 1.0, 0.5, 1.0};
    CHECK(energy_from_geometry(unit, StepCount::finite(3)) == doctest::Approx(3 * 0.75 + 1.0));
}

TEST_CASE("benchmark curves")
{
    const BenchmarkCurves b = benchmark_curves(5.0);
    CHECK(b.naive == 5.0);
    CHECK(b.han == kLineRendezvousBenchmark);
    CHECK(b.greedy_bisector == doctest::Approx(0.96831363005961644 * 5.0).epsilon(1e-13));
    const Instance r5 = Instance::from_rho(5.0);
    CHECK(greedy_bisector_ratio(5.0) ==
          doctest::Approx(competitive_ratio(r5, greedy_bisector_strategy(r5))).epsilon(1e-13));
    CHECK(greedy_bisector_ratio(29.0 / std::sqrt(165.0)) == doctest::Approx(4.25).epsilon(1e-13));
    CHECK(one_rb_ratio(5.0) == doctest::Approx(competitive_ratio(r5, optimal_1rb(r5))).epsilon(1e-13));
    CHECK_THROWS_AS(benchmark_curves(1.0), DegenerateInstanceError);
    CHECK_THROWS_AS(one_rb_ratio(1.2), DegenerateInstanceError);
}

TEST_CASE("closed-form benchmark ratios match the simulator-free evaluation")
{
    Gen gen(17);
    for (int i = 0; i < 500; ++i) {
        const double rho = gen.rho(1.6, 1e4);
        const Instance inst = Instance::from_rho(rho);
        REQUIRE(close_rel(greedy_bisector_ratio(rho), competitive_ratio(inst, greedy_bisector_strategy(inst)),
                          1e-11));
        if (std::acos(0.75) > inst.alpha()) {
            REQUIRE(close_rel(one_rb_ratio(rho), competitive_ratio(inst, optimal_1rb(inst)), 1e-11));
        }
    }
}

TEST_CASE("benchmark ordering on [2.5, 20]")
{
    for (int i = 0; i <= 200; ++i) {
        const double rho = 2.5 + 17.5 * i / 200.0;
        const double unbounded = unbounded_curve(rho);
        const double one_step = one_step_curve(rho);
        const double one_rb = one_rb_curve(rho);
        REQUIRE(unbounded <= one_step + 1e-12);
        REQUIRE(one_step <= one_rb + 1e-12);
        REQUIRE(one_rb <= naive_curve(rho));
        REQUIRE(unbounded <= greedy_bisector_ratio(rho) + 1e-12);
    }
}

TEST_CASE("line rendezvous reference times")
{
    const SrlReferenceTimes srl = srl_reference_times();
    CHECK(srl.two_markov == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(srl.alpern_three_markov == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(srl.two_markov_residual < 1e-14);
    CHECK(srl.alpern_residual < 1e-14);
}
