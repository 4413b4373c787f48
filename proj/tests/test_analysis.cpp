#include <doctest.h>

#include <cmath>

#include "rendezvous/analysis.hpp"
#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"
#include "rendezvous/optimize.hpp"
#include "support.hpp"

using namespace rendezvous;
using rendezvous::testing::Gen;

TEST_CASE("effectiveness of the strategy classes")
{
    const auto one_rb = effectiveness(CompetitiveRatioCurve(one_rb_curve));
    CHECK(one_rb.kind == EffectivenessResult::Kind::Finite);
    CHECK(one_rb.monotone_verified);
    CHECK(one_rb.rho == doctest::Approx(std::sqrt(305.0 - 34.0 * std::sqrt(7.0)) / 3.0).epsilon(1e-8));
    CHECK(one_rb.rho == doctest::Approx(4.8881313792105320).epsilon(1e-8));

    const auto one_step = effectiveness(CompetitiveRatioCurve(one_step_curve));
    CHECK(one_step.rho == doctest::Approx(5.3236552323478833).epsilon(1e-8));
    CHECK(one_step.monotone_verified);

    const auto unbounded = effectiveness(CompetitiveRatioCurve(unbounded_curve));
    CHECK(unbounded.rho == doctest::Approx(7.1369625526481169).epsilon(1e-8));
    CHECK(unbounded.monotone_verified);

    const auto greedy = effectiveness(CompetitiveRatioCurve(greedy_bisector_ratio));
    CHECK(greedy.rho == doctest::Approx(29.0 / std::sqrt(165.0)).epsilon(1e-8));

    CHECK(effectiveness(CompetitiveRatioCurve(naive_curve)).rho == doctest::Approx(4.25).epsilon(1e-8));
}

TEST_CASE("effectiveness edge cases")
{
    const auto han = effectiveness(CompetitiveRatioCurve([](double) { return kLineRendezvousBenchmark; }));
    CHECK(han.kind == EffectivenessResult::Kind::Zero);
    CHECK(han.rho == 0.0);

    const auto flat = effectiveness(CompetitiveRatioCurve([](double) { return 1.0; }));
    CHECK(flat.kind == EffectivenessResult::Kind::BeyondSearchRange);

    EffectivenessOptions narrow;
    narrow.upper = 4.0;
    CHECK(effectiveness(CompetitiveRatioCurve(naive_curve), narrow).kind ==
          EffectivenessResult::Kind::BeyondSearchRange);

    const auto bumpy = effectiveness(CompetitiveRatioCurve([](double rho) { return rho + std::sin(8.0 * rho); }));
    CHECK(bumpy.kind == EffectivenessResult::Kind::Finite);
    CHECK_FALSE(bumpy.monotone_verified);
}

TEST_CASE("effectiveness of a strategy family")
{
    const auto r = effectiveness(StrategyFamily([](const Instance& inst) { return optimal_1rb(inst); }));
    CHECK(r.rho == doctest::Approx(4.8881313792105320).epsilon(1e-8));
}

TEST_CASE("asymptotic report converges toward its constants")
{
    CHECK_THROWS_AS(asymptotics_report(100.0), OutOfValidatedRangeError);
    const AsymptoticsReport a = asymptotics_report(1e3);
    const AsymptoticsReport b = asymptotics_report(1e4);
    const AsymptoticsReport c = asymptotics_report(1e5);
    auto shrinking = [](double x, double y, double z, double limit) {
        return std::abs(y - limit) < std::abs(x - limit) && std::abs(z - limit) < std::abs(y - limit);
    };
    CHECK(shrinking(a.beta_slope, b.beta_slope, c.beta_slope, AsymptoticsReport::kBetaSlope));
    CHECK(shrinking(a.gamma_slope, b.gamma_slope, c.gamma_slope, AsymptoticsReport::kGammaSlope));
    CHECK(shrinking(a.cr_gap_scaled, b.cr_gap_scaled, c.cr_gap_scaled, AsymptoticsReport::kCrGapScaled));
    CHECK(shrinking(a.energy_scaled, b.energy_scaled, c.energy_scaled, AsymptoticsReport::kEnergyScaled));

    CHECK(b.beta_slope == doctest::Approx(4.9999997).epsilon(1e-7));
    CHECK(b.gamma_slope == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
    CHECK(b.cr_gap_scaled == doctest::Approx(48.1666).epsilon(1e-4));
    CHECK(b.energy_scaled == doctest::Approx(0.227848).epsilon(1e-5));
}

TEST_CASE("family A")
{
    for (const double eps : {0.25, 0.5, 1.0, 2.0}) {
        CAPTURE(eps);
        const TradeoffPoint p = tradeoff_family_A(eps);
        CHECK(p.limit_scaled_energy == doctest::Approx(eps).epsilon(1e-14));
        CHECK(p.limit_competitive_ratio == 5.0);
        CHECK(p.k > 1.0);
        CHECK(p.m > 1.0);
        const TradeoffEvaluation e = evaluate_tradeoff(p, 1e4);
        CHECK(std::abs(e.scaled_energy - eps) / eps < 0.02);
        CHECK(std::abs(e.cr_gap_scaled - p.limit_cr_gap_scaled) / std::abs(p.limit_cr_gap_scaled) < 0.02);
        CHECK(e.competitive_ratio < 5.0);
    }
    CHECK(tradeoff_family_A(0.5).limit_cr_gap_scaled == doctest::Approx(-34.159).epsilon(1e-4));
    CHECK_THROWS_AS(tradeoff_family_A(0.0), NumericDomainError);
    CHECK_THROWS_AS(tradeoff_family_A(-1.0), NumericDomainError);
}

TEST_CASE("family B identity and energy")
{
    Gen gen(61);
    for (int i = 0; i < 100; ++i) {
        const double eps = gen.uniform(0.01, 10.0);
        const double lambda = gen.uniform(0.0, 1.0);
        const TradeoffPoint p = tradeoff_family_B(eps, lambda);
        REQUIRE(std::abs(2.0 / p.b + 3.0 / p.c - (5.0 + eps)) < 1e-12);
        REQUIRE(p.limit_competitive_ratio == doctest::Approx(5.0 + eps).epsilon(1e-14));
    }
    const TradeoffPoint best = tradeoff_family_B(0.5);
    CHECK(best.lambda == doctest::Approx(3.0 / 11.0));
    CHECK(best.limit_scaled_energy == doctest::Approx(2.3823316363439386).epsilon(1e-13));
    CHECK(family_b_optimal_lambda_energy(0.5) == doctest::Approx(2.3823316363439386).epsilon(1e-13));
    for (const double eps : {0.1, 1.0, 4.0}) {
        CHECK(family_b_optimal_lambda_energy(eps) ==
              doctest::Approx(tradeoff_family_B(eps).limit_scaled_energy).epsilon(1e-12));
    }
    CHECK_THROWS_AS(tradeoff_family_B(0.5, 1.5), NumericDomainError);
    CHECK_THROWS_AS(tradeoff_family_B(0.5, -0.1), NumericDomainError);

    const TradeoffEvaluation e = evaluate_tradeoff(best, 1e6);
    CHECK(e.competitive_ratio == doctest::Approx(5.5).epsilon(1e-5));
    CHECK(e.scaled_energy == doctest::Approx(best.limit_scaled_energy).epsilon(1e-4));
}

TEST_CASE("equal-sine family B")
{
    for (int i = 1; i <= 100; ++i) {
        const double eps = 0.05 * i;
        const TradeoffPoint p = tradeoff_family_B_equal(eps);
        REQUIRE(p.b == p.c);
        REQUIRE(std::abs(2.0 / p.b + 3.0 / p.c - (5.0 + eps)) < 1e-12);
        const double closed = (eps + 5.0) / std::sqrt(eps * (eps + 10.0));
        REQUIRE(p.limit_scaled_energy == doctest::Approx(closed).epsilon(1e-12));
        // The 2/sqrt(eps) bound reduces to eps^2 + 6 eps - 15 <= 0.
        REQUIRE((closed <= 2.0 / std::sqrt(eps)) == (eps <= std::sqrt(24.0) - 3.0));
    }
}

TEST_CASE("tradeoff strategies are admissible for large rho")
{
    for (const double rho : {1e2, 1e4}) {
        const Instance inst = Instance::from_rho(rho);
        for (const double eps : {0.25, 1.0, 2.0}) {
            CHECK_NOTHROW(validate_strategy(inst, tradeoff_family_A(eps).strategy_of(inst)));
            CHECK_NOTHROW(validate_strategy(inst, tradeoff_family_B(eps).strategy_of(inst)));
            CHECK_NOTHROW(validate_strategy(inst, tradeoff_family_B_equal(eps).strategy_of(inst)));
        }
    }
}

TEST_CASE("curve table")
{
    const auto rows = curve_table({2.5, 5.0, 10.0});
    REQUIRE(rows.size() == 3);
    for (const CurveRow& r : rows) {
        CHECK(r.naive == doctest::Approx(r.rho));
        CHECK(r.unbounded <= r.one_step + 1e-12);
        CHECK(r.one_step <= r.one_rb + 1e-12);
    }
    CHECK(rows[2].unbounded == doctest::Approx(4.5754420019775271).epsilon(1e-12));
    CHECK_THROWS_AS(curve_table({1.0}), DegenerateInstanceError);
}
