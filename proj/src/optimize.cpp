#include "rendezvous/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"

namespace rendezvous {

namespace {

// Eliminating gamma from
//   (3/4) cos gamma = cos(alpha + beta),  (2/3) cos beta = cos(2 alpha + gamma)
// and dividing by cos^2 beta leaves a quadratic in t = tan beta:
//   A t^2 + B t + K = 0,
//   A = (9/4) cos^2 a - 1,
//   B = (2 cos a - cos 2a) / sin a,
//   K = (9 sin^2 a cos^2 a - 4 cos^2 a + 4 cos 2a cos a - 1) / (4 sin^2 a).
// The admissible critical point is the positive root.
double critical_tan_beta(double alpha)
{
    const double s = std::sin(alpha);
    const double c = std::cos(alpha);
    const double c2 = std::cos(2.0 * alpha);
    const double a = 2.25 * c * c - 1.0;
    const double b = (2.0 * c - c2) / s;
    const double k = (9.0 * s * s * c * c - 4.0 * c * c + 4.0 * c2 * c - 1.0) / (4.0 * s * s);
    const double disc = b * b - 4.0 * a * k;
    if (!(disc >= 0.0) || a == 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "critical-point quadratic has no real root at alpha = " << alpha << " (A = " << a
           << ", B = " << b << ", K = " << k << ", discriminant = " << disc << ")";
        throw NumericDomainError(os.str());
    }
    // Stable pair of roots: q / a and k / q.
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double r1 = q / a;
    const double r2 = k / q;
    return std::max(r1, r2);
}

// gamma from cos gamma (first equation) and sin 2a sin gamma (second equation).
double critical_gamma(double alpha, double beta)
{
    const double cos_gamma = (4.0 / 3.0) * std::cos(alpha + beta);
    const double scaled_sin =
        std::cos(2.0 * alpha) * cos_gamma - (2.0 / 3.0) * std::cos(beta);
    return std::atan2(scaled_sin, std::sin(2.0 * alpha) * cos_gamma);
}

double unbounded_objective(double alpha, double beta, double gamma)
{
    return expected_time_from_geometry(darting_geometry_raw(alpha, beta, gamma), StepCount::unbounded());
}

bool in_box(double alpha, double beta, double gamma)
{
    const double upper = kHalfPi - alpha + kAngleSlack;
    return beta >= 0.0 && beta <= upper && gamma >= 0.0 && gamma <= upper;
}

std::array<double, 2> symmetric_eigenvalues(const std::array<std::array<double, 2>, 2>& m)
{
    const double mean = 0.5 * (m[0][0] + m[1][1]);
    const double half_diff = 0.5 * (m[0][0] - m[1][1]);
    const double radius = std::hypot(half_diff, m[0][1]);
    return {mean - radius, mean + radius};
}

}  // namespace

double one_round_gamma_regime_alpha()
{
    return 0.5 * std::acos(2.0 / 3.0);
}

double interior_critical_alpha_limit()
{
    // gamma of the critical point changes sign here; bisect on sin 2a sin gamma.
    static const double limit = [] {
        auto sign_term = [](double alpha) {
            const double beta = std::atan(critical_tan_beta(alpha));
            return std::cos(2.0 * alpha) * (4.0 / 3.0) * std::cos(alpha + beta) -
                   (2.0 / 3.0) * std::cos(beta);
        };
        double lo = 0.3;
        double hi = 0.6;
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            const double mid = 0.5 * (lo + hi);
            (sign_term(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return limit;
}

Strategy optimal_1rb(const Instance& instance)
{
    const double beta = std::max(0.0, std::acos(0.75) - instance.alpha());
    return Strategy{StepCount::finite(1), beta, 0.0};
}

Strategy optimal_1rb2(const Instance& instance)
{
    const double alpha = instance.alpha();
    if (alpha > one_round_gamma_regime_alpha()) {
        return optimal_1rb(instance);
    }
    const double gamma = std::max(0.0, std::acos(2.0 / 3.0) - 2.0 * alpha);
    const double beta = std::acos(0.75 * std::cos(gamma)) - alpha;
    return Strategy{StepCount::finite(1), beta, gamma};
}

CriticalAngles critical_point_inf(double alpha)
{
    const double beta = std::atan(critical_tan_beta(alpha));
    return CriticalAngles{beta, critical_gamma(alpha, beta)};
}

std::pair<double, double> critical_gamma_routes(double alpha, double beta)
{
    return {std::acos(std::clamp((4.0 / 3.0) * std::cos(alpha + beta), -1.0, 1.0)),
            std::acos(std::clamp((2.0 / 3.0) * std::cos(beta), -1.0, 1.0)) - 2.0 * alpha};
}

Optimum optimal_inf(const Instance& instance)
{
    const double alpha = instance.alpha();
    if (alpha < interior_critical_alpha_limit()) {
        const CriticalAngles angles = critical_point_inf(alpha);
        if (in_box(alpha, angles.beta, angles.gamma)) {
            return Optimum{Strategy{StepCount::unbounded(), angles.beta, angles.gamma},
                           OptimumSource::ClosedForm};
        }
    }
    return Optimum{grid_refine(instance, StepCount::unbounded()), OptimumSource::NumericFallback};
}

std::pair<double, double> residuals_inf(const Instance& instance, const Strategy& strategy)
{
    validate_strategy(instance, strategy);
    const double a = instance.alpha();
    return {0.75 * std::cos(strategy.gamma) - std::cos(a + strategy.beta),
            (2.0 / 3.0) * std::cos(strategy.beta) - std::cos(2.0 * a + strategy.gamma)};
}

std::pair<double, double> residuals_1rb2(const Instance& instance, const Strategy& strategy)
{
    validate_strategy(instance, strategy);
    const double a = instance.alpha();
    return {std::cos(2.0 * a + strategy.gamma) - 2.0 / 3.0,
            std::cos(a + strategy.beta) - 0.75 * std::cos(strategy.gamma)};
}

CriticalPointReport hessian_check_inf(const Instance& instance)
{
    const double alpha = instance.alpha();
    if (!(alpha < 0.5)) {
        throw OutOfValidatedRangeError("Hessian check is validated for alpha < 1/2 only");
    }
    const CriticalAngles p = critical_point_inf(alpha);
    auto f = [alpha](double beta, double gamma) { return unbounded_objective(alpha, beta, gamma); };

    auto hessian_at_step = [&](double h) {
        const double f0 = f(p.beta, p.gamma);
        std::array<std::array<double, 2>, 2> m{};
        m[0][0] = (f(p.beta + h, p.gamma) - 2.0 * f0 + f(p.beta - h, p.gamma)) / (h * h);
        m[1][1] = (f(p.beta, p.gamma + h) - 2.0 * f0 + f(p.beta, p.gamma - h)) / (h * h);
        m[0][1] = (f(p.beta + h, p.gamma + h) - f(p.beta + h, p.gamma - h) -
                   f(p.beta - h, p.gamma + h) + f(p.beta - h, p.gamma - h)) /
                  (4.0 * h * h);
        m[1][0] = m[0][1];
        return m;
    };

    constexpr double h = 1e-5;
    const auto coarse = hessian_at_step(h);
    const auto fine = hessian_at_step(0.5 * h);

    CriticalPointReport report;
    report.beta_bar = p.beta;
    report.gamma_bar = p.gamma;
    report.residual_1 = 0.75 * std::cos(p.gamma) - std::cos(alpha + p.beta);
    report.residual_2 = (2.0 / 3.0) * std::cos(p.beta) - std::cos(2.0 * alpha + p.gamma);
    report.gradient = {(f(p.beta + h, p.gamma) - f(p.beta - h, p.gamma)) / (2.0 * h),
                       (f(p.beta, p.gamma + h) - f(p.beta, p.gamma - h)) / (2.0 * h)};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            report.hessian[i][j] = (4.0 * fine[i][j] - coarse[i][j]) / 3.0;
        }
    }
    report.hessian_eigenvalues = symmetric_eigenvalues(report.hessian);
    return report;
}

Strategy grid_refine(const Instance& instance, StepCount steps, const GridOptions& options)
{
    const double alpha = instance.alpha();
    const double upper = kHalfPi - alpha;
    const int n = std::max(options.grid_points, 2);
    const bool two_d = !options.gamma_fixed_zero;

    auto objective = [&](double beta, double gamma) {
        return expected_time_from_geometry(darting_geometry_raw(alpha, beta, gamma), steps);
    };

    double best_beta = 0.0;
    double best_gamma = 0.0;
    double best = objective(0.0, 0.0);
    const double spacing = upper / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
        const double beta = spacing * i;
        for (int j = 0; j < (two_d ? n : 1); ++j) {
            const double gamma = spacing * j;
            const double value = objective(beta, gamma);
            if (value < best) {
                best = value;
                best_beta = beta;
                best_gamma = gamma;
            }
        }
    }

    // Compass search with axis and diagonal moves, halving the step on failure.
    static constexpr std::array<std::array<int, 2>, 8> kMoves{
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    double step = spacing;
    while (step >= options.min_step) {
        bool improved = false;
        double cand_beta = best_beta;
        double cand_gamma = best_gamma;
        double cand_value = best;
        for (const auto& move : kMoves) {
            if (!two_d && move[1] != 0) {
                continue;
            }
            const double beta = std::clamp(best_beta + move[0] * step, 0.0, upper);
            const double gamma = std::clamp(best_gamma + move[1] * step, 0.0, upper);
            const double value = objective(beta, gamma);
            if (value < cand_value) {
                cand_value = value;
                cand_beta = beta;
                cand_gamma = gamma;
                improved = true;
            }
        }
        if (improved) {
            best = cand_value;
            best_beta = cand_beta;
            best_gamma = cand_gamma;
        } else {
            step *= 0.5;
        }
    }
    return Strategy{steps, best_beta, best_gamma};
}

}  // namespace rendezvous
