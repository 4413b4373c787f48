#include "rendezvous/geometry.hpp"

#include <cmath>
#include <sstream>

#include "rendezvous/errors.hpp"

namespace rendezvous {

namespace {

std::string describe(double value)
{
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

}  // namespace

Instance Instance::from_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < kPi / 4.0)) {
        throw DegenerateInstanceError("alpha must satisfy 0 < alpha < pi/4, got " + describe(alpha));
    }
    return Instance{alpha};
}

Instance Instance::from_rho(double rho)
{
    if (!(rho > std::numbers::sqrt2) || !std::isfinite(rho)) {
        throw DegenerateInstanceError("rho must satisfy rho > sqrt(2), got " + describe(rho));
    }
    return Instance{std::asin(1.0 / rho)};
}

double Instance::rho() const noexcept
{
    return 1.0 / std::sin(alpha_);
}

Instance instance_from_rho(double rho)
{
    return Instance::from_rho(rho);
}

double rho_of(const Instance& instance) noexcept
{
    return instance.rho();
}

StepCount StepCount::finite(std::int64_t k)
{
    if (k < 1) {
        throw InvalidStrategyError("step count must be positive, got " + std::to_string(k));
    }
    return StepCount{k};
}

std::string StepCount::to_string() const
{
    return is_unbounded() ? std::string{"inf"} : std::to_string(k_);
}

void validate_strategy(const Instance& instance, const Strategy& strategy)
{
    const double upper = kHalfPi - instance.alpha() + kAngleSlack;
    auto check = [&](double angle, const char* name) {
        if (!(angle >= 0.0 && angle <= upper)) {
            throw InvalidStrategyError(std::string{name} + " = " + describe(angle) +
                                       " outside [0, pi/2 - alpha] for alpha = " +
                                       describe(instance.alpha()));
        }
    };
    check(strategy.beta, "beta");
    check(strategy.gamma, "gamma");
}

DartingGeometry darting_geometry_raw(double alpha, double beta, double gamma) noexcept
{
    const double csc_theta = 1.0 / std::sin(alpha + beta);
    const double csc_delta = 1.0 / std::sin(2.0 * alpha + gamma);
    DartingGeometry g;
    g.w = std::sin(alpha) * csc_theta;
    g.y = std::sin(beta) * csc_theta;
    g.x = g.y * std::sin(gamma) * csc_delta;
    g.d = g.y * std::sin(2.0 * alpha) * csc_delta;
    return g;
}

DartingGeometry darting_geometry(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    const double alpha = instance.alpha();
    if (bounds == Bounds::Checked) {
        validate_strategy(instance, strategy);
    } else {
        const bool ok = strategy.beta >= 0.0 && strategy.gamma >= 0.0 &&
                        alpha + strategy.beta < kPi && 2.0 * alpha + strategy.gamma < kPi;
        if (!ok) {
            throw InvalidStrategyError("darting triangle does not exist for beta = " +
                                       describe(strategy.beta) + ", gamma = " +
                                       describe(strategy.gamma));
        }
    }
    return darting_geometry_raw(alpha, strategy.beta, strategy.gamma);
}

bool shrink_condition(double alpha, double beta, double gamma) noexcept
{
    return std::sin(beta) * std::sin(gamma) < std::sin(alpha + beta) * std::sin(2.0 * alpha + gamma);
}

Strategy greedy_bisector_strategy(const Instance& instance) noexcept
{
    const double angle = kHalfPi - instance.alpha();
    return Strategy{StepCount::unbounded(), angle, angle};
}

}  // namespace rendezvous
