#pragma once

#include <cstdint>
#include <numbers>
#include <string>

namespace rendezvous {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Slack allowed when checking darting angles against pi/2 - alpha, so that
/// values computed as `kHalfPi - alpha` are accepted.
inline constexpr double kAngleSlack = 1e-12;

/// A problem instance on the unit disk: agents sit on the perimeter at arc
/// distance 2*alpha. The reference distance rho = 1/sin(alpha) is derived.
class Instance
{
public:
    /// Throws DegenerateInstanceError unless 0 < alpha < pi/4.
    static Instance from_alpha(double alpha);
    /// Throws DegenerateInstanceError unless rho > sqrt(2).
    static Instance from_rho(double rho);

    double alpha() const noexcept { return alpha_; }
    double rho() const noexcept;

private:
    explicit Instance(double alpha) noexcept : alpha_(alpha) {}

    double alpha_;
};

Instance instance_from_rho(double rho);
double rho_of(const Instance& instance) noexcept;

/// Number of random rounds of a strategy; either a positive count or unbounded.
class StepCount
{
public:
    static StepCount finite(std::int64_t k);
    static constexpr StepCount unbounded() noexcept { return StepCount{0}; }

    bool is_unbounded() const noexcept { return k_ == 0; }
    /// Only meaningful when !is_unbounded().
    std::int64_t count() const noexcept { return k_; }

    std::string to_string() const;

    friend bool operator==(StepCount, StepCount) = default;

private:
    explicit constexpr StepCount(std::int64_t k) noexcept : k_(k) {}

    std::int64_t k_;
};

/// A k-round strategy with darting angles beta (random move) and gamma
/// (opposite move). Bounds are checked only when paired with an instance.
struct Strategy
{
    StepCount steps = StepCount::finite(1);
    double beta = 0.0;
    double gamma = 0.0;
};

/// Lengths of one round on a unit disk.
///   w: first darting travel, y: radius after the first darting,
///   d: second darting travel, x: radius after the full round.
struct DartingGeometry
{
    double w = 0.0;
    double y = 0.0;
    double d = 0.0;
    double x = 0.0;
};

enum class Bounds
{
    Checked,    ///< require 0 <= beta, gamma <= pi/2 - alpha
    Unchecked,  ///< only require the triangles to exist (alpha+beta < pi, 2alpha+gamma < pi)
};

/// Throws InvalidStrategyError if the angles violate the admissible box.
void validate_strategy(const Instance& instance, const Strategy& strategy);

DartingGeometry darting_geometry(const Instance& instance, const Strategy& strategy,
                                 Bounds bounds = Bounds::Checked);

/// Raw per-round formulas with no range checks at all.
DartingGeometry darting_geometry_raw(double alpha, double beta, double gamma) noexcept;

/// sin(beta) sin(gamma) < sin(alpha+beta) sin(2alpha+gamma), the condition for x < 1.
bool shrink_condition(double alpha, double beta, double gamma) noexcept;

/// The greedy-bisector strategy: unbounded rounds, beta = gamma = pi/2 - alpha.
Strategy greedy_bisector_strategy(const Instance& instance) noexcept;

}  // namespace rendezvous
