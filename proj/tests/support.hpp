#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "rendezvous/geometry.hpp"

namespace rendezvous::testing {

// Hand-rolled generators for the property checks.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    /// rho spread log-uniformly over [lo, hi].
    double rho(double lo = 1.5, double hi = 1e3) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    /// Angles inside the admissible box of `instance`.
    Strategy strategy(const Instance& instance, StepCount steps)
    {
        const double top = kHalfPi - instance.alpha();
        return Strategy{steps, uniform(0.0, top), uniform(0.0, top)};
    }

private:
    std::mt19937_64 engine_;
};

inline bool close_rel(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace rendezvous::testing
