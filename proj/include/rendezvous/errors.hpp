#pragma once

#include <stdexcept>
#include <string>

namespace rendezvous {

/// Instance parameters outside the non-degenerate range (rho <= sqrt(2), alpha >= pi/4).
class DegenerateInstanceError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Darting angles outside the admissible box for the instance they are paired with.
class InvalidStrategyError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric procedure left its domain (negative discriminant, empty bracket, ...).
class NumericDomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Requested evaluation lies outside the range the routine is validated for.
class OutOfValidatedRangeError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

}  // namespace rendezvous
