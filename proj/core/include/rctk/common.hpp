#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace rctk {

using Rational = boost::rational<long long>;

/// Malformed or inconsistent input (parse errors, violated preconditions).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration or search exceeded its configured work budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A delta/psi step could not proceed on the given state.
struct bijection_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Work budget shared by enumeration routines. `used` counts candidate
/// partial assignments, not results.
struct Budget {
  long long limit = 1'000'000;
  long long used = 0;

  void tick(long long amount = 1) {
    used += amount;
    if (used > limit)
      throw budget_exceeded("work budget exceeded (" + std::to_string(limit) + ")");
  }
};

/// Renders a doubled value as "k" or "k/2".
std::string half_to_string(long long doubled);

}  // namespace rctk
