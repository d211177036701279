#pragma once

#include <stdexcept>
#include <string>

namespace foulkes {

// Invalid mathematical input: weight mismatches, malformed partitions,
// out-of-range cut positions. Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation was refused because it exceeds a configured resource
// bound. Maps to CLI exit code 3.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// An inner product that must be integral came out fractional, or a
// multiplicity that must be nonnegative came out negative. Signals a
// corrupted class function or an internal bug, never bad user input.
struct IntegralityError : std::logic_error {
  explicit IntegralityError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace foulkes
