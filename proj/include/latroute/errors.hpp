#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latroute {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No s-t walk satisfies the active constraints (hop bound, budget, or plain
// reachability).
struct NoFeasiblePath : Error {
  using Error::Error;
};

// The solve would allocate more path records than the configured cap.
struct ResourceExceeded : Error {
  ResourceExceeded(std::uint64_t cap_, std::uint64_t required_)
      : Error("record cap exceeded: cap=" + std::to_string(cap_) +
              ", required>=" + std::to_string(required_)),
        cap(cap_),
        required(required_) {}

  std::uint64_t cap;
  std::uint64_t required;
};

// Exhaustive enumeration hit its walk cap before finishing.
struct EnumerationTooLarge : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& message, int line_)
      : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}

  int line;
};

struct InvalidWalk : Error {
  using Error::Error;
};

}  // namespace latroute
