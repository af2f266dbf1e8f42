#pragma once

#include <stdexcept>
#include <string>

namespace exk {

// Oracle size caps are hard errors: an oracle must never silently approximate.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A drawing failed the legality rules; crossing counts would be ill-defined.
struct IllegalDrawingError : std::runtime_error {
  explicit IllegalDrawingError(const std::string& what) : std::runtime_error(what) {}
};

// Two independently computed routes to the same quantity disagreed, or a
// proven bound was breached. Indicates a bug, not bad input.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

// The annealer could not find a legal placement on the requested grid.
struct GridTooSmallError : std::runtime_error {
  explicit GridTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exk
