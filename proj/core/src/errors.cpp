#include "afflow/errors.hpp"

#include <sstream>

namespace afflow {

namespace {

std::string nonconvex_message(double min_value, std::size_t index) {
  std::ostringstream os;
  os << "body is not strictly convex: min radius of curvature " << min_value
     << " at grid index " << index;
  return os.str();
}

std::string origin_message(double value, std::size_t index) {
  std::ostringstream os;
  os << "origin is not interior: support value " << value
     << " at grid index " << index;
  return os.str();
}

}  // namespace

NonConvexError::NonConvexError(double min_value, std::size_t index)
    : std::runtime_error(nonconvex_message(min_value, index)),
      min_value_(min_value),
      index_(index) {}

OriginNotInteriorError::OriginNotInteriorError(double value, std::size_t index)
    : std::runtime_error(origin_message(value, index)),
      value_(value),
      index_(index) {}

NonFiniteError::NonFiniteError(std::size_t index)
    : std::runtime_error("non-finite value at index " + std::to_string(index)),
      index_(index) {}

FrameFailureError::FrameFailureError(double condition)
    : std::runtime_error("moment matrix too ill-conditioned for an SL(2) frame"
                         " (cond " + std::to_string(condition) + ")"),
      condition_(condition) {}

InsufficientDataError::InsufficientDataError(const std::string& what)
    : std::runtime_error(what) {}

SerializationError::SerializationError(const std::string& what)
    : std::runtime_error(what) {}

}  // namespace afflow
