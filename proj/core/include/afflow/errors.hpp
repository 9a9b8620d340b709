#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afflow {

/// The radius of curvature dropped to or below the configured floor
/// somewhere on the grid. Carries the offending minimum and its index.
class NonConvexError : public std::runtime_error {
 public:
  NonConvexError(double min_value, std::size_t index);

  double min_value() const noexcept { return min_value_; }
  std::size_t index() const noexcept { return index_; }

 private:
  double min_value_;
  std::size_t index_;
};

/// The support function is non-positive somewhere, i.e. the origin is not
/// strictly inside the body.
class OriginNotInteriorError : public std::runtime_error {
 public:
  OriginNotInteriorError(double value, std::size_t index);

  double value() const noexcept { return value_; }
  std::size_t index() const noexcept { return index_; }

 private:
  double value_;
  std::size_t index_;
};

/// NaN or infinity in numeric input; index points at the first offender.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(std::size_t index);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Second-moment matrix too ill-conditioned to define an SL(2) frame.
class FrameFailureError : public std::runtime_error {
 public:
  explicit FrameFailureError(double condition);

  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// A trajectory-level diagnostic was asked for with too few records.
class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& what);
};

/// Malformed or incompatible serialized body data.
class SerializationError : public std::runtime_error {
 public:
  explicit SerializationError(const std::string& what);
};

}  // namespace afflow
