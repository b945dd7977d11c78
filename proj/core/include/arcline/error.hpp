#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arcline {

/// Machine-readable reason attached to every DomainError.
enum class Diagnosis {
  InvalidArgument,
  AmbientMismatch,
  PositiveWeight,
  NotHomogeneous,
  DimensionCondition,
  NonPure,
  InexactDivision,
  InfinitelyManyLines,
  NoLinesThroughGeneralPoint,
  NotSymmetric,
  NegativeExpectedDimension,
  NotPrime,
  PointNotOnVariety,
  Internal,
};

/// Stable snake_case name used in JSON diagnostics.
std::string_view diagnosis_name(Diagnosis d);

/// A well-formed request whose mathematical preconditions fail.
class DomainError : public std::runtime_error {
 public:
  DomainError(Diagnosis diagnosis, const std::string& what)
      : std::runtime_error(what), diagnosis_(diagnosis) {}

  Diagnosis diagnosis() const noexcept { return diagnosis_; }

 private:
  Diagnosis diagnosis_;
};

/// Malformed polynomial text; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace arcline
