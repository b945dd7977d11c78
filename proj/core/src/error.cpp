#include "arcline/error.hpp"

namespace arcline {

std::string_view diagnosis_name(Diagnosis d) {
  switch (d) {
    case Diagnosis::InvalidArgument: return "invalid_argument";
    case Diagnosis::AmbientMismatch: return "ambient_mismatch";
    case Diagnosis::PositiveWeight: return "positive_weight";
    case Diagnosis::NotHomogeneous: return "not_homogeneous";
    case Diagnosis::DimensionCondition: return "dimension_condition";
    case Diagnosis::NonPure: return "non_pure";
    case Diagnosis::InexactDivision: return "inexact_division";
    case Diagnosis::InfinitelyManyLines: return "infinitely_many_lines";
    case Diagnosis::NoLinesThroughGeneralPoint: return "no_lines_through_general_point";
    case Diagnosis::NotSymmetric: return "not_symmetric";
    case Diagnosis::NegativeExpectedDimension: return "negative_expected_dimension";
    case Diagnosis::NotPrime: return "not_prime";
    case Diagnosis::PointNotOnVariety: return "point_not_on_variety";
    case Diagnosis::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace arcline
