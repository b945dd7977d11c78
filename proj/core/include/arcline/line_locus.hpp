#pragma once

#include <vector>

#include "arcline/chow_ring.hpp"
#include "arcline/ci_type.hpp"

namespace arcline {

/// A line count together with the normal-form class it was read from.
struct LineCount {
  enum class Kind {
    /// certificate = value * h0^{n-1} h1^{n-1}
    WholeVariety,
    /// certificate = value * h0^n h1^{n-1}
    ThroughPoint,
  };

  Kind kind = Kind::WholeVariety;
  BigInt value;
  ChowClass certificate{1};
};

/// Divisor classes (d - i) h0 + i h1, i = 0..d, of the prolonged equations
/// f^(0), ..., f^(d) of one degree-d equation.
std::vector<LinearFactor> divisor_factors(unsigned degree);

/// Concatenated divisor factors of every defining equation.
std::vector<LinearFactor> line_locus_factors(const CIType& t);

/// Class in A(P^n_1) of the 1-arcs whose line lies on a generic complete
/// intersection of type t. Degree-1 equations are accepted here.
ChowClass line_locus_class(const CIType& t);

/// Number of lines on a generic complete intersection with
/// sum d_j = 2(n-1) - r. Requires every d_j >= 2.
///
/// Throws DomainError(DimensionCondition) when the sum is off, and
/// DomainError(NonPure) if the class is not a multiple of h0^{n-1} h1^{n-1}.
LineCount count_lines(const CIType& t);

/// Arcs whose line meets a generic degree-d hypersurface with contact order
/// at least k: the product of the first k divisor factors, 1 <= k <= d + 1.
ChowClass contact_class(unsigned ambient, unsigned degree, unsigned order);

/// Degree of the locus in P^n swept by the base points of c: the coefficient
/// of c * h0^fiber_codim, which must be a single monomial.
BigInt swept_degree(const ChowClass& c, unsigned fiber_codim);

/// Lines through a general point: (L * h0^{n-r}) / prod d_j, read off
/// h0^n h1^{n-1}. Requires sum d_j = n - 1 and every d_j >= 2.
///
/// A smaller sum throws DomainError(InfinitelyManyLines), a larger one
/// DomainError(NoLinesThroughGeneralPoint). The result is checked against
/// prod d_j!.
LineCount lines_through_point(const CIType& t);

}  // namespace arcline
