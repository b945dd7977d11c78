#pragma once

#include <optional>
#include <vector>

#include "arcline/polycore.hpp"

namespace arcline {

/// Variety dimension m, optional fixed codimension r, and the least degree
/// allowed among the defining equations.
struct BoundQuery {
  unsigned dimension = 1;
  std::optional<unsigned> codim;
  unsigned min_degree = 2;
};

/// An admissible complete-intersection type with its count prod d_i!.
struct TypeCount {
  std::vector<unsigned> degrees;  // non-increasing
  unsigned ambient = 0;           // n = m + r
  BigInt count;

  friend bool operator==(const TypeCount&, const TypeCount&) = default;
};

/// All non-increasing tuples of exactly `parts` integers >= min_part summing
/// to total, in lexicographically decreasing order.
std::vector<std::vector<unsigned>> partitions(unsigned total, unsigned parts, unsigned min_part);

/// Every type with sum d_i = m + r - 1 and d_i >= min_degree (over all r when
/// the query leaves r open), sorted by count descending, then by r and by
/// degrees. Throws DomainError(InvalidArgument) for m = 0, r = 0 or a minimum
/// degree below 2.
std::vector<TypeCount> enumerate_types(const BoundQuery& q);

/// Largest prod d_i! over enumerate_types, or nullopt when no type is admissible.
std::optional<BigInt> bound(const BoundQuery& q);

BigInt factorial_of(unsigned k);

}  // namespace arcline
