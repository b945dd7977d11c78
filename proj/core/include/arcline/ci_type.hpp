#pragma once

#include <string>
#include <vector>

#include "arcline/polycore.hpp"

namespace arcline {

/// Ambient dimension n together with the degrees (d_1, ..., d_r) of a
/// complete intersection in P^n.
class CIType {
 public:
  /// Throws DomainError(InvalidArgument) unless n >= 2, 1 <= r <= n - 1 and
  /// every d_j >= 1.
  CIType(unsigned ambient, std::vector<unsigned> degrees);

  unsigned ambient() const noexcept { return n_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  unsigned codim() const noexcept { return static_cast<unsigned>(degrees_.size()); }
  /// m = n - r
  unsigned dimension() const noexcept { return n_ - codim(); }
  unsigned degree_sum() const;
  /// d = prod d_j, the degree of the complete intersection.
  BigInt degree() const;
  bool all_degrees_at_least(unsigned k) const;

  friend bool operator==(const CIType&, const CIType&) = default;

 private:
  unsigned n_;
  std::vector<unsigned> degrees_;
};

/// "(3,4) in P^8"
std::string to_string(const CIType& t);

}  // namespace arcline
