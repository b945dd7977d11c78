#pragma once

#include <cstdint>
#include <vector>

#include "arcline/polycore.hpp"

namespace arcline::ff {

/// Homogeneous coordinates over F_p, entries in [0, p).
using FFPoint = std::vector<std::uint32_t>;

/// A line given by the reduced row-echelon basis of its 2-plane: base is the
/// first row, direction the second. This pair is the canonical representative.
struct FFLine {
  FFPoint base;
  FFPoint direction;

  friend bool operator==(const FFLine&, const FFLine&) = default;
};

/// Prime modulus, ambient dimension and defining equations of a variety in
/// P^n(F_p). Coefficients are reduced mod p when the config is compiled.
struct FFConfig {
  std::uint32_t prime = 2;
  unsigned ambient = 1;
  std::vector<SparsePoly> generators;
};

bool is_prime(std::uint64_t p);

/// Exhaustive search over the lines of P^n(F_p).
///
/// Containment uses the arc criterion: a line with basis (p, v) lies on
/// {f = 0} iff f^(i)(p, v) = 0 in F_p for i = 0..deg f, where f^(i) are the
/// full-expansion coefficients of f for 1-arcs. Counts are of F_p-rational
/// lines only, never of geometric lines.
class LineSearch {
 public:
  /// Throws DomainError for a non-prime modulus, a prime of 2^31 or more,
  /// non-homogeneous generators or variables outside x0..xn.
  explicit LineSearch(FFConfig config);

  const FFConfig& config() const noexcept { return config_; }

  /// Number of lines of P^n(F_p) visited by a full search (the Gaussian
  /// binomial [n+1 choose 2]_p).
  std::uint64_t total_lines() const;

  std::vector<FFLine> lines() const;
  std::uint64_t count_lines() const;

  /// Lines through pt, one per direction class modulo pt. Throws
  /// DomainError(PointNotOnVariety) if some generator does not vanish at pt.
  std::vector<FFLine> lines_through(const FFPoint& pt) const;
  std::uint64_t count_lines_through(const FFPoint& pt) const;

  /// Arc criterion for a single (base, direction) pair.
  bool contains(const FFPoint& base, const FFPoint& direction) const;

  /// Whether every generator vanishes at pt.
  bool on_variety(const FFPoint& pt) const;

  /// Reduces a point to [0, p) and scales its first nonzero entry to 1.
  /// Throws DomainError on the zero vector or a wrong length.
  FFPoint normalize(const std::vector<long long>& coords) const;

 private:
  struct CompiledTerm {
    std::uint64_t coeff;
    std::vector<std::pair<unsigned, unsigned>> factors;  // (slot, exponent); slot = 2*coord + weight
  };
  using CompiledPoly = std::vector<CompiledTerm>;

  std::uint64_t eval(const CompiledPoly& poly, const std::vector<std::uint64_t>& slots) const;

  FFConfig config_;
  std::vector<CompiledPoly> conditions_;  // every f^(i) of every generator
  std::vector<CompiledPoly> equations_;   // the generators themselves
};

std::uint64_t count_lines_ff(const FFConfig& cfg);
std::uint64_t count_lines_through_point_ff(const FFConfig& cfg, const FFPoint& pt);

}  // namespace arcline::ff
