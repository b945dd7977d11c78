#pragma once

#include <limits>
#include <vector>

#include "arcline/polycore.hpp"

namespace arcline {

/// Coefficients of a polynomial after the substitution x_j -> sum_i x_{j,i} eps^i.
///
/// coefficients[i] is the eps^i coefficient. Every entry is weight-homogeneous
/// of weight i; for a homogeneous source of degree d it is also homogeneous of
/// total degree d.
struct ProlongedSystem {
  unsigned source_degree = 0;
  unsigned order = 0;
  /// True for the truncated arc-ideal generators (mod eps^{order+1}); false
  /// for the full expansion, which stops at cutoff = degree * order.
  bool truncated = true;
  unsigned cutoff = 0;
  std::vector<SparsePoly> coefficients;
};

/// The order+1 generators f_0..f_m of the m-th arc space ideal of {f = 0}.
/// Throws DomainError(PositiveWeight) if f already uses arc coordinates.
ProlongedSystem arc_ideal(const SparsePoly& f, unsigned order);

/// All coefficients f^(0)..f^(d*m) of the untruncated substitution; higher
/// coefficients vanish identically. f must be homogeneous.
ProlongedSystem full_expansion(const SparsePoly& f, unsigned order);

/// A concrete arc on P^n in homogeneous coordinates: coords[j][i] = x_{j,i}.
class Arc {
 public:
  /// Throws DomainError if the shape is ragged or the base point is zero.
  explicit Arc(std::vector<std::vector<BigInt>> coords);

  /// Convenience for 1-arcs: base point p and direction v.
  static Arc first_order(std::vector<BigInt> base, std::vector<BigInt> direction);

  unsigned ambient() const { return static_cast<unsigned>(coords_.size()) - 1; }
  unsigned order() const { return static_cast<unsigned>(coords_.front().size()) - 1; }
  const BigInt& at(unsigned coord, unsigned weight) const { return coords_[coord][weight]; }
  const std::vector<std::vector<BigInt>>& coords() const { return coords_; }

  /// Value of an arc variable; variables beyond the arc's order read as 0.
  BigInt value(Var v) const;

  /// The same arc with the weight-i row scaled by lambda^i (eps -> lambda eps).
  Arc rescaled(const BigInt& lambda) const;

 private:
  std::vector<std::vector<BigInt>> coords_;
};

/// t -> base + t * direction, the curve obtained from a 1-arc by eps -> t.
struct ParamLine {
  std::vector<BigInt> base;
  std::vector<BigInt> direction;
  /// direction is proportional to base (including zero): the map is constant.
  bool degenerate = false;
};

ParamLine line_through(const Arc& arc);

/// Order of contact of the line of a 1-arc with {f = 0}.
struct ContactOrder {
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();
  unsigned value = kInfinite;

  bool infinite() const { return value == kInfinite; }
  friend bool operator==(const ContactOrder&, const ContactOrder&) = default;
};

/// Least i with f^(i)(arc) != 0, or infinite when the line lies in {f = 0}.
ContactOrder line_contact_order(const SparsePoly& f, const Arc& arc);

}  // namespace arcline
