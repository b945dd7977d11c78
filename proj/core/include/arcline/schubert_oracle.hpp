#pragma once

// Schubert calculus on the Grassmannian of lines G(2, n+1), used as an
// independent check on the arc-space line counts. Nothing here depends on
// chow_ring or line_locus.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arcline/ci_type.hpp"
#include "arcline/polycore.hpp"

namespace arcline::schubert {

/// Partition (a, b) with n-1 >= a >= b >= 0 indexing sigma_{a,b}.
struct Partition {
  unsigned a = 0;
  unsigned b = 0;

  auto operator<=>(const Partition&) const = default;
};

class SchubertClass {
 public:
  using Terms = std::map<Partition, BigInt>;

  /// The zero class on G(2, ambient+1).
  explicit SchubertClass(unsigned ambient);

  /// sigma_{a,b}; zero if the partition leaves the (n-1) x 2 box.
  static SchubertClass sigma(unsigned ambient, unsigned a, unsigned b);

  unsigned ambient() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(unsigned a, unsigned b) const;

  /// Coefficient of the point class sigma_{n-1,n-1}.
  BigInt integral() const { return coefficient(n_ - 1, n_ - 1); }

  void add(const Partition& p, const BigInt& c);
  SchubertClass& operator+=(const SchubertClass& rhs);

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

 private:
  unsigned n_;
  Terms terms_;
};

enum class Generator { Sigma1, Sigma11 };

/// sigma_1 * sigma_{a,b} = sigma_{a+1,b} + sigma_{a,b+1};
/// sigma_{1,1} * sigma_{a,b} = sigma_{a+1,b+1}; terms outside the box drop.
SchubertClass pieri_mul(const SchubertClass& c, Generator g);

/// A linear form p*x1 + q*x2 in the Chern roots of the dual tautological bundle.
struct RootFactor {
  long long x1 = 0;
  long long x2 = 0;
};

/// Polynomial in e1 = x1 + x2 and e2 = x1 x2; key (i, k) is e1^i e2^k.
using ElementaryPoly = std::map<std::pair<unsigned, unsigned>, BigInt>;

/// Expands prod (p x1 + q x2) and rewrites it in e1, e2 by repeatedly
/// peeling off the leading term. Throws DomainError(NotSymmetric) if the
/// product is not symmetric in x1, x2.
ElementaryPoly symmetric_expand(std::span<const RootFactor> factors);

/// Substitutes e1 -> sigma_1, e2 -> sigma_{1,1} and multiplies out from sigma_{0,0}.
SchubertClass to_schubert(const ElementaryPoly& poly, unsigned ambient);

/// prod_j prod_{i=0}^{d_j} (i x1 + (d_j - i) x2): the Chern roots of
/// Sym^{d_j} of the dual tautological bundle.
std::vector<RootFactor> chern_root_factors(const CIType& t);

/// Number of lines, integrating the top Chern class of the bundle of
/// restricted equations. Requires sum (d_j + 1) = 2(n-1).
BigInt oracle_count_lines(const CIType& t);

/// Plücker degree of the Fano scheme of lines: integrates the same class
/// times sigma_1^k, k = 2(n-1) - r - sum d_j >= 0.
BigInt fano_degree(const CIType& t);

std::string to_string(const SchubertClass& c);
std::string to_string(const ElementaryPoly& p);

}  // namespace arcline::schubert
