#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "arcline/polycore.hpp"

namespace arcline {

/// Exponent pair of a monomial u^a v^b in two generators.
struct Exponents {
  unsigned a = 0;
  unsigned b = 0;

  auto operator<=>(const Exponents&) const = default;
};

/// Formal integer combination of u^a v^b, not reduced by any relation.
using BivariateForm = std::map<Exponents, BigInt>;

/// Element of A(P^n_1) = Z[h0,h1] / (h0^{n+1}, h1^n + h1^{n-1} h0 + ... + h0^n),
/// always held in normal form: every stored h0^a h1^b has a <= n and b <= n-1.
class ChowClass {
 public:
  /// The zero class.
  explicit ChowClass(unsigned ambient);

  static ChowClass one(unsigned ambient);
  static ChowClass h0(unsigned ambient);
  static ChowClass h1(unsigned ambient);
  static ChowClass monomial(unsigned ambient, unsigned a, unsigned b, const BigInt& c = 1);

  unsigned ambient() const noexcept { return n_; }
  const BivariateForm& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// The single (exponents, coefficient) pair when the class is a nonzero
  /// multiple of one monomial.
  std::optional<std::pair<Exponents, BigInt>> single_term() const;

  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  ChowClass& operator*=(const BigInt& scalar);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const BigInt& s) { return a *= s; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  /// Exact division of every coefficient. Throws DomainError(InexactDivision)
  /// if some coefficient is not a multiple of divisor.
  ChowClass divide_exact(const BigInt& divisor) const;

 private:
  friend ChowClass normal_form(const BivariateForm& raw, unsigned ambient);

  unsigned n_;
  BivariateForm terms_;
};

/// Reduces a formal combination of h0^a h1^b. Monomials of h1-degree >= n are
/// rewritten with h1^n = -(h1^{n-1} h0 + ... + h0^n), highest h1-degree first;
/// monomials with a > n or a + b > 2n - 1 vanish.
ChowClass normal_form(const BivariateForm& raw, unsigned ambient);

/// Normal form of the product; throws DomainError(AmbientMismatch).
ChowClass mul(const ChowClass& a, const ChowClass& b);

/// A linear form p*h0 + q*h1.
struct LinearFactor {
  long long h0 = 0;
  long long h1 = 0;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// Normal form of the product of (p h0 + q h1) over factors.
ChowClass linear_product(std::span<const LinearFactor> factors, unsigned ambient);

BigInt coefficient(const ChowClass& c, unsigned a, unsigned b);

/// Formal combination in the tangent-bundle generators j0 = h0, j1 = h1 - h0.
struct JCombination {
  unsigned ambient = 0;
  BivariateForm terms;  // (a, b) -> coefficient of j0^a j1^b

  friend bool operator==(const JCombination&, const JCombination&) = default;
};

/// Substitutes h0 = j0, h1 = j0 + j1 without reducing.
JCombination to_j_basis(const ChowClass& c);

/// Substitutes j0 = h0, j1 = h1 - h0 and reduces in the h-presentation.
ChowClass from_j_basis(const JCombination& j);

/// Reduces in the j-presentation Z[j0,j1] / (j0^{n+1}, sum_{i=0}^n C(n+1,i) j0^i j1^{n-i}).
JCombination j_normal_form(const JCombination& j);

/// Formal product of two j-combinations (no reduction).
JCombination j_multiply(const JCombination& a, const JCombination& b);

/// Renders e.g. "650*h0^2*h1^3 + 1225*h0^3*h1^2 + 650*h0^4*h1".
std::string to_string(const ChowClass& c);
std::string to_string(const JCombination& j);
std::ostream& operator<<(std::ostream& os, const ChowClass& c);

}  // namespace arcline
