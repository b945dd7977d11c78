#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcline {

using BigInt = mpz_class;

/// Arc coordinate x_{coord,weight}: the coefficient of eps^weight in the
/// expansion of the homogeneous coordinate x_coord. Plain coordinates on P^n
/// are the weight-0 variables.
struct Var {
  unsigned coord = 0;
  unsigned weight = 0;

  auto operator<=>(const Var&) const = default;
};

/// Product of arc variables with positive exponents, kept sorted by Var.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial of(Var v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  unsigned exponent(Var v) const;
  unsigned total_degree() const;
  unsigned weight() const;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial with arbitrary-precision integer coefficients over the
/// arc variables. The zero polynomial is the empty term map.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c);
  static SparsePoly variable(Var v);
  static SparsePoly variable(unsigned coord, unsigned weight = 0) {
    return variable(Var{coord, weight});
  }
  static SparsePoly term(const Monomial& m, const BigInt& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(const Monomial& m) const;

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned total_degree() const;
  /// True when every term has the same total degree (the zero polynomial is).
  bool is_homogeneous() const;
  /// True when every term has the same weight.
  bool is_weight_homogeneous() const;
  bool has_positive_weight() const;
  /// Largest coordinate index in use, if any variable appears.
  std::optional<unsigned> max_coord() const;

  void add_term(const Monomial& m, const BigInt& c);

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const SparsePoly& rhs);
  SparsePoly& operator*=(const BigInt& scalar);

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
  friend SparsePoly operator*(SparsePoly lhs, const BigInt& s) { return lhs *= s; }
  friend SparsePoly operator-(SparsePoly p);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(unsigned exponent) const;

 private:
  Terms terms_;
};

/// Exact product; bilinear, commutative and associative.
inline SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }

/// Splits p into weight-homogeneous pieces keyed by weight. The pieces sum to p.
std::map<unsigned, SparsePoly> weight_components(const SparsePoly& p);

/// Evaluates p at an integer point; value(v) supplies x_{v.coord, v.weight}.
BigInt evaluate(const SparsePoly& p, const std::function<BigInt(Var)>& value);

/// Parses the polynomial text grammar:
///
///   integer ::= [0-9]+
///   var     ::= "x" index ("_" weight)?
///   term    ::= integer | var ("^" integer)?
///   expr    ::= terms combined with + - * and parentheses
///
/// A parenthesised group may also be raised to a power and unary signs are
/// accepted. When ambient is given, variable indices above it are rejected.
/// Throws ParseError carrying the byte offset of the problem.
SparsePoly parse_poly(std::string_view text, std::optional<unsigned> ambient = std::nullopt);

/// Prints in the same grammar; parse_poly(to_string(p)) == p. Zero prints "0".
std::string to_string(const SparsePoly& p);
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace arcline
