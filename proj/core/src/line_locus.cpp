#include "arcline/line_locus.hpp"

#include "arcline/error.hpp"

namespace arcline {
namespace {

void require_degrees_at_least_two(const CIType& t, const char* what) {
  if (!t.all_degrees_at_least(2)) {
    throw DomainError(Diagnosis::InvalidArgument,
                      std::string(what) + " requires every dᵢ ≥ 2; cut by the hyperplane and lower the ambient dimension instead");
  }
}

BigInt factorial(unsigned k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

}  // namespace

std::vector<LinearFactor> divisor_factors(unsigned degree) {
  std::vector<LinearFactor> out;
  out.reserve(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) {
    out.push_back(LinearFactor{static_cast<long long>(degree - i), static_cast<long long>(i)});
  }
  return out;
}

std::vector<LinearFactor> line_locus_factors(const CIType& t) {
  std::vector<LinearFactor> out;
  for (unsigned d : t.degrees()) {
    auto block = divisor_factors(d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

ChowClass line_locus_class(const CIType& t) {
  const auto factors = line_locus_factors(t);
  return linear_product(factors, t.ambient());
}

LineCount count_lines(const CIType& t) {
  require_degrees_at_least_two(t, "count_lines");
  const unsigned n = t.ambient();
  const unsigned r = t.codim();
  const long long expected = 2LL * (n - 1) - r;
  if (static_cast<long long>(t.degree_sum()) != expected) {
    throw DomainError(Diagnosis::DimensionCondition,
                      "finitely many lines requires Σdᵢ = 2(n−1)−r (expected " + std::to_string(expected) + ", got " +
                          std::to_string(t.degree_sum()) + ")");
  }
  LineCount out;
  out.kind = LineCount::Kind::WholeVariety;
  out.certificate = line_locus_class(t);
  for (const auto& [e, c] : out.certificate.terms()) {
    if (e.a != n - 1 || e.b != n - 1) {
      throw DomainError(Diagnosis::NonPure, "line-locus class " + to_string(out.certificate) +
                                                " is not a multiple of h0^(n-1)*h1^(n-1)");
    }
  }
  out.value = coefficient(out.certificate, n - 1, n - 1);
  return out;
}

ChowClass contact_class(unsigned ambient, unsigned degree, unsigned order) {
  if (order < 1 || order > degree + 1) {
    throw DomainError(Diagnosis::InvalidArgument, "contact order must satisfy 1 ≤ k ≤ d+1 (got k=" +
                                                      std::to_string(order) + ", d=" + std::to_string(degree) + ")");
  }
  auto factors = divisor_factors(degree);
  factors.resize(order);
  return linear_product(factors, ambient);
}

BigInt swept_degree(const ChowClass& c, unsigned fiber_codim) {
  const ChowClass cut = mul(c, ChowClass::monomial(c.ambient(), fiber_codim, 0));
  const auto term = cut.single_term();
  if (!term) {
    throw DomainError(Diagnosis::NonPure, "class times h0^" + std::to_string(fiber_codim) + " is " + to_string(cut) +
                                              ", not a multiple of a single monomial");
  }
  return term->second;
}

LineCount lines_through_point(const CIType& t) {
  require_degrees_at_least_two(t, "lines_through_point");
  const unsigned n = t.ambient();
  const unsigned sum = t.degree_sum();
  if (sum < n - 1) {
    throw DomainError(Diagnosis::InfinitelyManyLines,
                      "infinitely many lines expected through a general point: finiteness requires Σdᵢ = n−1 (expected " +
                          std::to_string(n - 1) + ", got " + std::to_string(sum) + ")");
  }
  if (sum > n - 1) {
    throw DomainError(Diagnosis::NoLinesThroughGeneralPoint,
                      "generically no lines through a general point: finiteness requires Σdᵢ = n−1 (expected " +
                          std::to_string(n - 1) + ", got " + std::to_string(sum) + ")");
  }
  const ChowClass locus = line_locus_class(t);
  const ChowClass at_point = mul(locus, ChowClass::monomial(n, t.dimension(), 0)).divide_exact(t.degree());

  LineCount out;
  out.kind = LineCount::Kind::ThroughPoint;
  out.certificate = at_point;
  for (const auto& [e, c] : at_point.terms()) {
    if (e.a != n || e.b != n - 1) {
      throw DomainError(Diagnosis::NonPure, "point class " + to_string(at_point) + " is not a multiple of h0^n*h1^(n-1)");
    }
  }
  out.value = coefficient(at_point, n, n - 1);

  BigInt closed_form = 1;
  for (unsigned d : t.degrees()) closed_form *= factorial(d);
  if (out.value != closed_form) {
    throw DomainError(Diagnosis::Internal, "lines through a point " + out.value.get_str() + " disagrees with ∏dᵢ! = " +
                                               closed_form.get_str());
  }
  return out;
}

}  // namespace arcline
