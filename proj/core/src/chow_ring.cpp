#include "arcline/chow_ring.hpp"

#include <ostream>
#include <vector>

#include "arcline/error.hpp"

namespace arcline {
namespace {

void require_ambient(unsigned n) {
  if (n < 1) throw DomainError(Diagnosis::InvalidArgument, "ambient dimension must be at least 1");
}

void accumulate(BivariateForm& form, Exponents e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = form.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) form.erase(it);
  }
}

// Reduces u^a v^b modulo u^{n+1} = 0 and v^n = -sum_{i=1}^n tail[i] u^i v^{n-i}.
// Works from the highest v-degree down, so every rewrite strictly lowers the
// v-exponent of what is left to process.
BivariateForm reduce(const BivariateForm& raw, unsigned n, const std::vector<BigInt>& tail) {
  // Keyed by (b, a) so the largest v-exponent sits at the back.
  std::map<std::pair<unsigned, unsigned>, BigInt> work;
  for (const auto& [e, c] : raw) {
    if (c == 0 || e.a > n || e.a + e.b > 2 * n - 1) continue;
    auto [it, inserted] = work.try_emplace({e.b, e.a}, c);
    if (!inserted) it->second += c;
  }
  BivariateForm out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const auto [b, a] = it->first;
    const BigInt c = it->second;
    work.erase(it);
    if (c == 0) continue;
    if (b < n) {
      accumulate(out, {a, b}, c);
      continue;
    }
    for (unsigned i = 1; i <= n && a + i <= n; ++i) {
      work[{b - i, a + i}] -= c * tail[i];
    }
  }
  return out;
}

const std::vector<BigInt>& h_tail(unsigned n) {
  thread_local std::map<unsigned, std::vector<BigInt>> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) it->second.assign(n + 1, BigInt(1));
  return it->second;
}

const std::vector<BigInt>& j_tail(unsigned n) {
  thread_local std::map<unsigned, std::vector<BigInt>> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    it->second.resize(n + 1);
    for (unsigned i = 0; i <= n; ++i) mpz_bin_uiui(it->second[i].get_mpz_t(), n + 1, i);
  }
  return it->second;
}

BivariateForm formal_product(const BivariateForm& x, const BivariateForm& y) {
  BivariateForm out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) accumulate(out, {ex.a + ey.a, ex.b + ey.b}, cx * cy);
  }
  return out;
}

// (s*u + t*v)^k expanded as a formal combination.
BivariateForm binomial_power(long long s, long long t, unsigned k) {
  BivariateForm out;
  BigInt binom, su, tv;
  for (unsigned i = 0; i <= k; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), k, i);
    mpz_pow_ui(su.get_mpz_t(), BigInt(static_cast<long>(s)).get_mpz_t(), i);
    mpz_pow_ui(tv.get_mpz_t(), BigInt(static_cast<long>(t)).get_mpz_t(), k - i);
    accumulate(out, {i, k - i}, binom * su * tv);
  }
  return out;
}

std::string render(const BivariateForm& terms, const char* u, const char* v) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto factor = [&mono](const char* name, unsigned exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (exp > 1) mono += '^' + std::to_string(exp);
    };
    factor(u, e.a);
    factor(v, e.b);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace

ChowClass::ChowClass(unsigned ambient) : n_(ambient) { require_ambient(ambient); }

ChowClass ChowClass::one(unsigned ambient) { return monomial(ambient, 0, 0); }
ChowClass ChowClass::h0(unsigned ambient) { return monomial(ambient, 1, 0); }
ChowClass ChowClass::h1(unsigned ambient) { return monomial(ambient, 0, 1); }

ChowClass ChowClass::monomial(unsigned ambient, unsigned a, unsigned b, const BigInt& c) {
  return normal_form(BivariateForm{{Exponents{a, b}, c}}, ambient);
}

std::optional<std::pair<Exponents, BigInt>> ChowClass::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
  if (rhs.n_ != n_) throw DomainError(Diagnosis::AmbientMismatch, "adding classes over different ambient spaces");
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
  if (rhs.n_ != n_) throw DomainError(Diagnosis::AmbientMismatch, "subtracting classes over different ambient spaces");
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) { return mul(a, b); }

ChowClass ChowClass::divide_exact(const BigInt& divisor) const {
  if (divisor == 0) throw DomainError(Diagnosis::InexactDivision, "division of a class by zero");
  ChowClass out(n_);
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
      throw DomainError(Diagnosis::InexactDivision,
                        "coefficient " + c.get_str() + " of h0^" + std::to_string(e.a) + "*h1^" +
                            std::to_string(e.b) + " is not divisible by " + divisor.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    out.terms_.emplace(e, q);
  }
  return out;
}

ChowClass normal_form(const BivariateForm& raw, unsigned ambient) {
  ChowClass out(ambient);
  out.terms_ = reduce(raw, ambient, h_tail(ambient));
  return out;
}

ChowClass mul(const ChowClass& a, const ChowClass& b) {
  if (a.ambient() != b.ambient()) {
    throw DomainError(Diagnosis::AmbientMismatch, "multiplying classes over P^" + std::to_string(a.ambient()) +
                                                      " and P^" + std::to_string(b.ambient()));
  }
  return normal_form(formal_product(a.terms(), b.terms()), a.ambient());
}

ChowClass linear_product(std::span<const LinearFactor> factors, unsigned ambient) {
  if (factors.empty()) throw DomainError(Diagnosis::InvalidArgument, "linear_product needs at least one factor");
  ChowClass acc = ChowClass::one(ambient);
  for (const auto& f : factors) {
    BivariateForm lin;
    accumulate(lin, {1, 0}, BigInt(static_cast<long>(f.h0)));
    accumulate(lin, {0, 1}, BigInt(static_cast<long>(f.h1)));
    acc = normal_form(formal_product(acc.terms(), lin), ambient);
    if (acc.is_zero()) break;
  }
  return acc;
}

BigInt coefficient(const ChowClass& c, unsigned a, unsigned b) {
  auto it = c.terms().find(Exponents{a, b});
  return it == c.terms().end() ? BigInt(0) : it->second;
}

JCombination to_j_basis(const ChowClass& c) {
  // h0^a h1^b = j0^a (j0 + j1)^b
  JCombination out{c.ambient(), {}};
  for (const auto& [e, coeff] : c.terms()) {
    for (const auto& [f, binom] : binomial_power(1, 1, e.b)) {
      accumulate(out.terms, {e.a + f.a, f.b}, coeff * binom);
    }
  }
  return out;
}

ChowClass from_j_basis(const JCombination& j) {
  // j0^a j1^b = h0^a (h1 - h0)^b
  BivariateForm raw;
  for (const auto& [e, coeff] : j.terms) {
    for (const auto& [f, binom] : binomial_power(-1, 1, e.b)) {
      accumulate(raw, {e.a + f.a, f.b}, coeff * binom);
    }
  }
  return normal_form(raw, j.ambient);
}

JCombination j_normal_form(const JCombination& j) {
  require_ambient(j.ambient);
  return JCombination{j.ambient, reduce(j.terms, j.ambient, j_tail(j.ambient))};
}

JCombination j_multiply(const JCombination& a, const JCombination& b) {
  if (a.ambient != b.ambient) throw DomainError(Diagnosis::AmbientMismatch, "multiplying j-combinations over different ambient spaces");
  return JCombination{a.ambient, formal_product(a.terms, b.terms)};
}

std::string to_string(const ChowClass& c) { return render(c.terms(), "h0", "h1"); }
std::string to_string(const JCombination& j) { return render(j.terms, "j0", "j1"); }
std::ostream& operator<<(std::ostream& os, const ChowClass& c) { return os << to_string(c); }

}  // namespace arcline
