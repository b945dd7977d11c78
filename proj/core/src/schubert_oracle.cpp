#include "arcline/schubert_oracle.hpp"

#include "arcline/error.hpp"

namespace arcline::schubert {
namespace {

// x1^i x2^j -> coefficient
using RootPoly = std::map<std::pair<unsigned, unsigned>, BigInt>;

void accumulate(RootPoly& p, unsigned i, unsigned j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

RootPoly times_linear(const RootPoly& p, const RootFactor& f) {
  RootPoly out;
  const BigInt s(static_cast<long>(f.x1));
  const BigInt t(static_cast<long>(f.x2));
  for (const auto& [e, c] : p) {
    accumulate(out, e.first + 1, e.second, c * s);
    accumulate(out, e.first, e.second + 1, c * t);
  }
  return out;
}

void check_grassmannian(unsigned n) {
  if (n < 2) throw DomainError(Diagnosis::InvalidArgument, "G(2, n+1) needs n >= 2");
}

}  // namespace

SchubertClass::SchubertClass(unsigned ambient) : n_(ambient) { check_grassmannian(ambient); }

SchubertClass SchubertClass::sigma(unsigned ambient, unsigned a, unsigned b) {
  SchubertClass out(ambient);
  out.add(Partition{a, b}, 1);
  return out;
}

BigInt SchubertClass::coefficient(unsigned a, unsigned b) const {
  auto it = terms_.find(Partition{a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchubertClass::add(const Partition& p, const BigInt& c) {
  if (c == 0 || p.a < p.b || p.a > n_ - 1) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& rhs) {
  if (rhs.n_ != n_) throw DomainError(Diagnosis::AmbientMismatch, "adding Schubert classes on different Grassmannians");
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  return *this;
}

SchubertClass pieri_mul(const SchubertClass& c, Generator g) {
  SchubertClass out(c.ambient());
  for (const auto& [p, coeff] : c.terms()) {
    if (g == Generator::Sigma1) {
      out.add(Partition{p.a + 1, p.b}, coeff);
      out.add(Partition{p.a, p.b + 1}, coeff);
    } else {
      out.add(Partition{p.a + 1, p.b + 1}, coeff);
    }
  }
  return out;
}

ElementaryPoly symmetric_expand(std::span<const RootFactor> factors) {
  RootPoly rest{{{0, 0}, BigInt(1)}};
  for (const auto& f : factors) rest = times_linear(rest, f);

  ElementaryPoly out;
  BigInt binom;
  while (!rest.empty()) {
    // Leading term in lex order on the x1-exponent.
    const auto lead = std::prev(rest.end());
    const auto [i, j] = lead->first;
    const BigInt c = lead->second;
    if (i < j) {
      throw DomainError(Diagnosis::NotSymmetric, "product of root factors is not symmetric in x1, x2");
    }
    out[{i - j, j}] += c;
    // subtract c * e1^{i-j} e2^j = c * x1^j x2^j (x1 + x2)^{i-j}
    const unsigned k = i - j;
    for (unsigned s = 0; s <= k; ++s) {
      mpz_bin_uiui(binom.get_mpz_t(), k, s);
      accumulate(rest, j + s, j + k - s, -c * binom);
    }
  }
  return out;
}

SchubertClass to_schubert(const ElementaryPoly& poly, unsigned ambient) {
  SchubertClass out(ambient);
  for (const auto& [e, c] : poly) {
    if (c == 0) continue;
    SchubertClass term = SchubertClass::sigma(ambient, 0, 0);
    for (unsigned k = 0; k < e.second; ++k) term = pieri_mul(term, Generator::Sigma11);
    for (unsigned i = 0; i < e.first; ++i) term = pieri_mul(term, Generator::Sigma1);
    for (const auto& [p, tc] : term.terms()) out.add(p, tc * c);
  }
  return out;
}

std::vector<RootFactor> chern_root_factors(const CIType& t) {
  std::vector<RootFactor> out;
  for (unsigned d : t.degrees()) {
    for (unsigned i = 0; i <= d; ++i) out.push_back(RootFactor{static_cast<long long>(i), static_cast<long long>(d - i)});
  }
  return out;
}

BigInt oracle_count_lines(const CIType& t) {
  const unsigned n = t.ambient();
  const unsigned rank = t.degree_sum() + t.codim();
  if (rank != 2 * (n - 1)) {
    throw DomainError(Diagnosis::DimensionCondition,
                      "Σ(dⱼ+1) = " + std::to_string(rank) + " does not match dim G(2," + std::to_string(n + 1) +
                          ") = " + std::to_string(2 * (n - 1)));
  }
  const auto factors = chern_root_factors(t);
  return to_schubert(symmetric_expand(factors), n).integral();
}

BigInt fano_degree(const CIType& t) {
  const unsigned n = t.ambient();
  const long long k = 2LL * (n - 1) - t.codim() - t.degree_sum();
  if (k < 0) {
    throw DomainError(Diagnosis::NegativeExpectedDimension,
                      "expected dimension of the Fano scheme is " + std::to_string(k) + " < 0");
  }
  const auto factors = chern_root_factors(t);
  SchubertClass cls = to_schubert(symmetric_expand(factors), n);
  for (long long i = 0; i < k; ++i) cls = pieri_mul(cls, Generator::Sigma1);
  return cls.integral();
}

std::string to_string(const SchubertClass& c) {
  if (c.terms().empty()) return "0";
  std::string out;
  for (const auto& [p, coeff] : c.terms()) {
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += '-';
    const BigInt mag = abs(coeff);
    if (mag != 1) out += mag.get_str() + '*';
    out += "s(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return out;
}

std::string to_string(const ElementaryPoly& p) {
  std::string out;
  for (const auto& [e, coeff] : p) {
    if (coeff == 0) continue;
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += '-';
    const BigInt mag = abs(coeff);
    std::string mono;
    if (e.first) mono += e.first > 1 ? "e1^" + std::to_string(e.first) : "e1";
    if (e.second) {
      if (!mono.empty()) mono += '*';
      mono += e.second > 1 ? "e2^" + std::to_string(e.second) : "e2";
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace arcline::schubert
