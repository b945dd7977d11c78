#include "arcline/ff_search.hpp"

#include <algorithm>

#include "arcline/error.hpp"
#include "arcline/prolongation.hpp"

namespace arcline::ff {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Calls visit(row) for every vector whose `free` positions range over F_p and
// whose other positions keep their current value.
template <class Visit>
void for_each_assignment(std::vector<std::uint64_t>& row, const std::vector<unsigned>& free, std::uint64_t p,
                         Visit&& visit) {
  for (unsigned idx : free) row[idx] = 0;
  for (;;) {
    visit();
    std::size_t k = 0;
    while (k < free.size()) {
      if (++row[free[k]] < p) break;
      row[free[k]] = 0;
      ++k;
    }
    if (k == free.size()) return;
  }
}

FFPoint to_point(const std::vector<std::uint64_t>& v) { return FFPoint(v.begin(), v.end()); }

// Reduced row-echelon basis of span(a, b); a and b must be independent.
FFLine rref(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  const std::size_t len = a.size();
  auto pivot = [&](const std::vector<std::uint64_t>& r) {
    return static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; }) - r.begin());
  };
  if (pivot(b) < pivot(a)) std::swap(a, b);
  const std::size_t c1 = pivot(a);
  const std::uint64_t inv_a = inverse_mod(a[c1], p);
  for (auto& x : a) x = x * inv_a % p;
  // Clear column c1 from b.
  const std::uint64_t fb = b[c1];
  for (std::size_t i = 0; i < len; ++i) b[i] = (b[i] + p - fb * a[i] % p) % p;
  const std::size_t c2 = pivot(b);
  const std::uint64_t inv_b = inverse_mod(b[c2], p);
  for (auto& x : b) x = x * inv_b % p;
  const std::uint64_t fa = a[c2];
  for (std::size_t i = 0; i < len; ++i) a[i] = (a[i] + p - fa * b[i] % p) % p;
  return FFLine{to_point(a), to_point(b)};
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

LineSearch::LineSearch(FFConfig config) : config_(std::move(config)) {
  const std::uint64_t p = config_.prime;
  if (!is_prime(p)) throw DomainError(Diagnosis::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw DomainError(Diagnosis::InvalidArgument, "prime must be below 2^31");
  if (config_.ambient < 1) throw DomainError(Diagnosis::InvalidArgument, "ambient dimension must be at least 1");

  auto compile = [p](const SparsePoly& poly) {
    CompiledPoly out;
    for (const auto& [m, c] : poly.terms()) {
      const std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
      if (r == 0) continue;
      CompiledTerm t{r, {}};
      for (const auto& [v, e] : m.factors()) t.factors.emplace_back(2 * v.coord + v.weight, e);
      out.push_back(std::move(t));
    }
    return out;
  };

  for (const auto& g : config_.generators) {
    if (auto top = g.max_coord(); top && *top > config_.ambient) {
      throw DomainError(Diagnosis::AmbientMismatch, "generator uses x" + std::to_string(*top) + " beyond P^" +
                                                        std::to_string(config_.ambient));
    }
    const ProlongedSystem sys = full_expansion(g, 1);
    equations_.push_back(compile(g));
    for (const auto& coeff : sys.coefficients) {
      CompiledPoly c = compile(coeff);
      if (!c.empty()) conditions_.push_back(std::move(c));
    }
  }
}

std::uint64_t LineSearch::eval(const CompiledPoly& poly, const std::vector<std::uint64_t>& slots) const {
  const std::uint64_t p = config_.prime;
  std::uint64_t total = 0;
  for (const auto& t : poly) {
    std::uint64_t v = t.coeff;
    for (const auto& [slot, e] : t.factors) {
      v = v * pow_mod(slots[slot], e, p) % p;
      if (v == 0) break;
    }
    total = (total + v) % p;
  }
  return total;
}

bool LineSearch::contains(const FFPoint& base, const FFPoint& direction) const {
  std::vector<std::uint64_t> slots(2 * (config_.ambient + 1));
  for (unsigned j = 0; j <= config_.ambient; ++j) {
    slots[2 * j] = base[j] % config_.prime;
    slots[2 * j + 1] = direction[j] % config_.prime;
  }
  return std::all_of(conditions_.begin(), conditions_.end(), [&](const CompiledPoly& c) { return eval(c, slots) == 0; });
}

bool LineSearch::on_variety(const FFPoint& pt) const {
  std::vector<std::uint64_t> slots(2 * (config_.ambient + 1), 0);
  for (unsigned j = 0; j <= config_.ambient; ++j) slots[2 * j] = pt[j] % config_.prime;
  return std::all_of(equations_.begin(), equations_.end(), [&](const CompiledPoly& c) { return eval(c, slots) == 0; });
}

FFPoint LineSearch::normalize(const std::vector<long long>& coords) const {
  const long long p = config_.prime;
  if (coords.size() != config_.ambient + 1) {
    throw DomainError(Diagnosis::InvalidArgument, "point needs " + std::to_string(config_.ambient + 1) + " coordinates");
  }
  std::vector<std::uint64_t> v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = static_cast<std::uint64_t>(((coords[i] % p) + p) % p);
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end()) throw DomainError(Diagnosis::InvalidArgument, "the zero vector is not a projective point");
  const std::uint64_t inv = inverse_mod(*lead, config_.prime);
  for (auto& x : v) x = x * inv % config_.prime;
  return to_point(v);
}

std::uint64_t LineSearch::total_lines() const {
  const unsigned n = config_.ambient;
  std::uint64_t total = 0;
  for (unsigned c1 = 0; c1 <= n; ++c1) {
    for (unsigned c2 = c1 + 1; c2 <= n; ++c2) total += pow_mod(config_.prime, (n - c1 - 1) + (n - c2), ~0ULL);
  }
  return total;
}

std::vector<FFLine> LineSearch::lines() const {
  const unsigned n = config_.ambient;
  const std::uint64_t p = config_.prime;
  std::vector<FFLine> found;
  std::vector<std::uint64_t> row1(n + 1), row2(n + 1);
  // Partition by pivot columns (c1, c2) of the echelon form.
  for (unsigned c1 = 0; c1 <= n; ++c1) {
    for (unsigned c2 = c1 + 1; c2 <= n; ++c2) {
      std::fill(row1.begin(), row1.end(), 0);
      std::fill(row2.begin(), row2.end(), 0);
      row1[c1] = 1;
      row2[c2] = 1;
      std::vector<unsigned> free1, free2;
      for (unsigned k = c1 + 1; k <= n; ++k) {
        if (k != c2) free1.push_back(k);
      }
      for (unsigned k = c2 + 1; k <= n; ++k) free2.push_back(k);
      FFPoint base(n + 1), dir(n + 1);
      for_each_assignment(row1, free1, p, [&] {
        for_each_assignment(row2, free2, p, [&] {
          std::copy(row1.begin(), row1.end(), base.begin());
          std::copy(row2.begin(), row2.end(), dir.begin());
          if (contains(base, dir)) found.push_back(FFLine{base, dir});
        });
      });
    }
  }
  return found;
}

std::uint64_t LineSearch::count_lines() const { return lines().size(); }

std::vector<FFLine> LineSearch::lines_through(const FFPoint& pt) const {
  const unsigned n = config_.ambient;
  const std::uint64_t p = config_.prime;
  std::vector<long long> raw(pt.begin(), pt.end());
  const FFPoint base = normalize(raw);
  if (!on_variety(base)) {
    throw DomainError(Diagnosis::PointNotOnVariety, "the given point does not lie on the variety");
  }
  const unsigned k = static_cast<unsigned>(std::find_if(base.begin(), base.end(), [](auto x) { return x != 0; }) - base.begin());
  std::vector<unsigned> others;
  for (unsigned j = 0; j <= n; ++j) {
    if (j != k) others.push_back(j);
  }
  // Directions modulo the base point: v[k] = 0, first nonzero entry 1.
  std::vector<FFLine> found;
  std::vector<std::uint64_t> v(n + 1);
  FFPoint dir(n + 1);
  for (std::size_t lead = 0; lead < others.size(); ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[others[lead]] = 1;
    std::vector<unsigned> free(others.begin() + static_cast<std::ptrdiff_t>(lead) + 1, others.end());
    for_each_assignment(v, free, p, [&] {
      std::copy(v.begin(), v.end(), dir.begin());
      if (contains(base, dir)) {
        found.push_back(rref(std::vector<std::uint64_t>(base.begin(), base.end()), v, p));
      }
    });
  }
  return found;
}

std::uint64_t LineSearch::count_lines_through(const FFPoint& pt) const { return lines_through(pt).size(); }

std::uint64_t count_lines_ff(const FFConfig& cfg) { return LineSearch(cfg).count_lines(); }

std::uint64_t count_lines_through_point_ff(const FFConfig& cfg, const FFPoint& pt) {
  return LineSearch(cfg).count_lines_through(pt);
}

}  // namespace arcline::ff
