#include "arcline/bounds.hpp"

#include <algorithm>

#include "arcline/error.hpp"

namespace arcline {
namespace {

void extend(unsigned remaining, unsigned parts_left, unsigned max_part, unsigned min_part,
            std::vector<unsigned>& prefix, std::vector<std::vector<unsigned>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Every remaining part is at least min_part and at most the current head.
  if (remaining < parts_left * min_part) return;
  const unsigned hi = std::min(max_part, remaining - (parts_left - 1) * min_part);
  for (unsigned d = hi; d >= min_part; --d) {
    if (static_cast<unsigned long long>(d) * parts_left < remaining) break;
    prefix.push_back(d);
    extend(remaining - d, parts_left - 1, d, min_part, prefix, out);
    prefix.pop_back();
    if (d == 0) break;
  }
}

}  // namespace

BigInt factorial_of(unsigned k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

std::vector<std::vector<unsigned>> partitions(unsigned total, unsigned parts, unsigned min_part) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> prefix;
  extend(total, parts, total, min_part, prefix, out);
  return out;
}

std::vector<TypeCount> enumerate_types(const BoundQuery& q) {
  if (q.dimension < 1) throw DomainError(Diagnosis::InvalidArgument, "variety dimension must be at least 1");
  if (q.codim && *q.codim < 1) throw DomainError(Diagnosis::InvalidArgument, "codimension must be at least 1");
  if (q.min_degree < 2) throw DomainError(Diagnosis::InvalidArgument, "minimum degree must be at least 2");

  const unsigned m = q.dimension;
  std::vector<unsigned> codims;
  if (q.codim) {
    codims.push_back(*q.codim);
  } else {
    // r * dmin <= m + r - 1  <=>  r * (dmin - 1) <= m - 1
    for (unsigned r = 1; r * (q.min_degree - 1) <= m - 1; ++r) codims.push_back(r);
  }

  std::vector<TypeCount> out;
  for (unsigned r : codims) {
    for (auto& degrees : partitions(m + r - 1, r, q.min_degree)) {
      BigInt count = 1;
      for (unsigned d : degrees) count *= factorial_of(d);
      out.push_back(TypeCount{std::move(degrees), m + r, std::move(count)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TypeCount& x, const TypeCount& y) {
    if (x.count != y.count) return x.count > y.count;
    if (x.degrees.size() != y.degrees.size()) return x.degrees.size() < y.degrees.size();
    return x.degrees > y.degrees;
  });
  return out;
}

std::optional<BigInt> bound(const BoundQuery& q) {
  const auto types = enumerate_types(q);
  if (types.empty()) return std::nullopt;
  return types.front().count;
}

}  // namespace arcline
