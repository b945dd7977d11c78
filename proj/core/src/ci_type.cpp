#include "arcline/ci_type.hpp"

#include <algorithm>
#include <numeric>

#include "arcline/error.hpp"

namespace arcline {

CIType::CIType(unsigned ambient, std::vector<unsigned> degrees) : n_(ambient), degrees_(std::move(degrees)) {
  if (n_ < 2) throw DomainError(Diagnosis::InvalidArgument, "ambient dimension must be at least 2");
  if (degrees_.empty()) throw DomainError(Diagnosis::InvalidArgument, "a complete intersection needs at least one degree");
  if (degrees_.size() > n_ - 1) {
    throw DomainError(Diagnosis::InvalidArgument,
                      "codimension " + std::to_string(degrees_.size()) + " leaves no positive-dimensional variety in P^" +
                          std::to_string(n_));
  }
  if (std::any_of(degrees_.begin(), degrees_.end(), [](unsigned d) { return d == 0; })) {
    throw DomainError(Diagnosis::InvalidArgument, "degrees must be at least 1");
  }
}

unsigned CIType::degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0U); }

BigInt CIType::degree() const {
  BigInt d = 1;
  for (unsigned dj : degrees_) d *= dj;
  return d;
}

bool CIType::all_degrees_at_least(unsigned k) const {
  return std::all_of(degrees_.begin(), degrees_.end(), [k](unsigned d) { return d >= k; });
}

std::string to_string(const CIType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.degrees().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.degrees()[i]);
  }
  return out + ") in P^" + std::to_string(t.ambient());
}

}  // namespace arcline
