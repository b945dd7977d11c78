#include "arcline/prolongation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "arcline/error.hpp"

namespace arcline {
namespace {

using Series = std::vector<SparsePoly>;

Series series_mul(const Series& a, const Series& b, unsigned cap) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = std::min<std::size_t>(a.size() + b.size() - 1, cap + 1);
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Substitutes x_j -> sum_{i<=order} x_{j,i} eps^i into every term of f and
// keeps eps-powers up to cap.
std::vector<SparsePoly> substitute(const SparsePoly& f, unsigned order, unsigned cap) {
  std::map<std::pair<unsigned, unsigned>, Series> power_cache;
  auto coordinate_power = [&](unsigned coord, unsigned exponent) -> const Series& {
    auto key = std::make_pair(coord, exponent);
    if (auto it = power_cache.find(key); it != power_cache.end()) return it->second;
    Series base(order + 1);
    for (unsigned i = 0; i <= order; ++i) base[i] = SparsePoly::variable(coord, i);
    Series acc{SparsePoly::constant(1)};
    for (unsigned e = 0; e < exponent; ++e) acc = series_mul(acc, base, cap);
    return power_cache.emplace(key, std::move(acc)).first->second;
  };

  std::vector<SparsePoly> out(cap + 1);
  for (const auto& [m, c] : f.terms()) {
    Series s{SparsePoly::constant(c)};
    for (const auto& [v, e] : m.factors()) s = series_mul(s, coordinate_power(v.coord, e), cap);
    for (std::size_t i = 0; i < s.size(); ++i) out[i] += s[i];
  }
  return out;
}

void require_weight_zero(const SparsePoly& f) {
  if (f.has_positive_weight()) {
    throw DomainError(Diagnosis::PositiveWeight,
                      "input polynomial already contains arc coordinates of positive weight");
  }
}

}  // namespace

ProlongedSystem arc_ideal(const SparsePoly& f, unsigned order) {
  require_weight_zero(f);
  ProlongedSystem sys;
  sys.source_degree = f.total_degree();
  sys.order = order;
  sys.truncated = true;
  sys.cutoff = order;
  sys.coefficients = substitute(f, order, order);
  return sys;
}

ProlongedSystem full_expansion(const SparsePoly& f, unsigned order) {
  require_weight_zero(f);
  if (!f.is_homogeneous()) {
    throw DomainError(Diagnosis::NotHomogeneous, "full expansion requires a homogeneous polynomial");
  }
  ProlongedSystem sys;
  sys.source_degree = f.total_degree();
  sys.order = order;
  sys.truncated = false;
  sys.cutoff = sys.source_degree * order;
  sys.coefficients = substitute(f, order, sys.cutoff);
  return sys;
}

Arc::Arc(std::vector<std::vector<BigInt>> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DomainError(Diagnosis::InvalidArgument, "an arc needs at least two coordinates");
  const std::size_t width = coords_.front().size();
  if (width == 0) throw DomainError(Diagnosis::InvalidArgument, "an arc needs at least one eps-order");
  for (const auto& row : coords_) {
    if (row.size() != width) throw DomainError(Diagnosis::InvalidArgument, "ragged arc coordinates");
  }
  const bool zero_base = std::all_of(coords_.begin(), coords_.end(), [](const auto& row) { return row[0] == 0; });
  if (zero_base) throw DomainError(Diagnosis::InvalidArgument, "arc base point is the zero vector");
}

Arc Arc::first_order(std::vector<BigInt> base, std::vector<BigInt> direction) {
  if (base.size() != direction.size()) {
    throw DomainError(Diagnosis::InvalidArgument, "base point and direction differ in length");
  }
  std::vector<std::vector<BigInt>> coords(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) coords[j] = {base[j], direction[j]};
  return Arc(std::move(coords));
}

BigInt Arc::value(Var v) const {
  if (v.coord >= coords_.size()) {
    throw DomainError(Diagnosis::AmbientMismatch, "variable x" + std::to_string(v.coord) + " is outside the arc's ambient space");
  }
  return v.weight <= order() ? coords_[v.coord][v.weight] : BigInt(0);
}

Arc Arc::rescaled(const BigInt& lambda) const {
  auto coords = coords_;
  for (auto& row : coords) {
    BigInt factor = 1;
    for (auto& entry : row) {
      entry *= factor;
      factor *= lambda;
    }
  }
  return Arc(std::move(coords));
}

ParamLine line_through(const Arc& arc) {
  if (arc.order() != 1) throw DomainError(Diagnosis::InvalidArgument, "line_through needs a 1-arc");
  ParamLine line;
  const unsigned n = arc.ambient();
  for (unsigned j = 0; j <= n; ++j) {
    line.base.push_back(arc.at(j, 0));
    line.direction.push_back(arc.at(j, 1));
  }
  line.degenerate = true;
  for (unsigned i = 0; i <= n && line.degenerate; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      if (line.base[i] * line.direction[j] != line.base[j] * line.direction[i]) {
        line.degenerate = false;
        break;
      }
    }
  }
  return line;
}

ContactOrder line_contact_order(const SparsePoly& f, const Arc& arc) {
  if (arc.order() != 1) throw DomainError(Diagnosis::InvalidArgument, "contact order needs a 1-arc");
  const ProlongedSystem sys = full_expansion(f, 1);
  const auto lookup = [&arc](Var v) { return arc.value(v); };
  for (unsigned i = 0; i < sys.coefficients.size(); ++i) {
    if (evaluate(sys.coefficients[i], lookup) != 0) return ContactOrder{i};
  }
  return ContactOrder{};
}

}  // namespace arcline
