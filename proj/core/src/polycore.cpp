#include "arcline/polycore.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace arcline {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::of(Var v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Var& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::weight() const {
  unsigned w = 0;
  for (const auto& [v, e] : factors_) w += v.weight * e;
  return w;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

SparsePoly SparsePoly::constant(const BigInt& c) { return term(Monomial{}, c); }

SparsePoly SparsePoly::variable(Var v) { return term(Monomial::of(v), BigInt(1)); }

SparsePoly SparsePoly::term(const Monomial& m, const BigInt& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

BigInt SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned SparsePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

bool SparsePoly::is_weight_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [w](const auto& t) { return t.first.weight() == w; });
}

bool SparsePoly::has_positive_weight() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (v.weight > 0) return true;
    }
  }
  return false;
}

std::optional<unsigned> SparsePoly::max_coord() const {
  std::optional<unsigned> best;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (!best || v.coord > *best) best = v.coord;
    }
  }
  return best;
}

void SparsePoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  SparsePoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

SparsePoly operator-(SparsePoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = constant(1);
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::map<unsigned, SparsePoly> weight_components(const SparsePoly& p) {
  std::map<unsigned, SparsePoly> out;
  for (const auto& [m, c] : p.terms()) out[m.weight()].add_term(m, c);
  return out;
}

BigInt evaluate(const SparsePoly& p, const std::function<BigInt(Var)>& value) {
  BigInt total = 0;
  BigInt power;
  for (const auto& [m, c] : p.terms()) {
    BigInt t = c;
    for (const auto& [v, e] : m.factors()) {
      mpz_pow_ui(power.get_mpz_t(), value(v).get_mpz_t(), e);
      t *= power;
    }
    total += t;
  }
  return total;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v.coord);
    if (v.weight > 0) {
      out += '_';
      out += std::to_string(v.weight);
    }
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += '*';
      }
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << to_string(p); }

}  // namespace arcline
