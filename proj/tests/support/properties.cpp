#include "properties.hpp"

#include <functional>

#include "arcline/chow_ring.hpp"
#include "arcline/prolongation.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace arcline::testkit {
namespace {

// Runs check(rng) `cases` times; a non-empty return is a failure message.
PropertyResult run(const std::string& name, std::uint64_t seed, std::size_t cases,
                   const std::function<std::string(Rng&)>& check) {
  PropertyResult res{name, cases, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::string msg;
    try {
      msg = check(rng);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!msg.empty()) {
      if (res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + msg;
    }
  }
  return res;
}

bool in_box(const ChowClass& c) {
  const unsigned n = c.ambient();
  for (const auto& [e, coeff] : c.terms()) {
    if (e.a > n || e.b + 1 > n || coeff == 0) return false;
  }
  return true;
}

}  // namespace

PropertyResult prop_weight_homogeneity(std::uint64_t seed, std::size_t cases) {
  return run("weight homogeneity of f^(i)", seed, cases, [](Rng& rng) -> std::string {
    const unsigned vars = pick(rng, 1, 4), d = pick(rng, 1, 4), m = pick(rng, 0, 3);
    const SparsePoly f = random_form(rng, vars, d);
    const auto sys = arc_ideal(f, m);
    if (sys.coefficients.size() != m + 1) return "wrong number of equations for " + to_string(f);
    const auto naive = substitute_series(f, m, m);
    for (unsigned i = 0; i <= m; ++i) {
      const SparsePoly& g = sys.coefficients[i];
      for (const auto& [mono, c] : g.terms()) {
        if (mono.weight() != i || mono.total_degree() != d) {
          return "f = " + to_string(f) + ": term " + to_string(mono) + " in f^(" + std::to_string(i) + ")";
        }
      }
      if (g != naive[i]) return "f = " + to_string(f) + ": f^(" + std::to_string(i) + ") differs from substitution";
    }
    return {};
  });
}

PropertyResult prop_cauchy(std::uint64_t seed, std::size_t cases) {
  return run("Cauchy multiplicativity of full_expansion", seed, cases, [](Rng& rng) -> std::string {
    const unsigned vars = pick(rng, 1, 3), m = pick(rng, 1, 2);
    const unsigned df = pick(rng, 1, m == 1 ? 3 : 2), dg = pick(rng, 1, m == 1 ? 3 : 2);
    const SparsePoly f = random_form(rng, vars, df, 3), g = random_form(rng, vars, dg, 3);
    const auto ef = full_expansion(f, m).coefficients;
    const auto eg = full_expansion(g, m).coefficients;
    const auto efg = full_expansion(f * g, m).coefficients;
    if (efg.size() != (df + dg) * m + 1) return "wrong cutoff for f*g";
    for (std::size_t k = 0; k < efg.size(); ++k) {
      SparsePoly conv;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i < ef.size() && k - i < eg.size()) conv += ef[i] * eg[k - i];
      }
      if (conv != efg[k]) {
        return "f = " + to_string(f) + ", g = " + to_string(g) + ", coefficient " + std::to_string(k);
      }
    }
    return {};
  });
}

PropertyResult prop_normal_form(std::uint64_t seed, std::size_t cases) {
  return run("normal form idempotence and relation soundness", seed, cases, [](Rng& rng) -> std::string {
    const unsigned n = pick(rng, 1, 7);
    const BivariateForm raw = random_raw_form(rng, 2 * n + 2);
    const ChowClass c = normal_form(raw, n);
    if (!in_box(c)) return "normal form leaves the box: " + to_string(c);
    if (normal_form(c.terms(), n) != c) return "not idempotent on " + to_string(c);

    const BivariateForm any = random_raw_form(rng, n + 2);
    BivariateForm first{{{n + 1, 0}, 1}};
    BivariateForm second;
    for (unsigned i = 0; i <= n; ++i) second[{i, n - i}] = 1;
    if (!normal_form(form_product(first, any), n).is_zero()) return "h0^(n+1) * x is nonzero, n=" + std::to_string(n);
    if (!normal_form(form_product(second, any), n).is_zero()) return "sum h0^i h1^(n-i) * x is nonzero, n=" + std::to_string(n);
    return {};
  });
}

PropertyResult prop_presentation(std::uint64_t seed, std::size_t cases) {
  return run("h/j presentation round trip and products", seed, cases, [](Rng& rng) -> std::string {
    const unsigned n = pick(rng, 1, 7);
    const ChowClass x = random_class(rng, n), y = random_class(rng, n);
    if (from_j_basis(to_j_basis(x)) != x) return "round trip fails on " + to_string(x);
    const JCombination jx = to_j_basis(x), jy = to_j_basis(y);
    if (from_j_basis(j_multiply(jx, jy)) != x * y) {
      return "products disagree for " + to_string(x) + " and " + to_string(y);
    }
    const JCombination prod = j_multiply(jx, jy);
    if (from_j_basis(j_normal_form(prod)) != from_j_basis(prod)) return "j_normal_form changes the class";
    return {};
  });
}

PropertyResult prop_symmetric_cancellation(std::uint64_t seed, std::size_t cases) {
  return run("symmetric-product cancellation of h0^n h1^(n-2)", seed, cases, [](Rng& rng) -> std::string {
    const unsigned n = pick(rng, 2, 8);
    const auto factors = random_symmetric_factors(rng, 2 * (n - 1));
    const ChowClass c = linear_product(factors, n);
    if (coefficient(c, n, n - 2) != 0) {
      return "n=" + std::to_string(n) + ": coefficient " + coefficient(c, n, n - 2).get_str();
    }
    return {};
  });
}

}  // namespace arcline::testkit
