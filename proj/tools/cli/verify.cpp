#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "arcline/bounds.hpp"
#include "arcline/error.hpp"
#include "arcline/ff_search.hpp"
#include "arcline/line_locus.hpp"
#include "arcline/prolongation.hpp"
#include "arcline/schubert_oracle.hpp"

namespace arcline::cli {
namespace {

using Task = std::function<CheckResult()>;

constexpr std::size_t kRandomCases = 200;

// Types (d_1 >= ... >= d_r >= 2) in P^n with sum d_j = total(r).
template <class Total>
std::vector<CIType> types_in(unsigned n, Total total) {
  std::vector<CIType> out;
  for (unsigned r = 1; r + 1 <= n; ++r) {
    const long long s = total(r);
    if (s < 2LL * r) continue;
    for (auto& d : partitions(static_cast<unsigned>(s), r, 2)) out.emplace_back(n, std::move(d));
  }
  return out;
}

CheckResult agreement(unsigned n) {
  CheckResult res{"chow/schubert agreement, n=" + std::to_string(n), 0, true, {}};
  for (const auto& t : types_in(n, [n](unsigned r) { return 2LL * (n - 1) - r; })) {
    ++res.cases;
    const BigInt a = count_lines(t).value;
    const BigInt b = schubert::oracle_count_lines(t);
    if (a != b && res.passed) {
      res.passed = false;
      res.detail = to_string(t) + ": chow " + a.get_str() + " vs schubert " + b.get_str();
    }
  }
  return res;
}

CheckResult closed_form(unsigned n) {
  CheckResult res{"lines through a point = prod d!, n=" + std::to_string(n), 0, true, {}};
  for (const auto& t : types_in(n, [n](unsigned) { return static_cast<long long>(n) - 1; })) {
    ++res.cases;
    BigInt expect = 1;
    for (unsigned d : t.degrees()) expect *= factorial_of(d);
    const BigInt got = lines_through_point(t).value;
    if (got != expect && res.passed) {
      res.passed = false;
      res.detail = to_string(t) + ": got " + got.get_str() + ", expected " + expect.get_str();
    }
  }
  return res;
}

SparsePoly random_form(std::mt19937_64& rng, unsigned vars, unsigned degree) {
  std::uniform_int_distribution<int> coeff(-5, 5), var(0, static_cast<int>(vars) - 1), nterms(1, 4);
  SparsePoly f;
  for (int k = nterms(rng); k > 0; --k) {
    std::vector<unsigned> exps(vars, 0);
    for (unsigned i = 0; i < degree; ++i) ++exps[static_cast<unsigned>(var(rng))];
    std::vector<Monomial::Factor> fac;
    for (unsigned j = 0; j < vars; ++j) {
      if (exps[j]) fac.emplace_back(Var{j, 0}, exps[j]);
    }
    f.add_term(Monomial(std::move(fac)), coeff(rng));
  }
  return f;
}

CheckResult weight_homogeneity() {
  CheckResult res{"prolonged equations are weight-homogeneous", kRandomCases, true, {}};
  std::mt19937_64 rng(0x5eed0001);
  std::uniform_int_distribution<unsigned> vars(1, 4), deg(1, 4), ord(0, 3);
  for (std::size_t c = 0; c < kRandomCases && res.passed; ++c) {
    const unsigned d = deg(rng), m = ord(rng);
    SparsePoly f;
    while (f.is_zero()) f = random_form(rng, vars(rng), d);
    const auto sys = arc_ideal(f, m);
    const auto full = full_expansion(f, m);
    for (unsigned i = 0; i <= m; ++i) {
      const SparsePoly& g = sys.coefficients[i];
      const bool ok = g == full.coefficients[i] &&
                      std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
                        return t.first.weight() == i && t.first.total_degree() == d;
                      });
      if (!ok) {
        res.passed = false;
        res.detail = "f = " + to_string(f) + ", weight " + std::to_string(i);
        break;
      }
    }
  }
  return res;
}

ChowClass random_class(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<unsigned> a(0, n), b(0, n - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  ChowClass c(n);
  for (int k = 0; k < 4; ++k) c += ChowClass::monomial(n, a(rng), b(rng), coeff(rng));
  return c;
}

CheckResult presentation_round_trip(unsigned max_ambient) {
  CheckResult res{"h/j presentation round trip and products", kRandomCases, true, {}};
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_int_distribution<unsigned> amb(1, max_ambient);
  for (std::size_t c = 0; c < kRandomCases && res.passed; ++c) {
    const unsigned n = amb(rng);
    const ChowClass x = random_class(rng, n), y = random_class(rng, n);
    if (from_j_basis(to_j_basis(x)) != x) {
      res.passed = false;
      res.detail = "round trip of " + to_string(x);
    } else if (from_j_basis(j_multiply(to_j_basis(x), to_j_basis(y))) != x * y) {
      res.passed = false;
      res.detail = "product of " + to_string(x) + " and " + to_string(y);
    }
  }
  return res;
}

CheckResult fermat_cubic() {
  CheckResult res{"Fermat cubic surface over F_7 has 27 lines", 1, true, {}};
  ff::FFConfig cfg{7, 3, {parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 3)}};
  const auto count = ff::count_lines_ff(cfg);
  if (count != 27) {
    res.passed = false;
    res.detail = "found " + std::to_string(count);
  }
  return res;
}

CheckResult bound_sweep() {
  CheckResult res{"bounds m!, 2(m-1)!, 3!(m-2)! for m <= 20", 0, true, {}};
  // m = 1 admits no type with every degree >= 2.
  for (unsigned m = 2; m <= 20; ++m) {
    std::vector<std::pair<BoundQuery, BigInt>> cases{{BoundQuery{m, std::nullopt, 2}, factorial_of(m)}};
    if (m >= 3) cases.push_back({BoundQuery{m, 2U, 2}, 2 * factorial_of(m - 1)});
    if (m >= 5) cases.push_back({BoundQuery{m, 2U, 3}, 6 * factorial_of(m - 2)});
    for (const auto& [q, expect] : cases) {
      ++res.cases;
      const auto got = bound(q);
      if ((!got || *got != expect) && res.passed) {
        res.passed = false;
        res.detail = "m=" + std::to_string(m) + ": expected " + expect.get_str();
      }
    }
  }
  return res;
}

CheckResult guarded(const Task& task, const std::string& label) {
  try {
    return task();
  } catch (const std::exception& e) {
    return CheckResult{label, 0, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

unsigned thread_cap() {
  unsigned cap = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ARCLINE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = static_cast<unsigned>(v);
  }
  return cap;
}

std::vector<CheckResult> run_verify(unsigned max_ambient, unsigned threads) {
  std::vector<std::pair<std::string, Task>> tasks;
  for (unsigned n = 3; n <= max_ambient; ++n) {
    tasks.emplace_back("chow/schubert agreement, n=" + std::to_string(n), [n] { return agreement(n); });
  }
  for (unsigned n = 3; n <= max_ambient; ++n) {
    tasks.emplace_back("lines through a point, n=" + std::to_string(n), [n] { return closed_form(n); });
  }
  tasks.emplace_back("weight homogeneity", [] { return weight_homogeneity(); });
  tasks.emplace_back("presentation round trip", [max_ambient] { return presentation_round_trip(max_ambient); });
  tasks.emplace_back("fermat cubic", [] { return fermat_cubic(); });
  tasks.emplace_back("bound sweep", [] { return bound_sweep(); });

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = guarded(tasks[i].second, tasks[i].first);
  };
  const unsigned count = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace arcline::cli
