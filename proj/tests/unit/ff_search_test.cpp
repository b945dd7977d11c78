#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "arcline/error.hpp"
#include "arcline/ff_search.hpp"
#include "arcline/line_locus.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace arcline::ff {
namespace {

using testkit::Rng;

FFConfig config(std::uint32_t p, unsigned n, std::initializer_list<const char*> polys) {
  FFConfig cfg{p, n, {}};
  for (const char* t : polys) cfg.generators.push_back(parse_poly(t, n));
  return cfg;
}

std::uint64_t projective_points(unsigned dim, std::uint64_t p) {
  std::uint64_t total = 0, power = 1;
  for (unsigned i = 0; i <= dim; ++i, power *= p) total += power;
  return total;
}

// Every coefficient of f(base + t dir) vanishes mod p.
bool vanishes_on_line(const SparsePoly& f, const FFLine& l, std::uint32_t p) {
  const std::vector<BigInt> base(l.base.begin(), l.base.end()), dir(l.direction.begin(), l.direction.end());
  for (const auto& c : testkit::restrict_to_line(f, base, dir)) {
    if (mpz_fdiv_ui(c.get_mpz_t(), p) != 0) return false;
  }
  return true;
}

TEST(Primes, Trial) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(49));
  EXPECT_TRUE(is_prime(2147483647));
}

TEST(Config, Validation) {
  try {
    LineSearch(config(6, 3, {}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.diagnosis(), Diagnosis::NotPrime);
  }
  EXPECT_NO_THROW(LineSearch(config(2147483647, 2, {})));
  EXPECT_THROW(LineSearch(config(2147483659U, 2, {})), DomainError);
  FFConfig far{5, 2, {parse_poly("x4")}};
  EXPECT_THROW(LineSearch{far}, DomainError);
  FFConfig inhomogeneous{5, 2, {parse_poly("x0^2 + x1")}};
  EXPECT_THROW(LineSearch{inhomogeneous}, DomainError);
}

TEST(Enumeration, EmptyGeneratorsGiveGaussianBinomial) {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const LineSearch s(config(p, n, {}));
      const BigInt expect = testkit::gaussian_binomial(n + 1, 2, p);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(s.count_lines())), expect) << p << " " << n;
      EXPECT_EQ(BigInt(static_cast<unsigned long>(s.total_lines())), expect);
    }
  }
}

TEST(Enumeration, RepresentativesAreDistinctReducedEchelon) {
  const LineSearch s(config(3, 3, {}));
  const auto lines = s.lines();
  std::set<std::pair<FFPoint, FFPoint>> seen;
  for (const auto& l : lines) {
    ASSERT_TRUE(seen.emplace(l.base, l.direction).second);
    const auto c1 = std::find_if(l.base.begin(), l.base.end(), [](auto x) { return x != 0; }) - l.base.begin();
    const auto c2 =
        std::find_if(l.direction.begin(), l.direction.end(), [](auto x) { return x != 0; }) - l.direction.begin();
    ASSERT_LT(c1, c2);
    ASSERT_EQ(l.base[c1], 1U);
    ASSERT_EQ(l.direction[c2], 1U);
    ASSERT_EQ(l.base[c2], 0U);
  }
}

TEST(Enumeration, FermatCubicSurfaceSplitsOverSeven) {
  // 7 = 1 mod 3, so every one of the 27 lines is defined over F_7.
  const FFConfig cfg = config(7, 3, {"x0^3 + x1^3 + x2^3 + x3^3"});
  const LineSearch s(cfg);
  const auto lines = s.lines();
  EXPECT_EQ(lines.size(), 27U);
  for (const auto& l : lines) EXPECT_TRUE(vanishes_on_line(cfg.generators[0], l, 7));
  EXPECT_EQ(count_lines_ff(cfg), 27U);
}

TEST(Enumeration, FermatCubicOverFiveSeesFewer) {
  const auto count = count_lines_ff(config(5, 3, {"x0^3 + x1^3 + x2^3 + x3^3"}));
  EXPECT_LT(count, 27U);
}

TEST(Enumeration, TwoPlanesInThreeSpace) {
  // Lines in x0 = 0 plus lines in x1 = 0, minus the shared line x0 = x1 = 0.
  const std::uint64_t per_plane = projective_points(2, 5);
  EXPECT_EQ(count_lines_ff(config(5, 3, {"x0*x1"})), 2 * per_plane - 1);
}

TEST(Enumeration, SoundnessOnRandomCubics) {
  Rng rng(51);
  for (int c = 0; c < 6; ++c) {
    FFConfig cfg{5, 3, {testkit::random_form(rng, 4, 3, 6, 4)}};
    const LineSearch s(cfg);
    for (const auto& l : s.lines()) ASSERT_TRUE(vanishes_on_line(cfg.generators[0], l, 5)) << to_string(cfg.generators[0]);
  }
}

TEST(Enumeration, ContainmentMatchesPointSampling) {
  // A line lies on {f = 0} iff f vanishes at its p + 1 rational points
  // once deg f < p + 1.
  Rng rng(52);
  for (int c = 0; c < 4; ++c) {
    FFConfig cfg{7, 3, {testkit::random_form(rng, 4, 2, 5, 6)}};
    const LineSearch s(cfg);
    const LineSearch all(FFConfig{7, 3, {}});
    std::size_t sampled = 0;
    for (const auto& l : all.lines()) {
      bool on = s.on_variety(l.direction);
      for (std::uint32_t t = 0; t < 7 && on; ++t) {
        FFPoint pt(4);
        for (unsigned j = 0; j < 4; ++j) pt[j] = (l.base[j] + t * l.direction[j]) % 7;
        on = s.on_variety(pt);
      }
      if (on) ++sampled;
    }
    ASSERT_EQ(sampled, s.count_lines());
  }
}

TEST(ThroughPoint, HyperplaneGivesAllDirections) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (unsigned n = 2; n <= 4; ++n) {
      const LineSearch s(config(p, n, {"x0 + x1"}));
      std::vector<long long> coords(n + 1, 0);
      coords[0] = 1;
      coords[1] = -1;
      const FFPoint pt = s.normalize(coords);
      EXPECT_EQ(s.count_lines_through(pt), projective_points(n - 2, p)) << p << " " << n;
    }
  }
}

TEST(ThroughPoint, QuadricDirectSolve) {
  // Q = x0 x3 + x1^2 - a x2^2 at [1:0:0:0]: directions with v3 = 0 and v1^2 = a v2^2.
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    for (long long a = 1; a < p; ++a) {
      const std::string text = "x0*x3 + x1^2 - " + std::to_string(a) + "*x2^2";
      FFConfig cfg{p, 3, {parse_poly(text, 3)}};
      const auto count = count_lines_through_point_ff(cfg, FFPoint{1, 0, 0, 0});
      EXPECT_EQ(count, testkit::square_roots_mod(a, p)) << text << " mod " << p;
    }
  }
}

TEST(ThroughPoint, RejectsPointOffVariety) {
  const LineSearch s(config(5, 3, {"x0^2 + x1^2 + x2^2 + x3^2"}));
  try {
    s.count_lines_through(FFPoint{1, 0, 0, 0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.diagnosis(), Diagnosis::PointNotOnVariety);
  }
  EXPECT_THROW(s.normalize({0, 0, 0, 0}), DomainError);
  EXPECT_THROW(s.normalize({1, 0, 0}), DomainError);
}

TEST(ThroughPoint, NormalizationAndCanonicalLines) {
  const LineSearch s(config(7, 3, {"x0^3 + x1^3 + x2^3 + x3^3"}));
  EXPECT_EQ(s.normalize({3, -3, 0, 0}), (FFPoint{1, 6, 0, 0}));
  const auto all = s.lines();
  const auto through = s.lines_through(FFPoint{1, 6, 0, 0});
  for (const auto& l : through) EXPECT_NE(std::find(all.begin(), all.end(), l), all.end());
}

// pt lies on the reduced echelon line l.
bool on_line(const FFLine& l, const FFPoint& pt, std::uint32_t p) {
  const auto c1 = std::find_if(l.base.begin(), l.base.end(), [](auto x) { return x != 0; }) - l.base.begin();
  const auto c2 =
      std::find_if(l.direction.begin(), l.direction.end(), [](auto x) { return x != 0; }) - l.direction.begin();
  for (std::size_t j = 0; j < pt.size(); ++j) {
    const std::uint64_t span = (std::uint64_t{pt[c1]} * l.base[j] + std::uint64_t{pt[c2]} * l.direction[j]) % p;
    if (span != pt[j]) return false;
  }
  return true;
}

TEST(ThroughPoint, AgreesWithFilteredEnumeration) {
  Rng rng(53);
  int trials = 0;
  while (trials < 30) {
    FFConfig cfg{3, 4, {testkit::random_form(rng, 5, 3, 8, 2)}};
    const LineSearch s(cfg);
    FFPoint raw(5);
    for (auto& x : raw) x = testkit::pick(rng, 0, 2);
    if (std::all_of(raw.begin(), raw.end(), [](auto x) { return x == 0; })) continue;
    const FFPoint pt = s.normalize(std::vector<long long>(raw.begin(), raw.end()));
    if (!s.on_variety(pt)) continue;
    ++trials;
    const auto all = s.lines();
    const auto expect = std::count_if(all.begin(), all.end(), [&](const FFLine& l) { return on_line(l, pt, 3); });
    const auto through = s.lines_through(pt);
    ASSERT_EQ(through.size(), static_cast<std::size_t>(expect)) << to_string(cfg.generators[0]);
    for (const auto& l : through) ASSERT_TRUE(on_line(l, pt, 3));
  }
}

TEST(Enumeration, SmoothDiagonalCubicBoundedByChowCount) {
  // a0 x0^3 + ... + a3 x3^3 with p != 3 and every a_i a unit is smooth.
  Rng rng(54);
  const BigInt chow = count_lines(CIType(3, {3})).value;
  for (std::uint32_t p : {5U, 7U, 13U}) {
    for (int c = 0; c < 4; ++c) {
      std::string text;
      for (unsigned j = 0; j < 4; ++j) {
        text += (j ? " + " : "") + std::to_string(testkit::pick(rng, 1, p - 1)) + "*x" + std::to_string(j) + "^3";
      }
      const auto count = count_lines_ff(config(p, 3, {text.c_str()}));
      EXPECT_LE(BigInt(static_cast<unsigned long>(count)), chow) << text << " mod " << p;
    }
  }
}

}  // namespace
}  // namespace arcline::ff
