#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "arcline/bounds.hpp"
#include "arcline/error.hpp"
#include "arcline/line_locus.hpp"

namespace arcline {
namespace {

ChowClass mono(unsigned n, unsigned a, unsigned b, long c = 1) { return ChowClass::monomial(n, a, b, c); }

Diagnosis diagnosis_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.diagnosis();
  }
  ADD_FAILURE() << "no DomainError";
  return Diagnosis::Internal;
}

TEST(CIType, Validation) {
  EXPECT_THROW(CIType(1, {2}), DomainError);
  EXPECT_THROW(CIType(3, {}), DomainError);
  EXPECT_THROW(CIType(3, {2, 2, 2}), DomainError);
  EXPECT_THROW(CIType(3, {0}), DomainError);
  const CIType t(8, {3, 4});
  EXPECT_EQ(t.codim(), 2U);
  EXPECT_EQ(t.dimension(), 6U);
  EXPECT_EQ(t.degree_sum(), 7U);
  EXPECT_EQ(t.degree(), 12);
  EXPECT_EQ(to_string(t), "(3,4) in P^8");
}

TEST(DivisorFactors, OneEquation) {
  EXPECT_EQ(divisor_factors(3), (std::vector<LinearFactor>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  EXPECT_EQ(line_locus_factors(CIType(4, {2, 2})).size(), 6U);
}

TEST(LineLocus, Classes) {
  EXPECT_EQ(line_locus_class(CIType(3, {3})), mono(3, 2, 2, 27));
  EXPECT_EQ(line_locus_class(CIType(4, {2, 2})), mono(4, 3, 3, 16));
}

TEST(LineLocus, HyperplaneInPlaneIsItsLine) {
  // One line in P^2: class j0 (j0 + j1) = h0 h1.
  const ChowClass c = line_locus_class(CIType(2, {1}));
  EXPECT_EQ(c, mono(2, 1, 1));
  BivariateForm expect{{{2, 0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(to_j_basis(c).terms, expect);
}

// Test name such as P5_3_3.
template <class Case>
std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string name = "P" + std::to_string(info.param.n);
  for (unsigned d : info.param.d) name += "_" + std::to_string(d);
  return name;
}

struct Count {
  unsigned n;
  std::vector<unsigned> d;
  long value;
};

class CountLines : public ::testing::TestWithParam<Count> {};

TEST_P(CountLines, Value) {
  const Count c = GetParam();
  const LineCount lc = count_lines(CIType(c.n, c.d));
  EXPECT_EQ(lc.kind, LineCount::Kind::WholeVariety);
  EXPECT_EQ(lc.value, c.value);
  EXPECT_EQ(lc.certificate, mono(c.n, c.n - 1, c.n - 1, c.value));
}

INSTANTIATE_TEST_SUITE_P(Known, CountLines,
                         ::testing::Values(Count{3, {3}, 27}, Count{4, {5}, 2875}, Count{4, {2, 2}, 16},
                                           Count{5, {7}, 698005}, Count{6, {9}, 305093061},
                                           Count{5, {3, 3}, 1053}, Count{5, {2, 4}, 1280},
                                           Count{7, {2, 2, 2, 2}, 512}),
                         case_name<Count>);

TEST(CountLinesErrors, DimensionConditionNamesTheCondition) {
  try {
    count_lines(CIType(4, {3}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.diagnosis(), Diagnosis::DimensionCondition);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("2(n−1)−r"), std::string::npos) << msg;
    EXPECT_NE(msg.find("expected 5, got 3"), std::string::npos) << msg;
  }
}

TEST(CountLinesErrors, LinearEquationsRejected) {
  EXPECT_THROW(count_lines(CIType(4, {1, 4})), DomainError);
}

TEST(Contact, QuinticProduct) {
  EXPECT_EQ(contact_class(4, 5, 5), mono(4, 2, 3, 650) + mono(4, 3, 2, 1225) + mono(4, 4, 1, 650));
  EXPECT_EQ(contact_class(4, 5, 6), mono(4, 3, 3, 2875));
  EXPECT_EQ(contact_class(4, 5, 1), mono(4, 1, 0, 5));
  EXPECT_THROW(contact_class(4, 5, 0), DomainError);
  EXPECT_THROW(contact_class(4, 5, 7), DomainError);
}

TEST(Contact, FirstFactorIsTheHypersurface) {
  for (unsigned d = 1; d <= 6; ++d) EXPECT_EQ(contact_class(5, d, 1), mono(5, 1, 0, static_cast<long>(d)));
}

TEST(Sweep, QuinticSurface) { EXPECT_EQ(swept_degree(contact_class(4, 5, 5), 2), 650); }

TEST(Sweep, QuinticLinesSweepTheSurface) {
  // Line locus times h0 is already top-dimensional and pure.
  EXPECT_EQ(swept_degree(line_locus_class(CIType(4, {5})), 1), 2875);
}

TEST(Sweep, CubicSurfaceContact) {
  EXPECT_EQ(swept_degree(contact_class(3, 3, 4), 1), 27);
  EXPECT_EQ(swept_degree(contact_class(3, 3, 3), 2), 6);
  EXPECT_EQ(diagnosis_of([] { swept_degree(contact_class(3, 3, 3), 1); }), Diagnosis::NonPure);
}

struct Through {
  unsigned n;
  std::vector<unsigned> d;
  long value;
};

class PointLines : public ::testing::TestWithParam<Through> {};

TEST_P(PointLines, Value) {
  const Through c = GetParam();
  const LineCount lc = lines_through_point(CIType(c.n, c.d));
  EXPECT_EQ(lc.kind, LineCount::Kind::ThroughPoint);
  EXPECT_EQ(lc.value, c.value);
  EXPECT_EQ(lc.certificate, mono(c.n, c.n, c.n - 1, c.value));
}

INSTANTIATE_TEST_SUITE_P(Known, PointLines,
                         ::testing::Values(Through{3, {2}, 2}, Through{4, {3}, 6}, Through{8, {3, 4}, 144},
                                           Through{7, {6}, 720}, Through{8, {5, 2}, 240}, Through{8, {4, 3}, 144},
                                           Through{9, {4, 2, 2}, 96}, Through{9, {3, 3, 2}, 72},
                                           Through{10, {3, 2, 2, 2}, 48}, Through{11, {2, 2, 2, 2, 2}, 32}),
                         case_name<Through>);

TEST(PointLinesErrors, Regimes) {
  EXPECT_EQ(diagnosis_of([] { lines_through_point(CIType(5, {3})); }), Diagnosis::InfinitelyManyLines);
  EXPECT_EQ(diagnosis_of([] { lines_through_point(CIType(3, {3})); }), Diagnosis::NoLinesThroughGeneralPoint);
  EXPECT_THROW(lines_through_point(CIType(4, {1, 3})), DomainError);
}

TEST(PointLines, ClosedFormSweep) {
  for (unsigned n = 3; n <= 12; ++n) {
    for (unsigned r = 1; 2 * r <= n - 1; ++r) {
      for (const auto& d : partitions(n - 1, r, 2)) {
        BigInt expect = 1;
        for (unsigned x : d) expect *= factorial_of(x);
        ASSERT_EQ(lines_through_point(CIType(n, d)).value, expect) << to_string(CIType(n, d));
      }
    }
  }
}

}  // namespace
}  // namespace arcline
