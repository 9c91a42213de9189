#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace lauricella {
namespace {

using testing::point;
using testing::q;

bool has(const std::vector<Violation>& v, const std::string& label) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.label() == label; });
}

TEST(ParamPoint, ValidatesShape) {
  EXPECT_THROW(ParamPoint(q("2"), q("3"), {}), std::invalid_argument);
  EXPECT_THROW(ParamPoint(q("2"), q("0"), {q("5")}), std::invalid_argument);
  const Scalar f(FloatComplex(ExactComplex(2), 64));
  EXPECT_THROW(ParamPoint(f, q("3"), {q("5")}), std::invalid_argument);
  const ParamPoint p = point("2", "3", {"5", "7"});
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.gamma_product(), Scalar(35));
  EXPECT_EQ(p.gamma_product(SubsetIndex::of(2, {2})), Scalar(7));
  EXPECT_EQ(p.gamma_product(SubsetIndex::empty(2)), Scalar(1));
}

TEST(Genericity, GenericPointHasNoViolations) {
  EXPECT_TRUE(check_genericity(point("2", "3", {"5", "7"})).empty());
  EXPECT_NO_THROW(require_generic(point("2", "3", {"5", "7"})));
}

TEST(Genericity, EachPredicateIsDetected) {
  EXPECT_TRUE(has(check_genericity(point("2", "3", {"1", "7"})), "G1[k=1]"));
  EXPECT_TRUE(has(check_genericity(point("1", "3", {"5", "7"})), "G2[I=[]]"));
  EXPECT_TRUE(has(check_genericity(point("7", "3", {"5", "7"})), "G2[I=[2]]"));
  EXPECT_TRUE(has(check_genericity(point("2", "35", {"5", "7"})), "G3[I=[1,2]]"));
  EXPECT_TRUE(has(check_genericity(point("-35", "3", {"5", "7"})), "G4"));
  // m = 2: alpha beta = -g1 g2.
  EXPECT_TRUE(has(check_genericity(point("-5", "7", {"5", "7"})), "G5"));
  // m = 3: alpha beta = g1 g2 g3.
  EXPECT_TRUE(has(check_genericity(point("6", "35", {"2", "3", "35"})), "G5"));
}

TEST(Genericity, RequireGenericNamesThePredicate) {
  try {
    require_generic(point("2", "3", {"5", "1"}));
    FAIL() << "expected GenericityError";
  } catch (const GenericityError& e) {
    EXPECT_EQ(e.predicate(), "G1[k=2]");
  }
}

TEST(Dualize, IsAnInvolutionAndInvertsEntries) {
  const ParamPoint p = point("2/3+i", "-5/7", {"3", "1/4-2*i"});
  const ParamPoint d = dualize(p);
  EXPECT_EQ(d.alpha, p.alpha.inverse());
  EXPECT_EQ(d.gamma_at(2), p.gamma_at(2).inverse());
  EXPECT_EQ(dualize(d), p);
}

TEST(SampleGeneric, DeterministicAndGeneric) {
  for (int m = 1; m <= 5; ++m) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const ParamPoint a = sample_generic(seed, m, 12);
      EXPECT_EQ(a, sample_generic(seed, m, 12));
      EXPECT_TRUE(check_genericity(a).empty());
      EXPECT_TRUE(a.is_exact());
    }
  }
  EXPECT_FALSE(sample_generic(1, 3, 12) == sample_generic(2, 3, 12));
}

TEST(SampleGeneric, ExhaustedBudgetThrows) {
  EXPECT_THROW(sample_generic(1, 3, 1), std::runtime_error);
}

TEST(ParamExponentials, QuarterTurnsAreExact) {
  const SeriesParams sp(q("1/2"), q("1/4"), {q("3/4"), q("5")});
  const ParamPoint p = param_exponentials(sp, 128);
  EXPECT_EQ(p.alpha, Scalar(FloatComplex(ExactComplex(-1), 128)));
  EXPECT_EQ(p.beta, Scalar(FloatComplex(ExactComplex(0, 1), 128)));
  EXPECT_EQ(p.gamma_at(1), Scalar(FloatComplex(ExactComplex(0, -1), 128)));
  EXPECT_EQ(p.gamma_at(2), Scalar(FloatComplex(ExactComplex(1), 128)));
}

TEST(ParamExponentials, GenericValueHasUnitModulus) {
  const ParamPoint p = param_exponentials(SeriesParams(q("1/3"), q("1/5"), {q("1/7")}), 192);
  const Scalar a = p.alpha;
  const Scalar expected(FloatComplex(ExactComplex(mpq_class(-1, 2)), 192));
  const FloatComplex z = a.approx();
  EXPECT_TRUE(approx_equal(Scalar(FloatComplex(z.re, MpReal(192))), expected, -180));
  EXPECT_TRUE(approx_equal(a * a * a, Scalar(FloatComplex(ExactComplex(1), 192)), -180));
}

}  // namespace
}  // namespace lauricella
