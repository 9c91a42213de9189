#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

namespace lauricella {
namespace {

using testing::q;

Scalar flt(const std::string& re, const std::string& im = "0") {
  MpReal r(256), i(256);
  mpfr_set_str(r.get(), re.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(i.get(), im.c_str(), 10, MPFR_RNDN);
  return Scalar(FloatComplex(std::move(r), std::move(i)));
}

SeriesParams reference_params() { return SeriesParams(q("1/3"), q("1/5"), {q("1/7")}); }

TEST(MultiIndices, ShellOrder) {
  const auto idx = multi_indices(2, 2);
  ASSERT_EQ(idx.size(), 6u);
  EXPECT_EQ(idx[0], (MultiIndex{0, 0}));
  EXPECT_EQ(idx[1], (MultiIndex{1, 0}));
  EXPECT_EQ(idx[2], (MultiIndex{0, 1}));
  EXPECT_EQ(idx[3], (MultiIndex{2, 0}));
  EXPECT_EQ(idx[5], (MultiIndex{0, 2}));
  EXPECT_EQ(multi_indices(3, 4).size(), 35u);
}

TEST(Coefficients, KnownValues) {
  const TruncatedSeries s = fc_coefficients(SeriesParams(q("1"), q("1"), {q("1"), q("1")}), 3);
  EXPECT_EQ(s.at({0, 0}), Scalar(1));
  EXPECT_EQ(s.at({1, 1}), Scalar(4));
  EXPECT_EQ(s.at({2, 0}), Scalar(1));
  // (a)_3 (b)_3 / ((c1)_2 2! (c2)_1 1!) with a = b = c = 1: 36 / 4.
  EXPECT_EQ(s.at({2, 1}), q("9"));
  EXPECT_THROW(s.at({4, 0}), std::out_of_range);
}

TEST(Coefficients, PochhammerZeroThrows) {
  try {
    fc_coefficients(SeriesParams(q("1/2"), q("1/3"), {q("-2")}), 6);
    FAIL() << "expected PochhammerError";
  } catch (const PochhammerError& e) {
    EXPECT_EQ(e.index(), 1);
    EXPECT_EQ(e.degree(), 3);
  }
  EXPECT_NO_THROW(fc_coefficients(SeriesParams(q("1/2"), q("1/3"), {q("-2")}), 2));
}

TEST(Evaluation, LogarithmCase) {
  // 2F1(1, 1; 2; x) = -log(1 - x) / x.
  const SeriesParams sp(q("1"), q("1"), {q("2")});
  const SeriesValue v = fc_eval(sp, {q("1/10")}, 60);
  const double expected = -std::log(0.9) / 0.1;
  EXPECT_NEAR(v.value.approx().re.to_double(), expected, 1e-12);
  EXPECT_LT(v.tail_bound, 1e-40);
  EXPECT_EQ(v.order, 60);
}

TEST(Evaluation, FrozenGaussValue) {
  const SeriesValue v = fc_eval(reference_params(), {q("1/10")}, 60);
  EXPECT_TRUE(approx_equal(v.value, flt("1.050218452376160984946624974395787373424"), -120));
}

TEST(Evaluation, FrozenAppellValue) {
  const SeriesParams sp(q("1/3"), q("1/5"), {q("1/7"), q("2/9")});
  const SeriesValue v = fc_eval(sp, {q("1/20"), q("1/30")}, 70);
  EXPECT_TRUE(approx_equal(v.value, flt("1.041224295183008978962311169439884028246"), -110));
}

TEST(Evaluation, ReducesToOneVariableOnAxis) {
  const SeriesParams two(q("1/3"), q("1/5"), {q("1/7"), q("2/9")});
  const SeriesParams one(q("1/3"), q("1/5"), {q("1/7")});
  for (int order : {0, 3, 12, 25}) {
    EXPECT_EQ(partial_sum(fc_coefficients(two, order), {q("1/10"), q("0")}),
              partial_sum(fc_coefficients(one, order), {q("1/10")}));
    EXPECT_EQ(fc_eval(two, {q("1/10"), q("0")}, order).value, fc_eval(one, {q("1/10")}, order).value)
        << "order " << order;
  }
}

TEST(Evaluation, OutsideDomainThrows) {
  EXPECT_THROW(fc_eval(reference_params(), {q("2")}, 10), DomainError);
  const SeriesParams sp(q("1/3"), q("1/5"), {q("1/7"), q("2/9")});
  EXPECT_THROW(fc_eval(sp, {q("1/2"), q("1/2")}, 10), DomainError);
  EXPECT_THROW(fc_eval(sp, {q("1/10")}, 10), std::invalid_argument);
  EXPECT_NEAR(domain_radius({q("1/4"), q("1/9")}), 0.5 + 1.0 / 3.0, 1e-15);
}

TEST(Solutions, FrozenShiftedSolution) {
  const SeriesValue v = f_I_eval(reference_params(), SubsetIndex::full(1), {q("1/10")}, 60);
  EXPECT_TRUE(approx_equal(v.value, flt("0.1491766681648516334831557042477243766584"), -120));
  EXPECT_THROW(f_I_eval(reference_params(), SubsetIndex::full(1), {q("0")}, 10), DomainError);
}

TEST(Solutions, ShiftedParameters) {
  const SeriesParams sp(q("1/3"), q("1/5"), {q("1/7"), q("2/9")});
  const SeriesParams s = shifted_params(sp, SubsetIndex::of(2, {2}));
  EXPECT_EQ(s.a, q("1/3") + Scalar(1) - q("2/9"));
  EXPECT_EQ(s.b, q("1/5") + Scalar(1) - q("2/9"));
  EXPECT_EQ(s.c_at(1), q("1/7"));
  EXPECT_EQ(s.c_at(2), Scalar(2) - q("2/9"));
}

TEST(Solutions, LocalMonodromyAroundCoordinateAxis) {
  // Across the branch cut of x^{1-c_1} the two sides differ by exp(2 pi i (1 - c_1)).
  const SeriesParams sp = reference_params();
  const Scalar below(FloatComplex(ExactComplex(mpq_class(-1, 10), mpq_class(-1, 1000000000)), 256));
  const Scalar above(FloatComplex(ExactComplex(mpq_class(-1, 10), mpq_class(1, 1000000000)), 256));
  const Scalar fa = f_I_eval(sp, SubsetIndex::full(1), {above}, 60).value;
  const Scalar fb = f_I_eval(sp, SubsetIndex::full(1), {below}, 60).value;
  const Scalar expected = exp_2pi_i(Scalar(1) - q("1/7"), 256);
  EXPECT_TRUE(approx_equal(fb * expected, fa, -20));
}

TEST(Residuals, VanishForEverySolution) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<Scalar> c;
    for (int k = 1; k <= m; ++k) c.push_back(Scalar::rational(2 * k + 1, 5 + k));
    const SeriesParams sp(q("2/7"), q("-3/11"), c);
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
      const auto res = ec_residual(sp, SubsetIndex(bits, m), 8);
      ASSERT_EQ(res.size(), static_cast<std::size_t>(m));
      EXPECT_GE(residual_clean_degree(res), 7) << "m=" << m << " I=" << bits;
    }
  }
}

TEST(Residuals, PerturbedCoefficientIsDetected) {
  const SeriesParams sp(q("2/7"), q("-3/11"), {q("3/5"), q("4/9")});
  TruncatedSeries s = fc_coefficients(sp, 6);
  s.at({1, 2}) += q("1/1000");
  const int clean = residual_clean_degree(ec_residual_of(sp, SubsetIndex::empty(2), s));
  EXPECT_LT(clean, 5);
  EXPECT_GE(clean, 2);
  const SeriesParams fp(Scalar(FloatComplex(ExactComplex(1), 64)), Scalar(FloatComplex(ExactComplex(1), 64)),
                        {Scalar(FloatComplex(ExactComplex(2), 64))});
  EXPECT_THROW(ec_residual(fp, SubsetIndex::empty(1), 4), std::invalid_argument);
}

TEST(Gamma, FrozenComplexValues) {
  const FloatComplex g1 = gamma_function(FloatComplex(ExactComplex(mpq_class(1, 2), 1), 256));
  EXPECT_TRUE(approx_equal(Scalar(g1), flt("0.3006946172606558162173894638352104402307",
                                             "-0.4249678794331238126098496402574059704735"), -120));
  const FloatComplex g2 = gamma_function(FloatComplex(ExactComplex(mpq_class(-5, 2), mpq_class(1, 3)), 256));
  EXPECT_TRUE(approx_equal(Scalar(g2), flt("-0.5612686521630053585156003128105338330861",
                                             "-0.2166529420289015641448064416882480501044"), -120));
  const FloatComplex five = gamma_function(FloatComplex(ExactComplex(5), 128));
  EXPECT_TRUE(approx_equal(Scalar(five), Scalar(FloatComplex(ExactComplex(24), 128)), -110));
}

TEST(Gamma, PolesNameTheArgument) {
  try {
    gamma_of(q("-3"), 128, "z");
    FAIL() << "expected GammaPoleError";
  } catch (const GammaPoleError& e) {
    EXPECT_EQ(e.argument(), "z");
  }
  const SeriesParams sp(q("1/3"), q("1/5"), {q("1"), q("1/4")});
  try {
    phi_gamma_constant(sp, SubsetIndex::of(2, {1}));
    FAIL() << "expected GammaPoleError";
  } catch (const GammaPoleError& e) {
    EXPECT_EQ(e.argument(), "c_1-1");
  }
  try {
    phi_gamma_constant(sp, SubsetIndex::empty(2));
    FAIL() << "expected GammaPoleError";
  } catch (const GammaPoleError& e) {
    EXPECT_EQ(e.argument(), "1-c_1");
  }
}

TEST(Gamma, FrozenConnectionConstants) {
  const SeriesParams sp = reference_params();
  EXPECT_TRUE(approx_equal(Scalar(phi_gamma_constant(sp, SubsetIndex::empty(1))),
                           flt("-4.946052834263274978187085555903979185008"), -120));
  EXPECT_TRUE(approx_equal(Scalar(phi_gamma_constant(sp, SubsetIndex::full(1))),
                           flt("0.4903830831011143676577264902883058865986"), -120));
}

}  // namespace
}  // namespace lauricella
