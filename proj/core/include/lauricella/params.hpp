#ifndef LAURICELLA_PARAMS_HPP
#define LAURICELLA_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lauricella/scalar.hpp"
#include "lauricella/subset.hpp"

namespace lauricella {

/// Exponential parameters alpha = e^{2 pi i a}, beta = e^{2 pi i b},
/// gamma_k = e^{2 pi i c_k}. Every closed form in this library is a
/// rational function of these values, so they may be any nonzero field
/// elements (exact Gaussian rationals in the verification suites).
struct ParamPoint {
  int m = 0;
  Scalar alpha;
  Scalar beta;
  std::vector<Scalar> gamma;

  ParamPoint() = default;
  /// Throws std::invalid_argument if gamma.size() != m, m out of range,
  /// any entry is zero, or the entries mix exact and float kinds.
  ParamPoint(Scalar alpha, Scalar beta, std::vector<Scalar> gamma);

  bool is_exact() const { return alpha.is_exact(); }
  Scalar constant(long v) const { return alpha.constant_like(v); }
  Scalar one() const { return constant(1); }

  /// prod_{i in I} gamma_i (1 for the empty set).
  Scalar gamma_product(SubsetIndex subset) const;
  Scalar gamma_product() const { return gamma_product(SubsetIndex::full(m)); }
  const Scalar& gamma_at(int k) const { return gamma.at(static_cast<std::size_t>(k - 1)); }
};

bool operator==(const ParamPoint& a, const ParamPoint& b);

/// Series parameters a, b, c_1..c_m.
struct SeriesParams {
  int m = 0;
  Scalar a;
  Scalar b;
  std::vector<Scalar> c;

  SeriesParams() = default;
  SeriesParams(Scalar a, Scalar b, std::vector<Scalar> c);
  bool is_exact() const;
  const Scalar& c_at(int k) const { return c.at(static_cast<std::size_t>(k - 1)); }
};

/// One failed genericity predicate. `code` is "G1".."G5"; `subset` is set
/// for G2/G3, `index` for G1.
struct Violation {
  std::string code;
  SubsetIndex subset;
  int index = 0;
  std::string description;

  /// "G1[k=2]", "G2[I=[1,2]]", "G4".
  std::string label() const;
};

/// Multiplicative genericity conditions:
///   G1  gamma_k != 1                        for all k
///   G2  alpha != prod_{i in I} gamma_i       for all I (incl. I = {} : alpha != 1)
///   G3  beta  != prod_{i in I} gamma_i       for all I
///   G4  alpha != -prod_k gamma_k
///   G5  alpha*beta != (-1)^{m+1} prod_k gamma_k
/// Exact points are compared exactly; float points with a relative
/// tolerance of 2^{-(precision-8)}.
std::vector<Violation> check_genericity(const ParamPoint& p);

/// Throws GenericityError naming the first violation, if any.
void require_generic(const ParamPoint& p);

/// Inverts every entry; an involution.
ParamPoint dualize(const ParamPoint& p);

struct SampleOptions {
  int retry_budget = 10000;
};

/// Deterministic random generic point with Gaussian-rational entries. Real
/// parts are p/q with |p| <= max_numerator and 1 <= q <= max_numerator;
/// imaginary parts use numerators bounded by max_numerator / 2. Throws
/// std::runtime_error when no generic point is found within the budget.
ParamPoint sample_generic(std::uint64_t seed, int m, int max_numerator,
                          SampleOptions options = {});

/// alpha = exp(2 pi i a) etc. at `precision` bits (>= 53). Exact rational
/// inputs are reduced modulo 1 exactly, and quarter-turns are returned
/// exactly representable (a = 1/2 gives -1 with zero imaginary part).
ParamPoint param_exponentials(const SeriesParams& sp, mpfr_prec_t precision = kDefaultPrecision);

/// exp(2 pi i z) as a float scalar.
Scalar exp_2pi_i(const Scalar& z, mpfr_prec_t precision);

}  // namespace lauricella

#endif  // LAURICELLA_PARAMS_HPP
