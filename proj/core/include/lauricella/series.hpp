#ifndef LAURICELLA_SERIES_HPP
#define LAURICELLA_SERIES_HPP

#include <map>
#include <optional>
#include <vector>

#include "lauricella/params.hpp"
#include "lauricella/scalar.hpp"
#include "lauricella/subset.hpp"

namespace lauricella {

using MultiIndex = std::vector<int>;

/// Coefficients of a power series in x_1..x_m up to total degree `order`,
/// stored shell by shell (total degree, then lexicographic).
struct TruncatedSeries {
  int m = 0;
  int order = 0;
  std::vector<MultiIndex> indices;
  std::vector<Scalar> coefficients;

  std::optional<std::size_t> find(const MultiIndex& n) const;
  const Scalar& at(const MultiIndex& n) const;
  Scalar& at(const MultiIndex& n);

  std::map<MultiIndex, std::size_t> lookup;
};

/// All multi-indices of length m with total degree <= order, shell order.
std::vector<MultiIndex> multi_indices(int m, int order);

/// Coefficients (a)_{|n|} (b)_{|n|} / (prod (c_k)_{n_k} n_k!) of F_C via
/// the one-step recurrence along the first nonzero coordinate. Exact for
/// exact parameters. Throws PochhammerError when some (c_k)_{n_k} vanishes
/// inside the cutoff.
TruncatedSeries fc_coefficients(const SeriesParams& sp, int order);

/// sum_n coeff_n x^n in the scalar kind of the inputs.
Scalar partial_sum(const TruncatedSeries& s, const std::vector<Scalar>& x);

struct SeriesValue {
  Scalar value;
  /// Heuristic: last shell magnitude times r/(1-r), r the ratio of the last
  /// two shell magnitudes; infinity when r >= 1.
  double tail_bound = 0.0;
  int order = 0;
};

/// sum_k sqrt|x_k|; the series converges when this is < 1.
double domain_radius(const std::vector<Scalar>& x);

/// Partial sum of F_C(a, b, c; x) through total degree `order`, evaluated in
/// floating point at `precision` bits. Throws DomainError outside D_C.
SeriesValue fc_eval(const SeriesParams& sp, const std::vector<Scalar>& x, int order,
                    mpfr_prec_t precision = kDefaultPrecision);

/// Parameters of the F_C factor of f_I: a + |I| - c_I, b + |I| - c_I and
/// c^I_k = 2 - c_k on I, c_k off I.
SeriesParams shifted_params(const SeriesParams& sp, SubsetIndex subset);

/// f_I = prod_{i in I} x_i^{1-c_i} F_C(shifted; x), principal branch powers.
SeriesValue f_I_eval(const SeriesParams& sp, SubsetIndex subset, const std::vector<Scalar>& x,
                     int order, mpfr_prec_t precision = kDefaultPrecision);

/// Residual of theta_k(theta_k + c_k - 1) - x_k(theta + a)(theta + b)
/// applied to prod_{i in I} x_i^{1-c_i} sum_n coeff_n x^n. Entry k-1 holds
/// the coefficients of the k-th residual, indexed by n (the prefactor
/// exponent is implicit). Requires exact parameters.
std::vector<TruncatedSeries> ec_residual(const SeriesParams& sp, SubsetIndex subset, int order);

/// Same, for a caller-supplied coefficient table.
std::vector<TruncatedSeries> ec_residual_of(const SeriesParams& sp, SubsetIndex subset,
                                            const TruncatedSeries& coeffs);

/// Largest total degree d such that every residual coefficient of degree
/// <= d vanishes; -1 if a constant term is already nonzero.
int residual_clean_degree(const std::vector<TruncatedSeries>& residuals);

/// Gamma function at a float argument; throws GammaPoleError at
/// non-positive integers, naming `label`.
FloatComplex gamma_function(const FloatComplex& z, const std::string& label = "z");

/// Exact-aware pole test followed by gamma_function at `precision`.
FloatComplex gamma_of(const Scalar& z, mpfr_prec_t precision, const std::string& label);

/// prod_{i in I} G(c_i-1) prod_{j not in I} G(1-c_j) G(sum c - a - m + 1) G(1-b)
///   / (G(c_I - a - |I| + 1) G(c_I - b - |I| + 1)).
FloatComplex phi_gamma_constant(const SeriesParams& sp, SubsetIndex subset,
                                mpfr_prec_t precision = kDefaultPrecision);

}  // namespace lauricella

#endif  // LAURICELLA_SERIES_HPP
