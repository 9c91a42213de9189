#include <mutex>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

namespace {

// B_0, B_2, B_4, ... (even-index Bernoulli numbers), grown on demand.
const mpq_class& bernoulli_even(std::size_t k) {
  static std::mutex mu;
  static std::vector<mpq_class> all{mpq_class(1)};  // B_0..B_n
  static std::vector<mpq_class> even{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (even.size() <= k) {
    // sum_{j=0}^{n} binom(n+1, j) B_j = 0
    const std::size_t n = all.size();
    mpz_class binom = 1;
    mpq_class acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += binom * all[j];
      binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    mpq_class b = -acc / mpq_class(static_cast<unsigned long>(n + 1));
    b.canonicalize();
    all.push_back(b);
    if (n % 2 == 0) even.push_back(b);
  }
  return even[k];
}

FloatComplex constant(long v, mpfr_prec_t prec) {
  return FloatComplex(MpReal(v, prec), MpReal(0L, prec));
}

FloatComplex rounded(const FloatComplex& z, mpfr_prec_t prec) {
  FloatComplex out(prec);
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  return out;
}

bool is_pole(const FloatComplex& z) {
  return mpfr_zero_p(z.im.get()) && mpfr_integer_p(z.re.get()) && mpfr_sgn(z.re.get()) <= 0;
}

// Stirling series for log Gamma(w), valid for |w| large and Re w > 0.
FloatComplex stirling_log_gamma(const FloatComplex& w, mpfr_prec_t prec) {
  const FloatComplex half(MpReal(mpq_class(1, 2), prec), MpReal(0L, prec));
  MpReal two_pi = MpReal::pi(prec);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
  MpReal log_two_pi(prec);
  mpfr_log(log_two_pi.get(), two_pi.get(), MPFR_RNDN);
  mpfr_div_ui(log_two_pi.get(), log_two_pi.get(), 2, MPFR_RNDN);

  FloatComplex acc = (w - half) * log(w) - w + FloatComplex(log_two_pi, MpReal(0L, prec));
  const FloatComplex inv = constant(1, prec) / w;
  const FloatComplex inv2 = inv * inv;
  FloatComplex power = inv;  // w^{-(2k-1)}
  MpReal tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<mpfr_exp_t>(prec) - 8, MPFR_RNDN);
  for (std::size_t k = 1; k < 4 * static_cast<std::size_t>(prec); ++k) {
    mpq_class coef = bernoulli_even(k) / mpq_class(static_cast<unsigned long>(2 * k * (2 * k - 1)));
    const FloatComplex term = FloatComplex(MpReal(coef, prec), MpReal(0L, prec)) * power;
    acc = acc + term;
    if (mpfr_cmp(term.abs().get(), tol.get()) < 0) break;
    power = power * inv2;
  }
  return acc;
}

}  // namespace

FloatComplex gamma_function(const FloatComplex& z, const std::string& label) {
  if (is_pole(z)) {
    throw GammaPoleError(label, "Gamma has a pole at " + label + " = " + z.re.to_string());
  }
  const mpfr_prec_t prec = z.precision();
  const mpfr_prec_t work = prec + 32;
  const FloatComplex zw = rounded(z, work);

  // Shift until Re(w) exceeds a threshold where the asymptotic series
  // reaches the working precision.
  const long threshold = static_cast<long>(work / 8) + 16;
  long shift = 0;
  const double re = mpfr_get_d(zw.re.get(), MPFR_RNDN);
  if (re < static_cast<double>(threshold)) shift = static_cast<long>(threshold - re) + 1;

  FloatComplex denom = constant(1, work);
  for (long j = 0; j < shift; ++j) denom = denom * (zw + constant(j, work));
  const FloatComplex w = zw + constant(shift, work);
  const FloatComplex g = exp(stirling_log_gamma(w, work)) / denom;
  return rounded(g, prec);
}

FloatComplex gamma_of(const Scalar& z, mpfr_prec_t precision, const std::string& label) {
  if (z.is_exact()) {
    const ExactComplex& e = z.exact();
    if (sgn(e.im) == 0 && e.re.get_den() == 1 && sgn(e.re) <= 0) {
      throw GammaPoleError(label, "Gamma has a pole at " + label + " = " + z.to_string());
    }
  }
  return gamma_function(z.to_float(precision), label);
}

FloatComplex phi_gamma_constant(const SeriesParams& sp, SubsetIndex subset, mpfr_prec_t precision) {
  const Scalar one = sp.a.constant_like(1);
  const mpfr_prec_t work = precision + 16;
  FloatComplex num = constant(1, work);
  Scalar c_total = sp.a.constant_like(0);
  Scalar c_subset = sp.a.constant_like(0);
  for (int k = 1; k <= sp.m; ++k) {
    const std::string idx = std::to_string(k);
    c_total += sp.c_at(k);
    if (subset.contains(k)) {
      c_subset += sp.c_at(k);
      num = num * gamma_of(sp.c_at(k) - one, work, "c_" + idx + "-1");
    } else {
      num = num * gamma_of(one - sp.c_at(k), work, "1-c_" + idx);
    }
  }
  num = num * gamma_of(c_total - sp.a - sp.a.constant_like(sp.m) + one, work, "sum(c)-a-m+1");
  num = num * gamma_of(one - sp.b, work, "1-b");
  const Scalar shift = sp.a.constant_like(subset.size()) - one;
  FloatComplex den = gamma_of(c_subset - sp.a - shift, work, "sum_I(c)-a-|I|+1");
  den = den * gamma_of(c_subset - sp.b - shift, work, "sum_I(c)-b-|I|+1");
  return rounded(num / den, precision);
}

}  // namespace lauricella
