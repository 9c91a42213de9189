#include "lauricella/params.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "lauricella/errors.hpp"

namespace lauricella {

namespace {

void require_same_kind(const Scalar& reference, const Scalar& s, const char* what) {
  if (reference.is_exact() != s.is_exact()) {
    throw std::invalid_argument(std::string("mixed exact/float entries in ") + what);
  }
}

bool near(const Scalar& a, const Scalar& b) {
  if (a.is_exact()) return a == b;
  return approx_equal(a, b, -static_cast<double>(a.precision() - 8));
}

}  // namespace

ParamPoint::ParamPoint(Scalar a, Scalar b, std::vector<Scalar> g)
    : m(static_cast<int>(g.size())), alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("m must be in [1, 16]");
  require_same_kind(alpha, beta, "parameter point");
  for (const Scalar& x : gamma) require_same_kind(alpha, x, "parameter point");
  if (alpha.is_zero() || beta.is_zero()) throw std::invalid_argument("alpha and beta must be nonzero");
  for (const Scalar& x : gamma) {
    if (x.is_zero()) throw std::invalid_argument("gamma entries must be nonzero");
  }
}

Scalar ParamPoint::gamma_product(SubsetIndex subset) const {
  Scalar p = one();
  for (int k = 1; k <= m; ++k) {
    if (subset.contains(k)) p *= gamma_at(k);
  }
  return p;
}

bool operator==(const ParamPoint& a, const ParamPoint& b) {
  if (a.m != b.m || a.is_exact() != b.is_exact()) return false;
  return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

SeriesParams::SeriesParams(Scalar a_, Scalar b_, std::vector<Scalar> c_)
    : m(static_cast<int>(c_.size())), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("m must be in [1, 16]");
}

bool SeriesParams::is_exact() const {
  if (!a.is_exact() || !b.is_exact()) return false;
  for (const Scalar& x : c) {
    if (!x.is_exact()) return false;
  }
  return true;
}

std::string Violation::label() const {
  if (code == "G1") return "G1[k=" + std::to_string(index) + "]";
  if (code == "G2" || code == "G3") return code + "[I=" + subset.to_string() + "]";
  return code;
}

std::vector<Violation> check_genericity(const ParamPoint& p) {
  std::vector<Violation> out;
  const Scalar one = p.one();
  for (int k = 1; k <= p.m; ++k) {
    if (near(p.gamma_at(k), one)) {
      out.push_back({"G1", SubsetIndex::empty(p.m), k, "gamma_" + std::to_string(k) + " = 1"});
    }
  }
  for (const SubsetIndex& s : basis(p.m)) {
    const Scalar prod = p.gamma_product(s);
    if (near(p.alpha, prod)) {
      out.push_back({"G2", s, 0, "alpha = prod gamma over " + s.to_string()});
    }
  }
  for (const SubsetIndex& s : basis(p.m)) {
    const Scalar prod = p.gamma_product(s);
    if (near(p.beta, prod)) {
      out.push_back({"G3", s, 0, "beta = prod gamma over " + s.to_string()});
    }
  }
  const Scalar full = p.gamma_product();
  if (near(p.alpha, -full)) {
    out.push_back({"G4", SubsetIndex::full(p.m), 0, "alpha = -prod gamma"});
  }
  const Scalar sign = p.constant(p.m % 2 == 0 ? -1 : 1);  // (-1)^{m+1}
  if (near(p.alpha * p.beta, sign * full)) {
    out.push_back({"G5", SubsetIndex::full(p.m), 0, "alpha*beta = (-1)^{m+1} prod gamma"});
  }
  return out;
}

void require_generic(const ParamPoint& p) {
  auto violations = check_genericity(p);
  if (!violations.empty()) {
    throw GenericityError(violations.front().label(),
                          "non-generic parameters: " + violations.front().description);
  }
}

ParamPoint dualize(const ParamPoint& p) {
  std::vector<Scalar> g;
  g.reserve(p.gamma.size());
  for (const Scalar& x : p.gamma) g.push_back(x.inverse());
  return ParamPoint(p.alpha.inverse(), p.beta.inverse(), std::move(g));
}

namespace {

// Uniform integer in [lo, hi] by rejection; independent of the standard
// library's distribution implementation so seeds are portable.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Scalar draw_scalar(std::mt19937_64& rng, int max_numerator) {
  const long n = max_numerator;
  const long n_im = max_numerator / 2;
  while (true) {
    mpq_class re(draw(rng, -n, n), static_cast<unsigned long>(draw(rng, 1, n)));
    mpq_class im = 0;
    if (n_im > 0) im = mpq_class(draw(rng, -n_im, n_im), static_cast<unsigned long>(draw(rng, 1, n)));
    re.canonicalize();
    im.canonicalize();
    if (sgn(re) != 0 || sgn(im) != 0) return Scalar::rational(re, im);
  }
}

}  // namespace

ParamPoint sample_generic(std::uint64_t seed, int m, int max_numerator, SampleOptions options) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("m must be in [1, 16]");
  if (max_numerator < 1) throw std::invalid_argument("max_numerator must be >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    Scalar alpha = draw_scalar(rng, max_numerator);
    Scalar beta = draw_scalar(rng, max_numerator);
    std::vector<Scalar> gamma;
    for (int k = 0; k < m; ++k) gamma.push_back(draw_scalar(rng, max_numerator));
    ParamPoint p(std::move(alpha), std::move(beta), std::move(gamma));
    if (check_genericity(p).empty()) return p;
  }
  throw std::runtime_error("sample_generic: no generic point found within the retry budget (m=" +
                           std::to_string(m) + ", max_numerator=" +
                           std::to_string(max_numerator) + ")");
}

Scalar exp_2pi_i(const Scalar& z, mpfr_prec_t precision) {
  if (precision < 53) throw std::invalid_argument("precision must be >= 53 bits");
  FloatComplex out(precision);
  MpReal cos_part(precision), sin_part(precision), modulus(precision);

  if (z.is_exact()) {
    const ExactComplex& e = z.exact();
    // Reduce the real part modulo 1 exactly.
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), e.re.get_num().get_mpz_t(), e.re.get_den().get_mpz_t());
    mpq_class frac = e.re - mpq_class(fl);
    mpq_class quarters = frac * 4;
    if (quarters.get_den() == 1) {
      static constexpr long kCos[4] = {1, 0, -1, 0};
      static constexpr long kSin[4] = {0, 1, 0, -1};
      const long q = quarters.get_num().get_si();
      mpfr_set_si(cos_part.get(), kCos[q], MPFR_RNDN);
      mpfr_set_si(sin_part.get(), kSin[q], MPFR_RNDN);
    } else {
      MpReal angle(frac, precision + 16);
      mpfr_mul(angle.get(), angle.get(), MpReal::pi(precision + 16).get(), MPFR_RNDN);
      mpfr_mul_ui(angle.get(), angle.get(), 2, MPFR_RNDN);
      mpfr_sin_cos(sin_part.get(), cos_part.get(), angle.get(), MPFR_RNDN);
    }
    if (sgn(e.im) == 0) {
      mpfr_set_ui(modulus.get(), 1, MPFR_RNDN);
    } else {
      MpReal y(e.im, precision + 16);
      mpfr_mul(y.get(), y.get(), MpReal::pi(precision + 16).get(), MPFR_RNDN);
      mpfr_mul_si(y.get(), y.get(), -2, MPFR_RNDN);
      mpfr_exp(modulus.get(), y.get(), MPFR_RNDN);
    }
  } else {
    const FloatComplex f = z.to_float(precision + 16);
    MpReal angle = f.re;
    mpfr_mul(angle.get(), angle.get(), MpReal::pi(precision + 16).get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2, MPFR_RNDN);
    mpfr_sin_cos(sin_part.get(), cos_part.get(), angle.get(), MPFR_RNDN);
    MpReal y = f.im;
    mpfr_mul(y.get(), y.get(), MpReal::pi(precision + 16).get(), MPFR_RNDN);
    mpfr_mul_si(y.get(), y.get(), -2, MPFR_RNDN);
    mpfr_exp(modulus.get(), y.get(), MPFR_RNDN);
  }
  mpfr_mul(out.re.get(), modulus.get(), cos_part.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), modulus.get(), sin_part.get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

ParamPoint param_exponentials(const SeriesParams& sp, mpfr_prec_t precision) {
  std::vector<Scalar> gamma;
  gamma.reserve(sp.c.size());
  for (const Scalar& c : sp.c) gamma.push_back(exp_2pi_i(c, precision));
  return ParamPoint(exp_2pi_i(sp.a, precision), exp_2pi_i(sp.b, precision), std::move(gamma));
}

}  // namespace lauricella
