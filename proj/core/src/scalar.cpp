#include "lauricella/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <vector>

#include "lauricella/errors.hpp"

namespace lauricella {

// ---------------------------------------------------------------- MpReal

MpReal::MpReal(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

MpReal::MpReal(const mpq_class& q, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

MpReal::MpReal(long v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(value_); }

std::string MpReal::to_string() const {
  if (mpfr_zero_p(value_)) return "0";
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  mpfr_exp_t exp10 = 0;
  // Digits that round-trip the binary precision.
  const size_t digits = mpfr_get_str_ndigits(10, precision());
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

MpReal MpReal::pi(mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------- FloatComplex

namespace {

mpfr_prec_t max_prec(const FloatComplex& a, const FloatComplex& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

MpReal FloatComplex::abs() const {
  MpReal r(precision());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

bool operator==(const FloatComplex& a, const FloatComplex& b) {
  return mpfr_equal_p(a.re.get(), b.re.get()) && mpfr_equal_p(a.im.get(), b.im.get());
}

FloatComplex operator+(const FloatComplex& a, const FloatComplex& b) {
  FloatComplex r(max_prec(a, b));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

FloatComplex operator-(const FloatComplex& a, const FloatComplex& b) {
  FloatComplex r(max_prec(a, b));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

FloatComplex operator*(const FloatComplex& a, const FloatComplex& b) {
  const mpfr_prec_t prec = max_prec(a, b);
  FloatComplex r(prec);
  MpReal t(prec);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

FloatComplex operator/(const FloatComplex& a, const FloatComplex& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero (float scalar)");
  const mpfr_prec_t prec = max_prec(a, b);
  // Work with a few guard bits; the denominator |b|^2 may lose accuracy.
  const mpfr_prec_t work = prec + 16;
  MpReal den(work), t(work), u(work);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);

  FloatComplex r(prec);
  mpfr_mul(t.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(u.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), t.get(), den.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(u.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), t.get(), den.get(), MPFR_RNDN);
  return r;
}

FloatComplex operator-(const FloatComplex& a) {
  FloatComplex r(a.precision());
  mpfr_neg(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

FloatComplex exp(const FloatComplex& z) {
  const mpfr_prec_t prec = z.precision();
  MpReal mod(prec), c(prec), s(prec);
  mpfr_exp(mod.get(), z.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  FloatComplex r(prec);
  mpfr_mul(r.re.get(), mod.get(), c.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), mod.get(), s.get(), MPFR_RNDN);
  return r;
}

FloatComplex log(const FloatComplex& z) {
  if (z.is_zero()) throw DivisionByZero("log(0)");
  const mpfr_prec_t prec = z.precision();
  FloatComplex r(prec);
  MpReal a = z.abs();
  mpfr_log(r.re.get(), a.get(), MPFR_RNDN);
  // atan2 returns (-pi, pi] with the sign of a signed zero; normalise -0.
  MpReal im = z.im;
  if (im.is_zero()) mpfr_set_zero(im.get(), 1);
  mpfr_atan2(r.im.get(), im.get(), z.re.get(), MPFR_RNDN);
  return r;
}

FloatComplex pow(const FloatComplex& z, const FloatComplex& w) {
  if (z.is_zero()) {
    if (mpfr_sgn(w.re.get()) > 0) return FloatComplex(max_prec(z, w));
    throw DivisionByZero("0 raised to a power with non-positive real part");
  }
  return exp(w * log(z));
}

FloatComplex pow(const FloatComplex& z, unsigned long n) {
  FloatComplex result(MpReal(1L, z.precision()), MpReal(0L, z.precision()));
  FloatComplex base = z;
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- Scalar

namespace {

[[noreturn]] void mixed() {
  throw MixedArithmeticError("exact and float scalars cannot be combined");
}

ExactComplex exact_mul(const ExactComplex& a, const ExactComplex& b) {
  if (a.is_real() && b.is_real()) return ExactComplex{a.re * b.re};
  return ExactComplex{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ExactComplex exact_inv(const ExactComplex& a) {
  if (a.is_zero()) throw DivisionByZero("division by zero (exact scalar)");
  if (a.is_real()) return ExactComplex{1 / a.re};
  mpq_class den = a.re * a.re + a.im * a.im;
  return ExactComplex{a.re / den, -a.im / den};
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

// Parses an optionally signed real literal: integer, p/q, or decimal with
// optional exponent. Exact.
mpq_class parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw ParseError("empty number");
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    mpq_class q;
    std::string text(s);
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational: " + text);
    q.canonicalize();
    return q;
  }
  std::string text(s);
  bool negative = false;
  size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  long exponent10 = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa.push_back(ch);
      any_digit = true;
      if (seen_dot) --exponent10;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (ch == 'e' || ch == 'E') {
      long e = 0;
      const char* first = text.data() + pos + 1;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec != std::errc() || ptr != last) throw ParseError("bad exponent: " + text);
      exponent10 += e;
      pos = text.size();
      break;
    } else {
      throw ParseError("bad number: " + text);
    }
  }
  if (!any_digit) throw ParseError("bad number: " + text);
  mpq_class q{mpz_class(mantissa, 10)};
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent10 < 0 ? -exponent10 : exponent10));
  if (exponent10 < 0) {
    q /= mpq_class(scale);
  } else {
    q *= mpq_class(scale);
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

// Splits "re+im*i" into signed terms, respecting exponents like 1e-3.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> terms;
  size_t start = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  return terms;
}

}  // namespace

const ExactComplex& Scalar::exact() const {
  if (const auto* z = std::get_if<ExactComplex>(&value_)) return *z;
  throw MixedArithmeticError("scalar is not exact");
}

const FloatComplex& Scalar::approx() const {
  if (const auto* z = std::get_if<FloatComplex>(&value_)) return *z;
  throw MixedArithmeticError("scalar is not a float");
}

mpfr_prec_t Scalar::precision() const {
  if (const auto* z = std::get_if<FloatComplex>(&value_)) return z->precision();
  return 0;
}

FloatComplex Scalar::to_float(mpfr_prec_t prec) const {
  if (const auto* z = std::get_if<ExactComplex>(&value_)) return FloatComplex(*z, prec);
  const auto& f = std::get<FloatComplex>(value_);
  FloatComplex r(prec);
  mpfr_set(r.re.get(), f.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), f.im.get(), MPFR_RNDN);
  return r;
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& z) { return z.is_zero(); }, value_);
}

bool Scalar::is_one() const { return *this == constant_like(1); }

Scalar Scalar::inverse() const {
  if (const auto* z = std::get_if<ExactComplex>(&value_)) return Scalar(exact_inv(*z));
  const auto& f = std::get<FloatComplex>(value_);
  FloatComplex one(MpReal(1L, f.precision()), MpReal(0L, f.precision()));
  return Scalar(one / f);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar result = constant_like(1);
  while (n != 0) {
    if (n & 1UL) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

Scalar Scalar::constant_like(long v) const {
  if (is_exact()) return Scalar(v);
  const mpfr_prec_t prec = precision();
  return Scalar(FloatComplex(MpReal(v, prec), MpReal(0L, prec)));
}

std::string Scalar::to_string() const {
  if (const auto* z = std::get_if<ExactComplex>(&value_)) {
    if (z->is_real()) return rational_string(z->re);
    std::string im = rational_string(abs(z->im)) + "*i";
    if (sgn(z->re) == 0) return (sgn(z->im) < 0 ? "-" : "") + im;
    return rational_string(z->re) + (sgn(z->im) < 0 ? "-" : "+") + im;
  }
  const auto& f = std::get<FloatComplex>(value_);
  std::string re = f.re.to_string();
  std::string im = f.im.to_string();
  std::string out = re;
  if (!im.empty() && im.front() == '-') {
    out += im + "*i";
  } else {
    out += "+" + im + "*i";
  }
  return out + "@" + std::to_string(f.precision());
}

Scalar Scalar::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw ParseError("empty scalar");
  std::string_view body = cleaned;
  mpfr_prec_t prec = 0;
  if (const auto at = body.find('@'); at != std::string_view::npos) {
    long p = 0;
    auto tail = body.substr(at + 1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || p < MPFR_PREC_MIN) {
      throw ParseError("bad precision annotation: " + cleaned);
    }
    prec = p;
    body = body.substr(0, at);
  }

  mpq_class re = 0, im = 0;
  auto terms = split_terms(body);
  if (terms.size() > 2) throw ParseError("too many terms: " + cleaned);
  bool saw_re = false, saw_im = false;
  for (auto term : terms) {
    if (term.empty()) throw ParseError("bad scalar: " + cleaned);
    if (term.back() == 'i') {
      if (saw_im) throw ParseError("two imaginary terms: " + cleaned);
      saw_im = true;
      auto coeff = term.substr(0, term.size() - 1);
      if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
      if (coeff.empty() || coeff == "+") {
        im = 1;
      } else if (coeff == "-") {
        im = -1;
      } else {
        im = parse_real(coeff);
      }
    } else {
      if (saw_re) throw ParseError("two real terms: " + cleaned);
      saw_re = true;
      re = parse_real(term);
    }
  }
  ExactComplex z{re, im};
  if (prec == 0) return Scalar(std::move(z));
  // Float strings carry full decimal expansions; parse via MPFR to round once.
  FloatComplex f(prec);
  mpfr_set_q(f.re.get(), z.re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(f.im.get(), z.im.get_mpq_t(), MPFR_RNDN);
  return Scalar(std::move(f));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() != o.is_exact()) mixed();
  if (auto* z = std::get_if<ExactComplex>(&value_)) {
    const auto& w = std::get<ExactComplex>(o.value_);
    z->re += w.re;
    z->im += w.im;
  } else {
    value_ = std::get<FloatComplex>(value_) + std::get<FloatComplex>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() != o.is_exact()) mixed();
  if (auto* z = std::get_if<ExactComplex>(&value_)) {
    const auto& w = std::get<ExactComplex>(o.value_);
    z->re -= w.re;
    z->im -= w.im;
  } else {
    value_ = std::get<FloatComplex>(value_) - std::get<FloatComplex>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() != o.is_exact()) mixed();
  if (auto* z = std::get_if<ExactComplex>(&value_)) {
    *z = exact_mul(*z, std::get<ExactComplex>(o.value_));
  } else {
    value_ = std::get<FloatComplex>(value_) * std::get<FloatComplex>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() != o.is_exact()) mixed();
  if (auto* z = std::get_if<ExactComplex>(&value_)) {
    *z = exact_mul(*z, exact_inv(std::get<ExactComplex>(o.value_)));
  } else {
    value_ = std::get<FloatComplex>(value_) / std::get<FloatComplex>(o.value_);
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (const auto* z = std::get_if<ExactComplex>(&a.value_)) {
    return Scalar(ExactComplex{-z->re, -z->im});
  }
  return Scalar(-std::get<FloatComplex>(a.value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return std::get<ExactComplex>(a.value_) == std::get<ExactComplex>(b.value_);
  return std::get<FloatComplex>(a.value_) == std::get<FloatComplex>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool approx_equal(const Scalar& a, const Scalar& b, double log2_tol) {
  const mpfr_prec_t prec =
      std::max<mpfr_prec_t>({a.precision(), b.precision(), kDefaultPrecision});
  FloatComplex fa = a.to_float(prec);
  FloatComplex fb = b.to_float(prec);
  MpReal diff = (fa - fb).abs();
  MpReal scale = fb.abs();
  if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
  MpReal tol(prec);
  mpfr_set_d(tol.get(), log2_tol, MPFR_RNDN);
  mpfr_exp2(tol.get(), tol.get(), MPFR_RNDN);
  mpfr_mul(tol.get(), tol.get(), scale.get(), MPFR_RNDN);
  return mpfr_lessequal_p(diff.get(), tol.get()) != 0;
}

}  // namespace lauricella
