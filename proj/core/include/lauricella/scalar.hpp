#ifndef LAURICELLA_SCALAR_HPP
#define LAURICELLA_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace lauricella {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

/// Gaussian rational re + im*i with arbitrary-precision components.
struct ExactComplex {
  mpq_class re;
  mpq_class im;

  ExactComplex() = default;
  ExactComplex(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// RAII owner of an mpfr_t. Copies keep the source precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = kDefaultPrecision);
  MpReal(const mpq_class& q, mpfr_prec_t prec);
  MpReal(long v, mpfr_prec_t prec);
  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific decimal with enough digits to round-trip the precision.
  std::string to_string() const;

  static MpReal pi(mpfr_prec_t prec);

 private:
  mpfr_t value_;
};

/// Complex number with MPFR components of a common precision.
struct FloatComplex {
  MpReal re;
  MpReal im;

  explicit FloatComplex(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  FloatComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  FloatComplex(const ExactComplex& z, mpfr_prec_t prec)
      : re(z.re, prec), im(z.im, prec) {}

  mpfr_prec_t precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// |z| as an MpReal of the same precision.
  MpReal abs() const;

  friend bool operator==(const FloatComplex& a, const FloatComplex& b);
};

FloatComplex operator+(const FloatComplex& a, const FloatComplex& b);
FloatComplex operator-(const FloatComplex& a, const FloatComplex& b);
FloatComplex operator*(const FloatComplex& a, const FloatComplex& b);
FloatComplex operator/(const FloatComplex& a, const FloatComplex& b);
FloatComplex operator-(const FloatComplex& a);

FloatComplex exp(const FloatComplex& z);
/// Principal logarithm, arg in (-pi, pi].
FloatComplex log(const FloatComplex& z);
/// Principal power z^w = exp(w log z); 0^w is 0 for Re(w) > 0.
FloatComplex pow(const FloatComplex& z, const FloatComplex& w);
FloatComplex pow(const FloatComplex& z, unsigned long n);

/// Field element: either an exact Gaussian rational or a multiprecision
/// complex float. Arithmetic between the two kinds throws
/// MixedArithmeticError; float operands of different precision produce a
/// result at the larger precision.
class Scalar {
 public:
  Scalar() : value_(ExactComplex{}) {}
  Scalar(long v) : value_(ExactComplex{mpq_class(v)}) {}  // NOLINT: implicit by intent
  Scalar(int v) : Scalar(static_cast<long>(v)) {}          // NOLINT
  explicit Scalar(ExactComplex z) : value_(std::move(z)) {}
  explicit Scalar(FloatComplex z) : value_(std::move(z)) {}

  static Scalar rational(const mpq_class& re, const mpq_class& im = 0) {
    return Scalar(ExactComplex{re, im});
  }
  static Scalar rational(long num, long den) { return rational(mpq_class(num, den)); }

  /// Accepts "p/q+r/s*i", "3", "-i", "0.25-2*i" (decimals are exact), and
  /// float strings with a precision suffix, "1.5e-1+2*i@256".
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<ExactComplex>(value_); }
  const ExactComplex& exact() const;
  const FloatComplex& approx() const;
  /// 0 for exact scalars.
  mpfr_prec_t precision() const;

  /// Float copy at `prec` bits (exact values are rounded).
  FloatComplex to_float(mpfr_prec_t prec) const;

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  /// Integer constant of the same kind (and precision) as *this.
  Scalar constant_like(long v) const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  /// Exact comparison; for floats this is bitwise value equality.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<ExactComplex, FloatComplex> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Relative closeness |a-b| <= tol * max(1, |b|), evaluated at the larger
/// of the operand precisions. Works for any kinds of scalars.
bool approx_equal(const Scalar& a, const Scalar& b, double log2_tol);

}  // namespace lauricella

#endif  // LAURICELLA_SCALAR_HPP
