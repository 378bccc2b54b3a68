#pragma once

// Arbitrary-precision real/complex substrate on top of MPFR.
//
// Every value carries its own mantissa precision; binary operations produce a
// result at the larger of the two operand precisions. Functions that create
// values from scratch take a PrecisionContext.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rrcf {

class BigReal;

/// Working precision shared by every numeric operation.
///
/// tol = 2^-(bits - guard_bits). Results are trusted to tol; the guard bits
/// absorb rounding accumulated by long recurrences.
class PrecisionContext {
 public:
  static constexpr int kDefaultBits = 256;
  static constexpr int kDefaultGuardBits = 32;
  static constexpr std::int64_t kDefaultMaxIter = 1'000'000;

  PrecisionContext() = default;
  explicit PrecisionContext(int bits, int guard_bits = kDefaultGuardBits,
                            std::int64_t max_iter = kDefaultMaxIter);

  int bits() const noexcept { return bits_; }
  int guard_bits() const noexcept { return guard_bits_; }
  std::int64_t max_iter() const noexcept { return max_iter_; }

  /// Number of bits the tolerance certifies: tol = 2^-tol_bits().
  int tol_bits() const noexcept { return bits_ - guard_bits_; }
  BigReal tol() const;

  /// Decimal digits worth printing: floor(tol_bits * log10 2).
  int decimal_digits() const noexcept;

  /// Same guard and iteration cap at twice the working precision.
  PrecisionContext doubled() const;
  PrecisionContext with_max_iter(std::int64_t max_iter) const;
  /// Fixes verification_digits() instead of deriving it from the bit count.
  PrecisionContext with_tol_digits(int digits) const;
  /// 0 when verification digits are derived from the bit count.
  int tol_digits() const noexcept { return tol_digits_; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int bits_ = kDefaultBits;
  int guard_bits_ = kDefaultGuardBits;
  std::int64_t max_iter_ = kDefaultMaxIter;
  int tol_digits_ = 0;
};

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 64);
  BigReal(long value, mpfr_prec_t prec);
  BigReal(const mpz_class& value, mpfr_prec_t prec);
  BigReal(const mpq_class& value, mpfr_prec_t prec);

  BigReal(long value, const PrecisionContext& ctx) : BigReal(value, ctx.bits()) {}
  BigReal(const mpq_class& value, const PrecisionContext& ctx) : BigReal(value, ctx.bits()) {}

  /// Parses a decimal ("0.05", "-1e-3") or an exact ratio ("3/5").
  static BigReal parse(std::string_view text, mpfr_prec_t prec);
  /// 2^e, exact.
  static BigReal pow2(long e, mpfr_prec_t prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent2() const noexcept { return mpfr_get_exp(v_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator-(const BigReal& x);
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

/// Decimal rendering with `digits` significant digits (printf %.*g style).
std::string to_string(const BigReal& x, int digits);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 64);
  explicit BigComplex(BigReal re);
  BigComplex(BigReal re, BigReal im);
  BigComplex(long re, mpfr_prec_t prec);

  const BigReal& real() const noexcept { return re_; }
  const BigReal& imag() const noexcept { return im_; }
  mpfr_prec_t prec() const noexcept { return std::max(re_.prec(), im_.prec()); }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  friend BigComplex operator-(const BigComplex& z);
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& b);
  friend BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
  friend BigComplex operator/(const BigComplex& a, const BigReal& b);
  friend BigComplex operator+(const BigComplex& a, long b);
  friend BigComplex operator+(long a, const BigComplex& b) { return b + a; }
  friend BigComplex operator-(const BigComplex& a, long b);
  friend BigComplex operator-(long a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, long b);
  friend BigComplex operator*(long a, const BigComplex& b) { return b * a; }
  friend BigComplex operator/(const BigComplex& a, long b);
  friend BigComplex operator/(long a, const BigComplex& b);

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigReal re_;
  BigReal im_;
};

BigReal abs(const BigComplex& z);
/// |z|^2
BigReal norm(const BigComplex& z);
/// Argument in (-pi, pi]; a signed zero imaginary part is read as +0.
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex ldexp(const BigComplex& z, long e);
/// e^{i theta}
BigComplex expi(const BigReal& theta);
BigComplex exp(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
/// Integer power by repeated squaring; negative exponents invert.
BigComplex pow(const BigComplex& z, long n);
BigReal pow_int(const BigReal& x, long n);

/// "re", or "re+imi" / "re-imi" when the imaginary part is nonzero.
std::string to_string(const BigComplex& z, int digits);

/// Branch policy for k-th roots.
enum class RootMode {
  /// Argument of the root in (-pi/k, pi/k].
  Principal,
  /// Real k-th root of a real number, k odd; (-1)^(1/5) = -1.
  RealOdd,
};

BigComplex root(const BigComplex& z, long k, RootMode mode);
/// Real-valued root. Principal mode rejects negative radicands (the root is not real).
BigReal root(const BigReal& x, long k, RootMode mode = RootMode::Principal);

// Constants at context precision, memoized per precision.
const BigReal& pi(const PrecisionContext& ctx);
const BigReal& euler_e(const PrecisionContext& ctx);
const BigReal& sqrt5(const PrecisionContext& ctx);
/// (sqrt 5 + 1) / 2
const BigReal& golden_phi(const PrecisionContext& ctx);

/// Decimal digits a verified identity or special value must reproduce:
/// floor(0.9 * tol_bits * log10 2), which is 60 at the default 256 bits,
/// unless the context fixes it.
int verification_digits(const PrecisionContext& ctx);
/// 10^-verification_digits(ctx)
BigReal verification_tol(const PrecisionContext& ctx);

/// floor(-log2(|x - y| / max(|x|, |y|, 1))) clamped to [0, ctx.bits()].
int agree_bits(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);
int agree_bits(const BigComplex& x, const BigComplex& y, const PrecisionContext& ctx);

}  // namespace rrcf
