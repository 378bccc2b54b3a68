#include "rrcf/numerics.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

// ---------------------------------------------------------------------------
// PrecisionContext

PrecisionContext::PrecisionContext(int bits, int guard_bits, std::int64_t max_iter)
    : bits_(bits), guard_bits_(guard_bits), max_iter_(max_iter) {
  if (guard_bits <= 0 || bits <= guard_bits) {
    throw DomainError("precision context needs 0 < guard_bits < bits");
  }
  if (max_iter <= 0) throw DomainError("precision context needs a positive iteration cap");
}

BigReal PrecisionContext::tol() const { return BigReal::pow2(-tol_bits(), bits_); }

int PrecisionContext::decimal_digits() const noexcept {
  return static_cast<int>(std::floor(tol_bits() * std::log10(2.0)));
}

PrecisionContext PrecisionContext::doubled() const {
  PrecisionContext c(2 * bits_, guard_bits_, max_iter_);
  c.tol_digits_ = tol_digits_;
  return c;
}

PrecisionContext PrecisionContext::with_max_iter(std::int64_t max_iter) const {
  PrecisionContext c(bits_, guard_bits_, max_iter);
  c.tol_digits_ = tol_digits_;
  return c;
}

PrecisionContext PrecisionContext::with_tol_digits(int digits) const {
  if (digits <= 0) throw DomainError("tolerance digits must be positive");
  PrecisionContext c = *this;
  c.tol_digits_ = digits;
  return c;
}

// ---------------------------------------------------------------------------
// BigReal

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, kRnd);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), kRnd);
}

BigReal BigReal::parse(std::string_view text, mpfr_prec_t prec) {
  std::string s(text);
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("not a ratio of integers: " + s);
    }
    q.canonicalize();
    return BigReal(q, prec);
  }
  BigReal r(prec);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == nullptr || *end != '\0') {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
  BigReal r(1, prec);
  mpfr_mul_2si(r.v_, r.v_, e, kRnd);
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, kRnd);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_neg(r.v_, x.v_, kRnd);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, kRnd);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define RRCF_UNARY(name, fn)                \
  BigReal name(const BigReal& x) {          \
    BigReal r(x.prec());                    \
    fn(r.get(), x.get(), kRnd);             \
    return r;                               \
  }

RRCF_UNARY(abs, mpfr_abs)
RRCF_UNARY(sqrt, mpfr_sqrt)
RRCF_UNARY(exp, mpfr_exp)
RRCF_UNARY(log, mpfr_log)
RRCF_UNARY(log2, mpfr_log2)
RRCF_UNARY(sin, mpfr_sin)
RRCF_UNARY(cos, mpfr_cos)

#undef RRCF_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.prec());
  mpfr_pow_si(r.get(), base.get(), exponent, kRnd);
  return r;
}

BigReal pow_int(const BigReal& x, long n) { return pow(x, n); }

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

std::string to_string(const BigReal& x, int digits) {
  if (x.is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNg", digits, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex::BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.prec()) {}
BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
BigComplex::BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) { return *this = *this + rhs; }
BigComplex& BigComplex::operator-=(const BigComplex& rhs) { return *this = *this - rhs; }
BigComplex& BigComplex::operator*=(const BigComplex& rhs) { return *this = *this * rhs; }
BigComplex& BigComplex::operator/=(const BigComplex& rhs) { return *this = *this / rhs; }

BigComplex operator-(const BigComplex& z) { return BigComplex(-z.re_, -z.im_); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  // Real operands stay exactly real, with one rounding per component.
  if (b.is_real()) return a * b.re_;
  if (a.is_real()) return b * a.re_;
  return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_real()) return a / b.re_;
  const BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
  return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

BigComplex operator*(const BigComplex& a, const BigReal& b) {
  if (a.is_real()) return BigComplex(a.re_ * b, BigReal(wider(a.re_, b)));
  return BigComplex(a.re_ * b, a.im_ * b);
}

BigComplex operator/(const BigComplex& a, const BigReal& b) {
  if (a.is_real()) return BigComplex(a.re_ / b, BigReal(wider(a.re_, b)));
  return BigComplex(a.re_ / b, a.im_ / b);
}

BigComplex operator+(const BigComplex& a, long b) { return BigComplex(a.re_ + b, a.im_); }
BigComplex operator-(const BigComplex& a, long b) { return BigComplex(a.re_ - b, a.im_); }
BigComplex operator-(long a, const BigComplex& b) { return BigComplex(a - b.re_, -b.im_); }
BigComplex operator*(const BigComplex& a, long b) { return BigComplex(a.re_ * b, a.im_ * b); }
BigComplex operator/(const BigComplex& a, long b) { return BigComplex(a.re_ / b, a.im_ / b); }

BigComplex operator/(long a, const BigComplex& b) {
  return BigComplex(BigReal(a, b.prec())) / b;
}

BigReal norm(const BigComplex& z) {
  if (z.is_real()) return z.real() * z.real();
  return z.real() * z.real() + z.imag() * z.imag();
}

BigReal abs(const BigComplex& z) {
  if (z.is_real()) return abs(z.real());
  BigReal r(z.prec());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), kRnd);
  return r;
}

BigReal arg(const BigComplex& z) {
  if (z.is_real()) {
    if (z.real().sign() >= 0) return BigReal(z.prec());
    BigReal r(z.prec());
    mpfr_const_pi(r.get(), kRnd);
    return r;
  }
  return atan2(z.imag(), z.real());
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.real(), -z.imag()); }

BigComplex ldexp(const BigComplex& z, long e) {
  return BigComplex(ldexp(z.real(), e), ldexp(z.imag(), e));
}

BigComplex expi(const BigReal& theta) {
  BigReal s(theta.prec()), c(theta.prec());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex exp(const BigComplex& z) {
  if (z.is_real()) return BigComplex(exp(z.real()));
  return expi(z.imag()) * exp(z.real());
}

BigComplex sqrt(const BigComplex& z) { return root(z, 2, RootMode::Principal); }

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return 1 / pow(z, -n);
  BigComplex result(1, z.prec());
  BigComplex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string to_string(const BigComplex& z, int digits) {
  if (z.is_real()) return to_string(z.real(), digits);
  std::string im = to_string(z.imag(), digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return to_string(z.real(), digits) + im + "i";
}

// ---------------------------------------------------------------------------
// Roots

BigReal root(const BigReal& x, long k, RootMode mode) {
  if (k < 1) throw DomainError("root index must be positive");
  if (mode == RootMode::RealOdd && k % 2 == 0) {
    throw DomainError("RealOdd root requires an odd index");
  }
  if (mode == RootMode::Principal && x.sign() < 0 && k > 1) {
    throw DomainError("principal root of a negative number is not real");
  }
  BigReal r(x.prec());
  mpfr_rootn_ui(r.get(), x.get(), static_cast<unsigned long>(k), kRnd);
  return r;
}

BigComplex root(const BigComplex& z, long k, RootMode mode) {
  if (k < 1) throw DomainError("root index must be positive");
  if (mode == RootMode::RealOdd) {
    if (!z.is_real()) throw DomainError("RealOdd root requires a real radicand");
    return BigComplex(root(z.real(), k, RootMode::RealOdd));
  }
  if (k == 1 || z.is_zero()) return z;
  if (z.is_real() && z.real().sign() > 0) {
    return BigComplex(root(z.real(), k, RootMode::Principal));
  }
  const BigReal modulus = root(abs(z), k, RootMode::Principal);
  return expi(arg(z) / k) * modulus;
}

// ---------------------------------------------------------------------------
// Constants

namespace {

struct ConstantSet {
  explicit ConstantSet(mpfr_prec_t prec) : pi(prec), e(prec), sqrt5(5, prec), phi(prec) {
    mpfr_const_pi(pi.get(), kRnd);
    BigReal one(1, prec);
    mpfr_exp(e.get(), one.get(), kRnd);
    mpfr_sqrt(sqrt5.get(), sqrt5.get(), kRnd);
    phi = (sqrt5 + 1) / 2;
  }
  BigReal pi;
  BigReal e;
  BigReal sqrt5;
  BigReal phi;
};

const ConstantSet& constants(const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const ConstantSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ctx.bits()];
  if (!slot) slot = std::make_unique<const ConstantSet>(ctx.bits());
  return *slot;
}

}  // namespace

const BigReal& pi(const PrecisionContext& ctx) { return constants(ctx).pi; }
const BigReal& euler_e(const PrecisionContext& ctx) { return constants(ctx).e; }
const BigReal& sqrt5(const PrecisionContext& ctx) { return constants(ctx).sqrt5; }
const BigReal& golden_phi(const PrecisionContext& ctx) { return constants(ctx).phi; }

// ---------------------------------------------------------------------------
// Agreement

namespace {

int agreement_from(const BigReal& diff, const BigReal& scale, const PrecisionContext& ctx) {
  if (diff.is_zero()) return ctx.bits();
  if (!diff.is_finite() || !scale.is_finite()) return 0;
  const BigReal ratio = diff / scale;
  BigReal neg_log = -log2(ratio);
  mpfr_floor(neg_log.get(), neg_log.get());
  const long bits = mpfr_get_si(neg_log.get(), kRnd);
  return static_cast<int>(std::clamp<long>(bits, 0, ctx.bits()));
}

}  // namespace

int verification_digits(const PrecisionContext& ctx) {
  if (ctx.tol_digits() > 0) return ctx.tol_digits();
  return static_cast<int>(std::floor(0.9 * ctx.tol_bits() * std::log10(2.0)));
}

BigReal verification_tol(const PrecisionContext& ctx) {
  return pow(BigReal(10, ctx.bits()), BigReal(-verification_digits(ctx), ctx.bits()));
}

int agree_bits(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(wider(x, y), ctx.bits());
  BigReal diff(prec);
  mpfr_sub(diff.get(), x.get(), y.get(), kRnd);
  diff = abs(diff);
  const BigReal scale = max(max(abs(x), abs(y)), BigReal(1, prec));
  return agreement_from(diff, scale, ctx);
}

int agree_bits(const BigComplex& x, const BigComplex& y, const PrecisionContext& ctx) {
  const BigReal diff = abs(x - y);
  const BigReal scale = max(max(abs(x), abs(y)), BigReal(1, std::max<mpfr_prec_t>(x.prec(), ctx.bits())));
  return agreement_from(diff, scale, ctx);
}

}  // namespace rrcf
