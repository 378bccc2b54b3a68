#include "rrcf/qseries.hpp"

#include <cctype>
#include <stdexcept>

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

BigReal mag(const BigReal& x) { return abs(x); }
BigReal mag(const BigComplex& z) { return abs(z); }

BigReal unit_like(const BigReal& x) { return BigReal(1, x.prec()); }
BigComplex unit_like(const BigComplex& z) { return BigComplex(1, z.prec()); }

mpq_class qpow(const mpq_class& x, long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

template <class T>
void require_inside_disc(const T& q, const char* what) {
  if (!(mag(q) < 1)) throw DomainError(std::string(what) + " needs |q| < 1");
}

// Stop once |term| < tol * max(1, |sum|) after two consecutive decreases.
class SeriesStop {
 public:
  explicit SeriesStop(const PrecisionContext& ctx) : tol_(ctx.tol()), prev_(ctx.bits()) {}

  bool done(const BigReal& term_size, const BigReal& sum_size) {
    const bool decreasing = have_prev_ && term_size < prev_;
    decreases_ = decreasing ? decreases_ + 1 : 0;
    prev_ = term_size;
    have_prev_ = true;
    const BigReal scale = sum_size > 1 ? sum_size : BigReal(1, sum_size.prec());
    return decreases_ >= 2 && term_size < tol_ * scale;
  }

 private:
  BigReal tol_;
  BigReal prev_;
  bool have_prev_ = false;
  int decreases_ = 0;
};

// sum_{n>=0} q^{n^2 + shift n} / (q;q)_n for shift in {0, 1}.
template <class T>
T rr_sum(const T& q, int shift, const PrecisionContext& ctx) {
  T sum = unit_like(q);
  T term = sum;
  T qn = sum;  // q^n
  SeriesStop stop(ctx);
  for (std::int64_t n = 1; n <= ctx.max_iter(); ++n) {
    T q_prev = qn;
    qn = qn * q;
    // term_n / term_{n-1} = q^{2n-1+shift} / (1 - q^n)
    term = term * (shift == 0 ? q_prev * qn : qn * qn) / (1 - qn);
    sum = sum + term;
    if (stop.done(mag(term), mag(sum))) return sum;
  }
  throw DivergenceError("Rogers-Ramanujan series did not converge within max_iter terms");
}

// 1 / ((q^r1; q^5)_inf (q^r2; q^5)_inf)
template <class T>
T rr_prod(const T& q, long r1, long r2, const PrecisionContext& ctx) {
  const T q5 = pow(q, 5L);
  return 1 / (pochhammer_inf(pow(q, r1), q5, ctx) * pochhammer_inf(pow(q, r2), q5, ctx));
}

// In-place division of a dense series by (1 - x^step).
void divide_by_one_minus(std::vector<mpz_class>& c, std::size_t step) {
  for (std::size_t i = step; i < c.size(); ++i) c[i] += c[i - step];
}

// In-place multiplication of a dense series by (1 - x^step).
void multiply_by_one_minus(std::vector<mpz_class>& c, std::size_t step) {
  for (std::size_t i = c.size(); i-- > step;) c[i] -= c[i - step];
}

IntegerSeries rr_series_sum(int order, int shift) {
  const auto n_coeffs = static_cast<std::size_t>(order);
  std::vector<mpz_class> sum(n_coeffs), inv(n_coeffs);
  inv[0] = 1;  // 1 / (q;q)_n, updated in place
  for (long n = 0;; ++n) {
    const long lead = n * n + shift * n;
    if (lead >= order) break;
    if (n > 0) divide_by_one_minus(inv, static_cast<std::size_t>(n));
    for (std::size_t i = static_cast<std::size_t>(lead); i < n_coeffs; ++i) sum[i] += inv[i - lead];
  }
  return IntegerSeries(0, std::move(sum), order);
}

IntegerSeries rr_series_product(int order, int r1, int r2) {
  std::vector<mpz_class> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (int k = 1; k < order; ++k) {
    if (k % 5 == r1 || k % 5 == r2) divide_by_one_minus(c, static_cast<std::size_t>(k));
  }
  return IntegerSeries(0, std::move(c), order);
}

void require_order(int order) {
  if (order < 1) throw DomainError("series order must be at least 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// QPoint

QPoint QPoint::rational(const mpq_class& q) {
  QPoint p;
  p.exact_ = q;
  p.text_ = q.get_str();
  return p;
}

QPoint QPoint::decimal(std::string_view text) {
  const std::string s(text);
  mpq_class value;
  if (s.find('/') != std::string::npos) {
    if (value.set_str(s, 10) != 0 || value.get_den() == 0) {
      throw DomainError("not a rational number: " + s);
    }
    value.canonicalize();
  } else {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
    mpz_class digits = 0;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
      const char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits = digits * 10 + (ch - '0');
        seen_digit = true;
        if (seen_point) ++frac_digits;
      } else if (ch == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
    }
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t used = 0;
      try {
        exponent = std::stol(s.substr(pos + 1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      pos = used == 0 ? std::string::npos : pos + 1 + used;
    }
    if (!seen_digit || pos != s.size()) throw DomainError("not a decimal number: " + s);
    const long scale = exponent - frac_digits;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    value = scale < 0 ? mpq_class(digits, ten_pow) : mpq_class(digits * ten_pow);
    value.canonicalize();
    if (negative) value = -value;
  }
  QPoint p = rational(value);
  p.text_ = s;
  return p;
}

QPoint QPoint::exp_pi(const mpq_class& s, const mpq_class& radicand) {
  if (s <= 0 || radicand <= 0) throw DomainError("e^{-pi s sqrt(r)} needs s > 0 and r > 0");
  QPoint p;
  p.s_ = s;
  p.radicand_ = radicand;
  return p;
}

BigReal QPoint::at(const PrecisionContext& ctx) const {
  if (exact_) return BigReal(*exact_, ctx);
  BigReal x = pi(ctx) * BigReal(s_, ctx);
  if (radicand_ != 1) x = x * sqrt(BigReal(radicand_, ctx));
  return exp(-x);
}

QPoint QPoint::power(long m) const {
  if (m < 1) throw DomainError("QPoint::power needs m >= 1");
  if (exact_) return rational(qpow(*exact_, m));
  return exp_pi(s_ * m, radicand_);
}

std::string QPoint::label() const {
  if (exact_) return text_;
  std::string out = "exp(-pi*" + s_.get_str();
  if (radicand_ != 1) out += "*sqrt(" + radicand_.get_str() + ")";
  return out + ")";
}

// ---------------------------------------------------------------------------
// Products and series

mpq_class pochhammer(const mpq_class& a, const mpq_class& q, long n) {
  if (n < 0) throw DomainError("pochhammer needs n >= 0");
  mpq_class result = 1, term = a;
  for (long k = 0; k < n; ++k) {
    result *= 1 - term;
    term *= q;
  }
  return result;
}

template <class T>
T pochhammer(const T& a, const T& q, long n) {
  if (n < 0) throw DomainError("pochhammer needs n >= 0");
  T result = unit_like(q);
  T term = a;
  for (long k = 0; k < n; ++k) {
    result = result * (1 - term);
    term = term * q;
  }
  return result;
}

template <class T>
T pochhammer_inf(const T& a, const T& q, const PrecisionContext& ctx, const std::optional<BigReal>& tol) {
  require_inside_disc(q, "(a;q)_inf");
  const BigReal bound = tol ? *tol : ctx.tol();
  const BigReal mq = mag(q);
  BigReal tail = mag(a) / (1 - mq);  // bounds sum_{k>=N} |a q^k|
  T result = unit_like(q);
  T term = a;
  for (std::int64_t k = 0; !(tail < bound); ++k) {
    if (k > ctx.max_iter()) throw DivergenceError("(a;q)_inf did not reach its tail bound within max_iter");
    result = result * (1 - term);
    term = term * q;
    tail = tail * mq;
  }
  return result;
}

template <class T>
T rr_G(const T& q, const PrecisionContext& ctx, Backend backend) {
  require_inside_disc(q, "G(q)");
  return backend == Backend::Sum ? rr_sum(q, 0, ctx) : rr_prod(q, 1, 4, ctx);
}

template <class T>
T rr_H(const T& q, const PrecisionContext& ctx, Backend backend) {
  require_inside_disc(q, "H(q)");
  return backend == Backend::Sum ? rr_sum(q, 1, ctx) : rr_prod(q, 2, 3, ctx);
}

BigComplex rr_product(const BigComplex& q, RootMode mode, const PrecisionContext& ctx) {
  if (q.is_zero()) throw DomainError("R(q) needs q != 0");
  return root(q, 5, mode) * rr_H(q, ctx) / rr_G(q, ctx);
}

BigReal rr_product(const BigReal& q, const PrecisionContext& ctx) {
  if (q.is_zero()) throw DomainError("R(q) needs q != 0");
  const RootMode mode = q.sign() < 0 ? RootMode::RealOdd : RootMode::Principal;
  return root(q, 5, mode) * rr_H(q, ctx) / rr_G(q, ctx);
}

BigReal S(const BigReal& q, const PrecisionContext& ctx) {
  if (!(q > 0) || q > 1) throw DomainError("S(q) needs 0 < q <= 1");
  const CFResult r = eval_infinite(rr_bare_spec(-q, ctx), ctx);
  if (!r.converged()) throw DivergenceError("S(q): continued fraction did not converge");
  return root(q, 5) * r.value.real();
}

template <class T>
T chi(const T& q, const PrecisionContext& ctx) {
  return pochhammer_inf(-q, q * q, ctx);
}

template <class T>
T theta_phi(const T& q, const PrecisionContext& ctx) {
  require_inside_disc(q, "phi(q)");
  const BigReal tol = ctx.tol();
  T sum = unit_like(q);
  T term = sum;           // q^{n^2}
  T step = q;             // q^{2n-1}
  const T q2 = q * q;
  for (std::int64_t n = 1; n <= ctx.max_iter(); ++n) {
    term = term * step;
    step = step * q2;
    if (mag(term) < tol) return sum;
    sum = sum + 2 * term;
  }
  throw DivergenceError("theta series did not converge within max_iter terms");
}

template BigReal pochhammer(const BigReal&, const BigReal&, long);
template BigComplex pochhammer(const BigComplex&, const BigComplex&, long);
template BigReal pochhammer_inf(const BigReal&, const BigReal&, const PrecisionContext&,
                                const std::optional<BigReal>&);
template BigComplex pochhammer_inf(const BigComplex&, const BigComplex&, const PrecisionContext&,
                                   const std::optional<BigReal>&);
template BigReal rr_G(const BigReal&, const PrecisionContext&, Backend);
template BigComplex rr_G(const BigComplex&, const PrecisionContext&, Backend);
template BigReal rr_H(const BigReal&, const PrecisionContext&, Backend);
template BigComplex rr_H(const BigComplex&, const PrecisionContext&, Backend);
template BigReal chi(const BigReal&, const PrecisionContext&);
template BigComplex chi(const BigComplex&, const PrecisionContext&);
template BigReal theta_phi(const BigReal&, const PrecisionContext&);
template BigComplex theta_phi(const BigComplex&, const PrecisionContext&);

// ---------------------------------------------------------------------------
// Finite forms

mpq_class finite_mu(long n, const mpq_class& a, const mpq_class& q) {
  if (n < 0) throw DomainError("finite_mu needs n >= 0");
  if (abs(q) == 1) throw DomainError("finite_mu needs |q| != 1");
  mpq_class sum = 0;
  for (long k = 0; k <= (n + 1) / 2; ++k) {
    sum += qpow(a, k) * qpow(q, k * k) * pochhammer(q, q, n - k + 1) /
           (pochhammer(q, q, k) * pochhammer(q, q, n - 2 * k + 1));
  }
  return sum;
}

mpq_class finite_nu(long n, const mpq_class& a, const mpq_class& q) {
  if (n < 0) throw DomainError("finite_nu needs n >= 0");
  if (abs(q) == 1) throw DomainError("finite_nu needs |q| != 1");
  mpq_class sum = 0;
  for (long k = 0; k <= n / 2; ++k) {
    sum += qpow(a, k) * qpow(q, k * (k + 1)) * pochhammer(q, q, n - k) /
           (pochhammer(q, q, k) * pochhammer(q, q, n - 2 * k));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Exact expansions

IntegerSeries series_G(int order, Backend backend) {
  require_order(order);
  return backend == Backend::Sum ? rr_series_sum(order, 0) : rr_series_product(order, 1, 4);
}

IntegerSeries series_H(int order, Backend backend) {
  require_order(order);
  return backend == Backend::Sum ? rr_series_sum(order, 1) : rr_series_product(order, 2, 3);
}

IntegerSeries series_R(int order) {
  require_order(order);
  const int q_order = order / 5 + 1;  // 5 * q_order + 1 > order
  const IntegerSeries ratio = series_H(q_order) * series_G(q_order).reciprocal();
  return ratio.substituted(5).shifted(1).truncated(order);
}

IntegerSeries series_theta(int order) {
  require_order(order);
  std::vector<mpz_class> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long n = 1; n * n < order; ++n) c[static_cast<std::size_t>(n * n)] = 2;
  return IntegerSeries(0, std::move(c), order);
}

IntegerSeries series_euler(int order, int m) {
  require_order(order);
  if (m < 1) throw DomainError("series_euler needs m >= 1");
  std::vector<mpz_class> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long e = m; e < order; e += m) multiply_by_one_minus(c, static_cast<std::size_t>(e));
  return IntegerSeries(0, std::move(c), order);
}

}  // namespace rrcf
