#include "rrcf/continued_fraction.hpp"

#include <array>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

bool is_zero_value(const mpq_class& x) { return x == 0; }
bool is_zero_value(const BigReal& x) { return x.is_zero(); }
bool is_zero_value(const BigComplex& x) { return x.is_zero(); }

BigReal mag2(const BigReal& x) { return x * x; }
BigReal mag2(const BigComplex& z) { return norm(z); }

long exponent_of(const BigReal& x) { return x.is_zero() ? LONG_MIN : x.exponent2(); }
long exponent_of(const BigComplex& z) { return std::max(exponent_of(z.real()), exponent_of(z.imag())); }

BigComplex as_complex(const BigReal& x) { return BigComplex(x); }
const BigComplex& as_complex(const BigComplex& z) { return z; }

mpq_class unit_like(const mpq_class&) { return 1; }
BigReal unit_like(const BigReal& x) { return BigReal(1, x.prec()); }
BigComplex unit_like(const BigComplex& z) { return BigComplex(1, z.prec()); }

// Last kWindow convergents; slots for skipped (B_k = 0) convergents are empty.
template <class T>
class ConvergentHistory {
 public:
  static constexpr std::int64_t kSize = 64;

  void put(std::int64_t k, std::optional<T> f) { slots_[slot(k)] = std::move(f); }
  const std::optional<T>& at(std::int64_t k) const { return slots_[slot(k)]; }

 private:
  static std::size_t slot(std::int64_t k) { return static_cast<std::size_t>(((k % kSize) + kSize) % kSize); }
  std::array<std::optional<T>, kSize> slots_;
};

template <class T>
bool settled(const ConvergentHistory<T>& h, std::int64_t k, const BigReal& tol2) {
  const auto& f = h.at(k);
  const auto& f1 = h.at(k - 1);
  const auto& f2 = h.at(k - 2);
  if (!f || !f1 || !f2) return false;
  const BigReal size = mag2(*f);
  if (size < tol2) return false;
  const BigReal bound = size < 1 ? tol2 * size : tol2;
  return mag2(*f - *f1) < bound && mag2(*f - *f2) < bound;
}

// Beyond 1/tol a convergent's B_k is rounding noise; treat it as infinite.
template <class T>
bool at_infinity(const std::optional<T>& f, const BigReal& tol2) {
  return !f || mag2(*f) * tol2 > 1;
}

template <class T>
bool cycles_with_period(const ConvergentHistory<T>& h, std::int64_t k, int p, const BigReal& tol2,
                        const BigReal& gap2) {
  const std::int64_t window = 5 * p;
  for (std::int64_t i = k; i > k - window; --i) {
    const auto& f = h.at(i);
    const auto& back = h.at(i - p);
    const auto& prev = h.at(i - 1);
    // Exact cycles pass through the convergent at infinity.
    const bool inf = at_infinity(f, tol2);
    if (inf != at_infinity(back, tol2)) return false;
    if (inf) {
      if (at_infinity(prev, tol2)) return false;
      continue;
    }
    const BigReal size = mag2(*f);
    const BigReal bound = size > 1 ? tol2 * size : tol2;
    if (!(mag2(*f - *back) < bound)) return false;
    if (!at_infinity(prev, tol2) && mag2(*f - *prev) < gap2) return false;
  }
  return true;
}

constexpr std::int64_t kMinCycleIterations = 200;
constexpr std::int64_t kCycleIterationsPerPeriod = 50;
constexpr int kMaxCyclePeriod = 5;

template <class T>
CFResult eval_infinite_impl(const CFSpec<T>& spec, const PrecisionContext& ctx) {
  const long rescale = ctx.bits();
  const BigReal tol = ctx.tol();
  const BigReal tol2 = tol * tol;
  // A slowly converging alternating fraction also closes period 2 to tol;
  // a genuine cycle keeps its points at least sqrt(tol) apart.
  const BigReal gap2 = tol;

  T a_prev = unit_like(spec.b0);
  T a_cur = spec.b0;
  T b_prev = a_prev - a_prev;
  T b_cur = a_prev;

  ConvergentHistory<T> history;
  history.put(0, spec.b0);
  CFResult result;
  std::optional<T> last;
  std::int64_t k = 1;
  for (; k <= ctx.max_iter(); ++k) {
    const Term<T> t = spec.terms(k);
    T a_next = t.b * a_cur + t.a * a_prev;
    T b_next = t.b * b_cur + t.a * b_prev;
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);

    const long e = std::max(exponent_of(a_cur), exponent_of(b_cur));
    if (e > rescale || (e != LONG_MIN && e < -rescale)) {
      const long shift = e > 0 ? -rescale : rescale;
      a_prev = ldexp(a_prev, shift);
      a_cur = ldexp(a_cur, shift);
      b_prev = ldexp(b_prev, shift);
      b_cur = ldexp(b_cur, shift);
    }

    if (is_zero_value(b_cur)) {
      history.put(k, std::nullopt);
      continue;
    }
    T f = a_cur / b_cur;
    last = f;
    history.put(k, std::move(f));

    if (settled(history, k, tol2)) {
      result.status = CFStatus::Converged;
      break;
    }
    for (int p = 2; p <= kMaxCyclePeriod; ++p) {
      if (k < std::max(kMinCycleIterations, kCycleIterationsPerPeriod * p)) continue;
      if (cycles_with_period(history, k, p, tol2, gap2)) {
        result.status = CFStatus::LimitCycle;
        result.period = p;
        break;
      }
    }
    if (result.status == CFStatus::LimitCycle) break;
  }
  result.iterations = std::min(k, ctx.max_iter());
  BigComplex value = last ? as_complex(*last) : as_complex(spec.b0);
  if (spec.prefactor) value = spec.prefactor->value() * value;
  result.value = std::move(value);
  return result;
}

long positive_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

BigComplex Prefactor::value() const {
  if (den != 1 && den != 5) throw DomainError("prefactor exponent denominator must be 1 or 5");
  const BigComplex r = den == 1 ? base : root(base, den, mode);
  return pow(r, num);
}

const char* to_string(CFStatus status) {
  switch (status) {
    case CFStatus::Converged:
      return "converged";
    case CFStatus::MaxIterations:
      return "max-iterations";
    case CFStatus::LimitCycle:
      return "limit-cycle";
  }
  return "unknown";
}

template <class T>
T eval_finite(const CFSpec<T>& spec, std::int64_t n) {
  if (n < 0) throw DomainError("continued fraction depth must be nonnegative");
  if (n == 0) return spec.b0;
  Term<T> t = spec.terms(n);
  T tail = t.b;
  for (std::int64_t k = n; k >= 1; --k) {
    if (is_zero_value(tail)) {
      throw EvaluationError("zero denominator at depth " + std::to_string(k), k);
    }
    const T a = t.a;
    const T b = k == 1 ? spec.b0 : (t = spec.terms(k - 1)).b;
    tail = b + a / tail;
  }
  return tail;
}

template <class T>
std::vector<Convergent<T>> convergents(const CFSpec<T>& spec, std::int64_t n) {
  std::vector<Convergent<T>> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  const T one = unit_like(spec.b0);
  T a_prev = one, b_prev = one - one;
  out.push_back({spec.b0, one});
  for (std::int64_t k = 1; k <= n; ++k) {
    const Term<T> t = spec.terms(k);
    const Convergent<T>& cur = out.back();
    Convergent<T> next{t.b * cur.A + t.a * a_prev, t.b * cur.B + t.a * b_prev};
    a_prev = cur.A;
    b_prev = cur.B;
    out.push_back(std::move(next));
  }
  return out;
}

template mpq_class eval_finite(const CFSpec<mpq_class>&, std::int64_t);
template BigReal eval_finite(const CFSpec<BigReal>&, std::int64_t);
template BigComplex eval_finite(const CFSpec<BigComplex>&, std::int64_t);
template std::vector<Convergent<mpq_class>> convergents(const CFSpec<mpq_class>&, std::int64_t);
template std::vector<Convergent<BigReal>> convergents(const CFSpec<BigReal>&, std::int64_t);
template std::vector<Convergent<BigComplex>> convergents(const CFSpec<BigComplex>&, std::int64_t);

CFResult eval_infinite(const CFSpec<BigReal>& spec, const PrecisionContext& ctx) {
  return eval_infinite_impl(spec, ctx);
}

CFResult eval_infinite(const CFSpec<BigComplex>& spec, const PrecisionContext& ctx) {
  return eval_infinite_impl(spec, ctx);
}

CFSpec<mpq_class> golden_spec() {
  return {mpq_class(1), [](std::int64_t) { return Term<mpq_class>{1, 1}; }, std::nullopt};
}

CFSpec<BigReal> cf2_spec(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  return {BigReal(0, prec),
          [prec](std::int64_t k) {
            return Term<BigReal>{BigReal(k == 1 ? 1 : static_cast<long>(k - 1), prec), BigReal(1, prec)};
          },
          std::nullopt};
}

CFSpec<BigComplex> rr_bare_spec(const BigComplex& x, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  return {BigComplex(0, prec),
          [x, prec](std::int64_t k) {
            return Term<BigComplex>{k == 1 ? BigComplex(1, prec) : pow(x, static_cast<long>(k - 1)),
                                    BigComplex(1, prec)};
          },
          std::nullopt};
}

CFSpec<BigReal> rr_bare_spec(const BigReal& x, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  return {BigReal(0, prec),
          [x, prec](std::int64_t k) {
            return Term<BigReal>{k == 1 ? BigReal(1, prec) : pow(x, static_cast<long>(k - 1)), BigReal(1, prec)};
          },
          std::nullopt};
}

namespace {

void check_rr_argument(const BigComplex& q) {
  if (q.is_zero()) throw DomainError("R(q) needs q != 0");
  if (norm(q) > 1) throw DomainError("R(q) diverges for |q| > 1");
}

}  // namespace

CFSpec<BigComplex> rr_spec(const BigComplex& q, RootMode mode, const PrecisionContext& ctx) {
  check_rr_argument(q);
  CFSpec<BigComplex> spec = rr_bare_spec(q, ctx);
  spec.prefactor = Prefactor{q, 1, 5, mode};
  return spec;
}

CFResult rr_cf(const BigComplex& q, RootMode mode, const PrecisionContext& ctx) {
  check_rr_argument(q);
  if (q.is_real()) {
    CFSpec<BigReal> spec = rr_bare_spec(q.real(), ctx);
    spec.prefactor = Prefactor{q, 1, 5, mode};
    return eval_infinite(spec, ctx);
  }
  return eval_infinite(rr_spec(q, mode, ctx), ctx);
}

BigReal rr_real(const BigReal& q, const PrecisionContext& ctx) {
  const RootMode mode = q.sign() < 0 ? RootMode::RealOdd : RootMode::Principal;
  const CFResult r = rr_cf(BigComplex(q), mode, ctx);
  if (!r.converged()) {
    throw DivergenceError("R(q) did not converge (" + std::string(to_string(r.status)) + " after " +
                          std::to_string(r.iterations) + " iterations)");
  }
  return r.value.real();
}

BigComplex unit_root_power(long n, long m, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("root of unity order must be positive");
  m = positive_mod(m, n);
  const mpfr_prec_t prec = ctx.bits();
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0:
        return BigComplex(1, prec);
      case 1:
        return BigComplex(BigReal(0, prec), BigReal(1, prec));
      case 2:
        return BigComplex(-1, prec);
      default:
        return BigComplex(BigReal(0, prec), BigReal(-1, prec));
    }
  }
  return expi(pi(ctx) * (2 * m) / n);
}

CFSpec<BigComplex> rr_root_of_unity_spec(long n, long j, RootMode mode, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("root of unity order must be positive");
  std::vector<BigComplex> table;
  table.reserve(static_cast<std::size_t>(n));
  for (long m = 0; m < n; ++m) table.push_back(unit_root_power(n, j * m, ctx));
  const mpfr_prec_t prec = ctx.bits();
  CFSpec<BigComplex> spec{BigComplex(0, prec),
                          [table = std::move(table), n, prec](std::int64_t k) {
                            const auto idx = static_cast<std::size_t>((k - 1) % n);
                            return Term<BigComplex>{k == 1 ? BigComplex(1, prec) : table[idx],
                                                    BigComplex(1, prec)};
                          },
                          std::nullopt};
  spec.prefactor = Prefactor{unit_root_power(n, j, ctx), 1, 5, mode};
  return spec;
}

int legendre5(long n) {
  switch (positive_mod(n, 5)) {
    case 1:
    case 4:
      return 1;
    case 2:
    case 3:
      return -1;
    default:
      return 0;
  }
}

SchurClassification schur_classify(long n) {
  if (n < 1) throw DomainError("schur_classify needs n >= 1");
  SchurClassification c;
  c.n = n;
  if (n % 5 == 0) {
    c.diverges = true;
    return c;
  }
  c.lambda = legendre5(n);
  c.rho = static_cast<int>(n % 5);
  const long witness = c.lambda * c.rho * n - 1;
  if (witness % 5 != 0) throw std::logic_error("lambda * rho * n - 1 not divisible by 5");
  c.exponent = witness / 5;
  return c;
}

namespace {

void check_primitive(long n, long j) {
  if (std::gcd(positive_mod(j, n), n) != 1) {
    throw DomainError("index " + std::to_string(j) + " does not give a primitive " + std::to_string(n) +
                      "th root of unity");
  }
}

}  // namespace

BigComplex schur_cf_value(long n, long j, const PrecisionContext& ctx) {
  const SchurClassification c = schur_classify(n);
  if (c.diverges) throw DivergenceError("R(q) diverges at primitive roots of unity of order divisible by 5");
  check_primitive(n, j);
  const BigReal& phi = golden_phi(ctx);
  const BigReal k_lambda = c.lambda == 1 ? phi - 1 : phi;
  return unit_root_power(n, j * c.exponent, ctx) * (k_lambda * c.lambda);
}

BigComplex rr_at_root_of_unity(long n, long j, RootMode mode, const PrecisionContext& ctx) {
  const BigComplex bare = schur_cf_value(n, j, ctx);
  return root(unit_root_power(n, j, ctx), 5, mode) * bare;
}

}  // namespace rrcf
