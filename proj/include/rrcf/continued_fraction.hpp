#pragma once

// Generalized continued fractions b0 + a1/(b1 + a2/(b2 + ...)), finite and
// infinite, plus Schur's classification of R(q) at roots of unity.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rrcf/numerics.hpp"

namespace rrcf {

template <class T>
struct Term {
  T a;
  T b;
};

/// Multiplicative factor base^(num/den) applied to an infinite CF value.
struct Prefactor {
  BigComplex base;
  long num = 1;
  long den = 1;  // 1 or 5
  RootMode mode = RootMode::Principal;

  BigComplex value() const;
};

/// b0 + K_{k>=1}(a_k / b_k). `terms` is called with k >= 1 and must be pure.
template <class T>
struct CFSpec {
  T b0;
  std::function<Term<T>(std::int64_t)> terms;
  std::optional<Prefactor> prefactor;
};

enum class CFStatus { Converged, MaxIterations, LimitCycle };

struct CFResult {
  BigComplex value;
  std::int64_t iterations = 0;
  CFStatus status = CFStatus::MaxIterations;
  /// Cycle length when status == LimitCycle, else 0.
  int period = 0;

  bool converged() const noexcept { return status == CFStatus::Converged; }
};

const char* to_string(CFStatus status);

/// Backward evaluation of b0 + a1/(b1 + ... + a_n/b_n); the prefactor is not applied.
/// A zero denominator at depth k throws EvaluationError with depth() == k.
template <class T>
T eval_finite(const CFSpec<T>& spec, std::int64_t n);

/// Forward convergent pairs (A_k, B_k) for k = 0..n, unscaled.
template <class T>
struct Convergent {
  T A;
  T B;
};
template <class T>
std::vector<Convergent<T>> convergents(const CFSpec<T>& spec, std::int64_t n);

/// Forward recurrence A_k = b_k A_{k-1} + a_k A_{k-2} (same for B) with joint
/// rescaling. Stops when the two previous convergents both lie within
/// tol * min(1, |f_k|) of f_k, which also requires |f_k| >= tol; reports a
/// LimitCycle when convergents repeat with period 2..5 over a full window
/// while neighbouring convergents stay at least sqrt(tol) apart. The
/// prefactor multiplies the final value.
CFResult eval_infinite(const CFSpec<BigReal>& spec, const PrecisionContext& ctx);
CFResult eval_infinite(const CFSpec<BigComplex>& spec, const PrecisionContext& ctx);

/// 1 + 1/(1 + 1/(1 + ...)) = phi.
CFSpec<mpq_class> golden_spec();
/// 1/(1 + 1/(1 + 2/(1 + 3/(1 + ...)))): a_1 = 1, a_k = k - 1, b_k = 1, b0 = 0.
CFSpec<BigReal> cf2_spec(const PrecisionContext& ctx);
/// 1/(1 + x/(1 + x^2/(1 + ...))) without the fifth-root factor.
CFSpec<BigComplex> rr_bare_spec(const BigComplex& x, const PrecisionContext& ctx);
CFSpec<BigReal> rr_bare_spec(const BigReal& x, const PrecisionContext& ctx);
/// R(q) = q^(1/5) * rr_bare(q), root branch per `mode`.
CFSpec<BigComplex> rr_spec(const BigComplex& q, RootMode mode, const PrecisionContext& ctx);

/// R(q) for 0 < |q| <= 1. Real q uses real arithmetic internally.
CFResult rr_cf(const BigComplex& q, RootMode mode, const PrecisionContext& ctx);

/// Real R(q) for q in [-1, 1], q != 0, RealOdd fifth root for negative q.
/// Throws DivergenceError when the CF does not converge within max_iter.
BigReal rr_real(const BigReal& q, const PrecisionContext& ctx);

// Roots of unity. q = e^{2 pi i j / n}.

/// e^{2 pi i m / n} with exact values at multiples of a quarter turn.
BigComplex unit_root_power(long n, long m, const PrecisionContext& ctx);
/// R spec at q = e^{2 pi i j / n}; q-powers come from an exact exponent table mod n.
CFSpec<BigComplex> rr_root_of_unity_spec(long n, long j, RootMode mode, const PrecisionContext& ctx);

/// (n / 5)
int legendre5(long n);

struct SchurClassification {
  long n = 0;
  bool diverges = false;
  int lambda = 0;
  int rho = 0;
  long exponent = 0;
};

SchurClassification schur_classify(long n);

/// lambda * q^e * K(lambda) where K is the bare fraction, K(1) = 1/phi and
/// K(-1) = phi. This is the limit of the bare fraction at q.
BigComplex schur_cf_value(long n, long j, const PrecisionContext& ctx);

/// q^(1/5) * schur_cf_value(n, j), the fifth root taken per `mode`.
/// Throws DivergenceError when 5 | n and DomainError when gcd(j, n) != 1.
BigComplex rr_at_root_of_unity(long n, long j, RootMode mode, const PrecisionContext& ctx);

extern template mpq_class eval_finite(const CFSpec<mpq_class>&, std::int64_t);
extern template BigReal eval_finite(const CFSpec<BigReal>&, std::int64_t);
extern template BigComplex eval_finite(const CFSpec<BigComplex>&, std::int64_t);
extern template std::vector<Convergent<mpq_class>> convergents(const CFSpec<mpq_class>&, std::int64_t);
extern template std::vector<Convergent<BigReal>> convergents(const CFSpec<BigReal>&, std::int64_t);
extern template std::vector<Convergent<BigComplex>> convergents(const CFSpec<BigComplex>&, std::int64_t);

}  // namespace rrcf
