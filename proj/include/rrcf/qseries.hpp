#pragma once

// q-Pochhammer symbols, the Rogers-Ramanujan functions G and H, R as a
// product quotient, S, chi, the theta function phi, the finite forms mu/nu,
// and exact integer series expansions of the same objects.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "rrcf/formal_series.hpp"
#include "rrcf/numerics.hpp"

namespace rrcf {

/// A nome that can be regenerated at any precision: an exact rational, or
/// e^{-pi s sqrt(r)} with s, r positive rationals.
class QPoint {
 public:
  static QPoint rational(const mpq_class& q);
  /// "0.05", "-0.3", "3/5"; stored exactly.
  static QPoint decimal(std::string_view text);
  /// e^{-pi s sqrt(radicand)}
  static QPoint exp_pi(const mpq_class& s, const mpq_class& radicand = 1);

  BigReal at(const PrecisionContext& ctx) const;
  const std::optional<mpq_class>& exact() const noexcept { return exact_; }
  /// q^m for m >= 1, keeping the symbolic form.
  QPoint power(long m) const;
  std::string label() const;

 private:
  std::optional<mpq_class> exact_;
  mpq_class s_ = 0;
  mpq_class radicand_ = 1;
  std::string text_;
};

enum class Backend { Sum, Product };

/// prod_{k<n} (1 - a q^k); exact for rationals.
mpq_class pochhammer(const mpq_class& a, const mpq_class& q, long n);
template <class T>
T pochhammer(const T& a, const T& q, long n);

/// (a; q)_inf truncated once |a| |q|^N / (1 - |q|) < tol (ctx.tol() unless given).
template <class T>
T pochhammer_inf(const T& a, const T& q, const PrecisionContext& ctx,
                 const std::optional<BigReal>& tol = std::nullopt);

/// sum q^{n^2} / (q;q)_n, or 1 / ((q;q^5)_inf (q^4;q^5)_inf).
template <class T>
T rr_G(const T& q, const PrecisionContext& ctx, Backend backend = Backend::Product);
/// sum q^{n(n+1)} / (q;q)_n, or 1 / ((q^2;q^5)_inf (q^3;q^5)_inf).
template <class T>
T rr_H(const T& q, const PrecisionContext& ctx, Backend backend = Backend::Product);

/// q^{1/5} H(q) / G(q), fifth root per mode.
BigComplex rr_product(const BigComplex& q, RootMode mode, const PrecisionContext& ctx);
/// Real R(q) for 0 < |q| < 1; the fifth root of a negative q is the real one.
BigReal rr_product(const BigReal& q, const PrecisionContext& ctx);

/// S(q) = q^{1/5} / (1 - q/(1 + q^2/(1 - q^3/(1 + ...)))) for 0 < q <= 1.
/// Throws DivergenceError if the fraction does not converge.
BigReal S(const BigReal& q, const PrecisionContext& ctx);

/// (-q; q^2)_inf
template <class T>
T chi(const T& q, const PrecisionContext& ctx);

/// 1 + 2 sum_{n>=1} q^{n^2}
template <class T>
T theta_phi(const T& q, const PrecisionContext& ctx);

/// sum_{k <= (n+1)/2} a^k q^{k^2} (q;q)_{n-k+1} / ((q;q)_k (q;q)_{n-2k+1})
mpq_class finite_mu(long n, const mpq_class& a, const mpq_class& q);
/// sum_{k <= n/2} a^k q^{k(k+1)} (q;q)_{n-k} / ((q;q)_k (q;q)_{n-2k})
mpq_class finite_nu(long n, const mpq_class& a, const mpq_class& q);

// Exact expansions. Orders are truncation exponents: every coefficient below
// `order` is exact.

/// G(q) to order N from the sum side or the product side.
IntegerSeries series_G(int order, Backend backend = Backend::Sum);
IntegerSeries series_H(int order, Backend backend = Backend::Sum);
/// R in t = q^{1/5}: t H(t^5) / G(t^5), lowest term t.
IntegerSeries series_R(int order);
/// phi(q) = 1 + 2 sum q^{n^2}
IntegerSeries series_theta(int order);
/// (x^m; x^m)_inf in the variable x, to order N.
IntegerSeries series_euler(int order, int m = 1);

extern template BigReal pochhammer(const BigReal&, const BigReal&, long);
extern template BigComplex pochhammer(const BigComplex&, const BigComplex&, long);
extern template BigReal pochhammer_inf(const BigReal&, const BigReal&, const PrecisionContext&,
                                       const std::optional<BigReal>&);
extern template BigComplex pochhammer_inf(const BigComplex&, const BigComplex&, const PrecisionContext&,
                                          const std::optional<BigReal>&);
extern template BigReal rr_G(const BigReal&, const PrecisionContext&, Backend);
extern template BigComplex rr_G(const BigComplex&, const PrecisionContext&, Backend);
extern template BigReal rr_H(const BigReal&, const PrecisionContext&, Backend);
extern template BigComplex rr_H(const BigComplex&, const PrecisionContext&, Backend);
extern template BigReal chi(const BigReal&, const PrecisionContext&);
extern template BigComplex chi(const BigComplex&, const PrecisionContext&);
extern template BigReal theta_phi(const BigReal&, const PrecisionContext&);
extern template BigComplex theta_phi(const BigComplex&, const PrecisionContext&);

}  // namespace rrcf
