#pragma once

#include <gmpxx.h>

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

namespace rrcf {

/// Truncated Laurent series sum_{e >= lowest} c_e t^e with exact coefficients.
///
/// Every coefficient with exponent < order() is known; nothing is known at or
/// beyond order(). The representation is canonical (no leading or trailing
/// zero coefficients), so operator== is coefficientwise equality plus equal
/// truncation order.
///
/// C is mpz_class or mpq_class. Integer reciprocals require a leading
/// coefficient of +1 or -1.
template <class C>
class FormalSeries {
 public:
  FormalSeries(int lowest, std::vector<C> coeffs, int order);

  static FormalSeries zero(int order);
  static FormalSeries one(int order);
  static FormalSeries monomial(int exponent, C coeff, int order);

  int order() const noexcept { return order_; }
  /// Exponent of the first nonzero coefficient, or order() for a series that is zero to its order.
  int valuation() const noexcept { return coeffs_.empty() ? order_ : lowest_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of t^exponent. Throws DomainError for exponent >= order().
  C coeff(int exponent) const;
  /// Coefficients of t^from .. t^(order()-1), zeros included.
  std::vector<C> dense(int from) const;

  FormalSeries truncated(int order) const;
  /// Multiply by t^k.
  FormalSeries shifted(int k) const;
  /// Substitute t -> t^m (m >= 1).
  FormalSeries substituted(int m) const;
  FormalSeries reciprocal() const;
  FormalSeries pow(int n) const;

  FormalSeries operator-() const;
  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return a.add(b, false); }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a.add(b, true); }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return a.multiply(b); }
  friend FormalSeries operator*(const FormalSeries& a, const C& s) { return a.scaled(s); }
  friend FormalSeries operator*(const C& s, const FormalSeries& a) { return a.scaled(s); }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.order_ == b.order_ && a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

  /// Smallest exponent below min(order(), other.order()) where the coefficients differ.
  std::optional<int> first_mismatch(const FormalSeries& other) const;

  /// {"lowest_exponent": e, "coeffs": ["c_e", ..., "c_{order-1}"], "order": N}
  nlohmann::json to_json() const;
  static FormalSeries from_json(const nlohmann::json& j);

 private:
  void normalize();
  FormalSeries add(const FormalSeries& b, bool subtract) const;
  FormalSeries multiply(const FormalSeries& b) const;
  FormalSeries scaled(const C& s) const;

  int lowest_;
  std::vector<C> coeffs_;
  int order_;
};

using IntegerSeries = FormalSeries<mpz_class>;
using RationalSeries = FormalSeries<mpq_class>;

extern template class FormalSeries<mpz_class>;
extern template class FormalSeries<mpq_class>;

}  // namespace rrcf
