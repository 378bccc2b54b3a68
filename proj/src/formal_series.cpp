#include "rrcf/formal_series.hpp"

#include <algorithm>
#include <span>
#include <type_traits>

#include "rrcf/errors.hpp"
#include "rrcf/kernels.hpp"

namespace rrcf {

namespace {

// Below this many output coefficients the OpenMP dispatch costs more than it saves.
constexpr std::size_t kParallelConvolutionThreshold = 64;

template <class C>
std::string coeff_to_string(const C& c) {
  return c.get_str(10);
}

template <class C>
C coeff_from_string(const std::string& s) {
  C c;
  if (c.set_str(s, 10) != 0) throw ConfigError("bad series coefficient: " + s);
  if constexpr (std::is_same_v<C, mpq_class>) c.canonicalize();
  return c;
}

}  // namespace

template <class C>
FormalSeries<C>::FormalSeries(int lowest, std::vector<C> coeffs, int order)
    : lowest_(lowest), coeffs_(std::move(coeffs)), order_(order) {
  normalize();
}

template <class C>
FormalSeries<C> FormalSeries<C>::zero(int order) {
  return FormalSeries(order, {}, order);
}

template <class C>
FormalSeries<C> FormalSeries<C>::one(int order) {
  return FormalSeries(0, {C(1)}, order);
}

template <class C>
FormalSeries<C> FormalSeries<C>::monomial(int exponent, C coeff, int order) {
  return FormalSeries(exponent, {std::move(coeff)}, order);
}

template <class C>
void FormalSeries<C>::normalize() {
  const long keep = static_cast<long>(order_) - lowest_;
  if (keep <= 0) {
    coeffs_.clear();
  } else if (static_cast<long>(coeffs_.size()) > keep) {
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const C& c) { return c != 0; });
  lowest_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) lowest_ = order_;
}

template <class C>
C FormalSeries<C>::coeff(int exponent) const {
  if (exponent >= order_) {
    throw DomainError("coefficient of t^" + std::to_string(exponent) +
                      " is beyond the truncation order " + std::to_string(order_));
  }
  const long idx = static_cast<long>(exponent) - lowest_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return C(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

template <class C>
std::vector<C> FormalSeries<C>::dense(int from) const {
  std::vector<C> out;
  for (int e = from; e < order_; ++e) out.push_back(coeff(e));
  return out;
}

template <class C>
FormalSeries<C> FormalSeries<C>::truncated(int order) const {
  return FormalSeries(lowest_, coeffs_, std::min(order, order_));
}

template <class C>
FormalSeries<C> FormalSeries<C>::shifted(int k) const {
  return FormalSeries(lowest_ + k, coeffs_, order_ + k);
}

template <class C>
FormalSeries<C> FormalSeries<C>::substituted(int m) const {
  if (m < 1) throw DomainError("substitution t -> t^m needs m >= 1");
  if (is_zero()) return zero(order_ * m);
  std::vector<C> out(static_cast<std::size_t>((coeffs_.size() - 1) * m + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(m)] = coeffs_[i];
  return FormalSeries(lowest_ * m, std::move(out), order_ * m);
}

template <class C>
FormalSeries<C> FormalSeries<C>::operator-() const {
  std::vector<C> out = coeffs_;
  for (auto& c : out) c = -c;
  return FormalSeries(lowest_, std::move(out), order_);
}

template <class C>
FormalSeries<C> FormalSeries<C>::add(const FormalSeries& b, bool subtract) const {
  const int order = std::min(order_, b.order_);
  const int lowest = std::min(valuation(), b.valuation());
  if (lowest >= order) return zero(order);
  std::vector<C> out(static_cast<std::size_t>(order - lowest));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = lowest_ + static_cast<long>(i);
    if (e < order) out[static_cast<std::size_t>(e - lowest)] += coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    const long e = b.lowest_ + static_cast<long>(i);
    if (e >= order) continue;
    if (subtract) {
      out[static_cast<std::size_t>(e - lowest)] -= b.coeffs_[i];
    } else {
      out[static_cast<std::size_t>(e - lowest)] += b.coeffs_[i];
    }
  }
  return FormalSeries(lowest, std::move(out), order);
}

template <class C>
FormalSeries<C> FormalSeries<C>::multiply(const FormalSeries& b) const {
  const int order = std::min(order_ + b.valuation(), b.order_ + valuation());
  if (is_zero() || b.is_zero()) return zero(order);
  const int lowest = lowest_ + b.lowest_;
  if (lowest >= order) return zero(order);
  const auto n = static_cast<std::size_t>(order - lowest);
  std::span<const C> x(coeffs_), y(b.coeffs_);
  std::vector<C> out = n >= kParallelConvolutionThreshold ? kernels::parallel::convolve(x, y, n)
                                                          : kernels::serial::convolve(x, y, n);
  return FormalSeries(lowest, std::move(out), order);
}

template <class C>
FormalSeries<C> FormalSeries<C>::scaled(const C& s) const {
  std::vector<C> out = coeffs_;
  for (auto& c : out) c *= s;
  return FormalSeries(lowest_, std::move(out), order_);
}

template <class C>
FormalSeries<C> FormalSeries<C>::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of a series that vanishes to its order");
  const C& lead = coeffs_.front();
  if constexpr (std::is_same_v<C, mpz_class>) {
    if (lead != 1 && lead != -1) {
      throw DomainError("integer series reciprocal needs leading coefficient +-1");
    }
  }
  const int v = lowest_;
  const int n = order_ - v;  // known terms of the unit part, hence of its inverse
  std::vector<C> inv(static_cast<std::size_t>(std::max(n, 0)));
  if (!inv.empty()) {
    const C lead_inv = C(1) / lead;
    inv[0] = lead_inv;
    for (std::size_t i = 1; i < inv.size(); ++i) {
      C acc = 0;
      const std::size_t hi = std::min(i, coeffs_.size() - 1);
      for (std::size_t j = 1; j <= hi; ++j) acc += coeffs_[j] * inv[i - j];
      inv[i] = -acc * lead_inv;
    }
  }
  return FormalSeries(-v, std::move(inv), order_ - 2 * v);
}

template <class C>
FormalSeries<C> FormalSeries<C>::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  if (n == 0) return one(order_ - valuation());
  FormalSeries result = *this;
  for (int i = 1; i < n; ++i) result = result * *this;
  return result;
}

template <class C>
std::optional<int> FormalSeries<C>::first_mismatch(const FormalSeries& other) const {
  const int order = std::min(order_, other.order_);
  const int from = std::min(valuation(), other.valuation());
  for (int e = from; e < order; ++e) {
    if (coeff(e) != other.coeff(e)) return e;
  }
  return std::nullopt;
}

template <class C>
nlohmann::json FormalSeries<C>::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const C& c : dense(valuation())) coeffs.push_back(coeff_to_string(c));
  return {{"lowest_exponent", valuation()}, {"coeffs", coeffs}, {"order", order_}};
}

template <class C>
FormalSeries<C> FormalSeries<C>::from_json(const nlohmann::json& j) {
  std::vector<C> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_string<C>(c.get<std::string>()));
  return FormalSeries(j.at("lowest_exponent").get<int>(), std::move(coeffs), j.at("order").get<int>());
}

template class FormalSeries<mpz_class>;
template class FormalSeries<mpq_class>;

}  // namespace rrcf
