#pragma once

// Exact expression trees for algebraic/transcendental constants, evaluable at
// any precision.
//
// Text form is a prefix call syntax:
//   +(x, y, ...)  *(x, y, ...)  -(x, y)  -(x)  /(x, y)
//   root(k, x)    k-th root, principal branch
//   rroot(k, x)   real k-th root, k odd
//   pow(x, p/q)   x^(p/q); x > 0 unless q = 1
//   exp(x)
//   integer literals, phi, pi, e

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rrcf/numerics.hpp"

namespace rrcf {

class ClosedForm {
 public:
  enum class Kind { Integer, Phi, Pi, E, Add, Mul, Sub, Neg, Div, Root, Pow, Exp };

  ClosedForm(long value);
  static ClosedForm integer(const mpz_class& value);
  static ClosedForm phi();
  static ClosedForm pi();
  static ClosedForm e();
  static ClosedForm root(long k, const ClosedForm& x, RootMode mode = RootMode::Principal);
  static ClosedForm sqrt(const ClosedForm& x) { return root(2, x); }
  static ClosedForm pow(const ClosedForm& x, const mpq_class& exponent);
  static ClosedForm exp(const ClosedForm& x);

  static ClosedForm parse(std::string_view text);
  std::string to_string() const;

  BigReal evaluate(const PrecisionContext& ctx) const;

  Kind kind() const;

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a);

  /// Structural equality.
  friend bool operator==(const ClosedForm& a, const ClosedForm& b);

 private:
  struct Node;
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ClosedForm make(Node node);
  BigReal eval_at(const PrecisionContext& work) const;

  std::shared_ptr<const Node> node_;
};

}  // namespace rrcf
