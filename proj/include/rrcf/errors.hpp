#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rrcf {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite evaluation hit a zero denominator.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::int64_t depth)
      : std::runtime_error(what), depth_(depth) {}
  std::int64_t depth() const noexcept { return depth_; }

 private:
  std::int64_t depth_;
};

/// The requested limit provably does not exist (e.g. R at a root of unity of order 5m).
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rrcf
