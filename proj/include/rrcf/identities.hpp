#pragma once

// Registry of identity cases checked numerically at sample points or, where
// the coefficients are exact, as integer series; plus the asymptotic
// approximation to the cf2 fraction and the double-factorial companion identity.

#include <string>
#include <vector>

#include "rrcf/numerics.hpp"

namespace rrcf {

enum class VerifyMode { Numeric, FormalSeries };
const char* to_string(VerifyMode m);

struct IdentityInfo {
  std::string id;
  std::string summary;
  bool numeric = true;
  bool formal = false;
};

const std::vector<IdentityInfo>& identities();
/// Throws LookupError for unknown ids.
const IdentityInfo& identity_info(const std::string& id);

struct VerifyOptions {
  /// Points taken, evenly spaced, along the primary axis of the sample grid.
  int samples = 10;
  VerifyMode mode = VerifyMode::Numeric;
  /// Truncation order for FormalSeries mode.
  int order = 150;
  bool parallel = true;
};

struct VerificationRecord {
  std::string point;
  std::string lhs;
  std::string rhs;
  BigReal abs_dev;
  int agree_bits = 0;
  /// Tolerance this record was held to.
  BigReal tol;
  bool pass = false;
  /// Outside the identity's stated domain; reported but not counted.
  bool excluded = false;
  std::string note;
};

struct VerificationReport {
  std::string id;
  VerifyMode mode = VerifyMode::Numeric;
  PrecisionContext ctx;
  BigReal tol;
  std::vector<VerificationRecord> records;
  BigReal max_deviation;
  bool pass = false;
};

/// Throws LookupError for an unknown id, DomainError when the mode is not
/// available for the id, samples < 1, or no sample point is applicable.
VerificationReport verify(const std::string& id, const PrecisionContext& ctx, const VerifyOptions& options = {});

/// Both sides of the factorization with coefficient c at q:
/// 1/sqrt(t) - c sqrt(t) with t = R(q), and
/// q^(-1/10) sqrt((q;q)/(q^5;q^5)) prod_{n>=1} 1/(1 + c q^(n/5) + q^(2n/5)).
struct FactorizationSides {
  BigReal lhs;
  BigReal rhs;
};
FactorizationSides factorization_sides(const BigReal& q, const BigReal& c, const PrecisionContext& ctx);

struct AsymptoticRecord {
  BigReal x;
  BigReal approx;
  BigReal reference;
  BigReal error;
};

/// x sqrt(e) sum_{n>=1} e^{-(1+nx)^2/2} + x/2 - x^2/12 - ... - x^10/1710720
/// against the cf2 fraction; the polynomial is dropped entirely when
/// with_polynomial is false. Requires 0 < x <= 1/2.
AsymptoticRecord asymptotic_check(const BigReal& x, const PrecisionContext& ctx, bool with_polynomial = true);

struct JimsRecord {
  BigReal series;
  BigReal cf;
  BigReal sum;
  BigReal target;
  BigReal abs_dev;
  bool pass = false;
};

/// sum 1/(1*3*...*(2n+1)) + cf2 against sqrt(pi e / 2).
JimsRecord jims_identity(const PrecisionContext& ctx);

}  // namespace rrcf
