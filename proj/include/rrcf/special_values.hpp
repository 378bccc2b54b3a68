#pragma once

// Closed-form special values of R and S, the c-parametrization, class
// invariants G_n, theta quotients and the quintic p -> (u, v) machinery.

#include <gmpxx.h>

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rrcf/closed_form.hpp"
#include "rrcf/numerics.hpp"
#include "rrcf/qseries.hpp"

namespace rrcf {

// ---------------------------------------------------------------------------
// c-parametrization: 2c = 1 + ((a + b)/(a - b)) sqrt 5, value sqrt(c^2 + 1) - c

BigReal c_param(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);
BigReal value_from_c(const BigReal& c);
ClosedForm c_param_form(const ClosedForm& a, const ClosedForm& b);
ClosedForm value_from_c_form(const ClosedForm& c);

// ---------------------------------------------------------------------------
// Class invariants G_n = 2^{-1/4} q^{-1/24} chi(q), q = e^{-pi sqrt n}

BigReal class_invariant_direct(const mpq_class& n, const PrecisionContext& ctx);

class InvariantTable {
 public:
  /// G_1 = 1 and G_25 = phi.
  static InvariantTable seeded();

  /// Adds G_n after checking it against class_invariant_direct at ctx.
  /// Throws ConfigError naming the failed check.
  void insert(const mpq_class& n, const ClosedForm& g, const PrecisionContext& ctx);
  /// JSON list of {"n": "p/q", "closed_form": "..."}.
  void load_json(const nlohmann::json& entries, const PrecisionContext& ctx);
  void load_file(const std::filesystem::path& path, const PrecisionContext& ctx);

  bool contains(const mpq_class& n) const { return table_.count(n) != 0; }
  /// Throws LookupError for a missing n.
  const ClosedForm& G(const mpq_class& n) const;
  std::vector<mpq_class> keys() const;

 private:
  std::map<mpq_class, ClosedForm> table_;
};

/// (1/sqrt 5) (1 + 2 G_{25n} / G_n^5)^{1/2}
BigReal theta_quotient(const mpq_class& n, const InvariantTable& table, const PrecisionContext& ctx);
/// phi(e^{-5 pi sqrt n}) / phi(e^{-pi sqrt n}) from the theta series.
BigReal theta_ratio_direct(const mpq_class& n, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Quintic parameter

/// p = 4 q chi(q) / chi(q^5)^5
BigReal p_value(const BigReal& q, const PrecisionContext& ctx);

/// Constant term of x^2 - ((p-1)^2 + 7) x + C.
enum class QuinticConstant { PSquared, PCubed };
const char* to_string(QuinticConstant c);

/// Roots (alpha, beta) of the quadratic, alpha the larger.
std::pair<BigReal, BigReal> quintic_roots(const BigReal& p, QuinticConstant constant);

struct QuinticUV {
  BigReal u;
  BigReal v;
};

/// u, v = {(p/2)((p-1)^2 + 7 +- (4-p)(4+p^2)^{1/2})}^{1/5}, + for u.
QuinticUV quintic_uv(const BigReal& p);
/// u = (alpha p)^{1/5}, v = (beta p)^{1/5}.
QuinticUV quintic_uv_from_roots(const BigReal& p, QuinticConstant constant);

/// u / (sqrt(p+1) + 1)
BigReal R_from_p(const BigReal& p);
/// v / (sqrt(p+1) + 1)
BigReal R4_from_p(const BigReal& p);
/// (2/u, 2/v)
std::pair<BigReal, BigReal> quintic_corollary(const BigReal& p);

/// One candidate reading of the quintic theorem at a sample point, scored
/// against direct evaluation of R(q) and R(q^4).
struct QuinticCandidate {
  QuinticConstant constant;
  bool swapped;  // u and v exchanged
  BigReal u;
  BigReal v;
  BigReal R;   // u/(sqrt(p+1)+1)
  BigReal R4;  // v/(sqrt(p+1)+1)
  BigReal deviation;  // max of |R - R(q)| and |R4 - R(q^4)|
};

struct QuinticResolution {
  BigReal q;
  BigReal p;
  BigReal R_direct;
  BigReal R4_direct;
  std::vector<QuinticCandidate> candidates;
  std::size_t chosen = 0;

  const QuinticCandidate& best() const { return candidates[chosen]; }
};

/// Tries both constant terms and both u/v assignments and picks the candidate
/// that matches the continued fraction.
QuinticResolution resolve_quintic(const BigReal& q, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Registry

enum class ValueKind { RValue, SValue, BareFraction, ThetaQuotient };
const char* to_string(ValueKind k);

struct SpecialValueEntry {
  std::string name;
  /// R/S argument; for ThetaQuotient the nome of the denominator theta.
  QPoint q;
  ClosedForm closed_form;
  ValueKind kind;
  std::string provenance;
};

const std::vector<SpecialValueEntry>& registry();
/// Throws LookupError for unknown names.
const SpecialValueEntry& registry_entry(const std::string& name);

/// Value at q by continued fraction (or theta series for ThetaQuotient).
BigReal direct_value(const SpecialValueEntry& entry, const PrecisionContext& ctx);

struct ValueCheck {
  std::string name;
  BigReal direct;
  BigReal closed;
  BigReal abs_dev;
  int agree_bits = 0;
  bool pass = false;
};

/// Pass iff |direct - closed| < verification_tol(ctx).
ValueCheck check_value(const SpecialValueEntry& entry, const PrecisionContext& ctx);

}  // namespace rrcf
