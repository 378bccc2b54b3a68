#include "rrcf/special_values.hpp"

#include <fstream>

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"

namespace rrcf {

// ---------------------------------------------------------------------------
// c-parametrization

BigReal c_param(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  if (a == b) throw DomainError("c-parametrization needs a != b");
  return (1 + (a + b) / (a - b) * sqrt5(ctx)) / 2;
}

BigReal value_from_c(const BigReal& c) { return sqrt(c * c + 1) - c; }

ClosedForm c_param_form(const ClosedForm& a, const ClosedForm& b) {
  return (1 + (a + b) / (a - b) * ClosedForm::sqrt(5)) / 2;
}

ClosedForm value_from_c_form(const ClosedForm& c) { return ClosedForm::sqrt(c * c + 1) - c; }

// ---------------------------------------------------------------------------
// Class invariants

BigReal class_invariant_direct(const mpq_class& n, const PrecisionContext& ctx) {
  if (n <= 0) throw DomainError("class invariant needs n > 0");
  const BigReal q = QPoint::exp_pi(1, n).at(ctx);
  const BigReal log_q_over_24 = -pi(ctx) * sqrt(BigReal(n, ctx)) / 24;
  return exp(-log_q_over_24) * chi(q, ctx) / root(BigReal(2, ctx), 4);
}

InvariantTable InvariantTable::seeded() {
  InvariantTable t;
  t.table_.emplace(mpq_class(1), ClosedForm(1));
  t.table_.emplace(mpq_class(25), ClosedForm::phi());
  return t;
}

void InvariantTable::insert(const mpq_class& n, const ClosedForm& g, const PrecisionContext& ctx) {
  const std::string label = "G_" + n.get_str() + " = " + g.to_string();
  if (n <= 0) throw ConfigError(label + ": n must be a positive rational");
  BigReal closed(ctx.bits()), direct(ctx.bits());
  try {
    closed = g.evaluate(ctx);
    direct = class_invariant_direct(n, ctx);
  } catch (const std::exception& e) {
    throw ConfigError(label + ": cannot be evaluated (" + e.what() + ")");
  }
  const int digits = ctx.decimal_digits();
  if (!(abs(closed - direct) < verification_tol(ctx) * max(abs(direct), BigReal(1, ctx)))) {
    throw ConfigError(label + " fails the class-invariant check G_n = 2^(-1/4) q^(-1/24) chi(q) at q = e^(-pi sqrt(n)): closed form " +
                      to_string(closed, digits) + ", direct " + to_string(direct, digits));
  }
  if (closed < 1) throw ConfigError(label + ": class invariants satisfy G_n >= 1");
  table_.insert_or_assign(n, g);
}

void InvariantTable::load_json(const nlohmann::json& entries, const PrecisionContext& ctx) {
  if (!entries.is_array()) throw ConfigError("invariants file must hold a JSON list");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where = "invariants entry " + std::to_string(i);
    if (!e.is_object() || !e.contains("n") || !e.contains("closed_form") || !e["n"].is_string() ||
        !e["closed_form"].is_string()) {
      throw ConfigError(where + ": expected {\"n\": \"p/q\", \"closed_form\": \"...\"}");
    }
    mpq_class n;
    if (n.set_str(e["n"].get<std::string>(), 10) != 0 || n.get_den() == 0) {
      throw ConfigError(where + ": bad rational n \"" + e["n"].get<std::string>() + "\"");
    }
    n.canonicalize();
    ClosedForm g(0);
    try {
      g = ClosedForm::parse(e["closed_form"].get<std::string>());
    } catch (const std::exception& ex) {
      throw ConfigError(where + ": " + ex.what());
    }
    insert(n, g, ctx);
  }
}

void InvariantTable::load_file(const std::filesystem::path& path, const PrecisionContext& ctx) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open invariants file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invariants file " + path.string() + " is not valid JSON: " + e.what());
  }
  load_json(j, ctx);
}

const ClosedForm& InvariantTable::G(const mpq_class& n) const {
  const auto it = table_.find(n);
  if (it == table_.end()) {
    throw LookupError("no class invariant G_" + n.get_str() +
                      " is tabulated; supply it in an invariants file (--invariants FILE)");
  }
  return it->second;
}

std::vector<mpq_class> InvariantTable::keys() const {
  std::vector<mpq_class> out;
  for (const auto& [n, g] : table_) out.push_back(n);
  return out;
}

BigReal theta_quotient(const mpq_class& n, const InvariantTable& table, const PrecisionContext& ctx) {
  const BigReal gn = table.G(n).evaluate(ctx);
  const BigReal g25n = table.G(25 * n).evaluate(ctx);
  return sqrt(1 + 2 * g25n / pow(gn, 5L)) / sqrt5(ctx);
}

BigReal theta_ratio_direct(const mpq_class& n, const PrecisionContext& ctx) {
  const QPoint q = QPoint::exp_pi(1, n);
  return theta_phi(q.power(5).at(ctx), ctx) / theta_phi(q.at(ctx), ctx);
}

// ---------------------------------------------------------------------------
// Quintic parameter

BigReal p_value(const BigReal& q, const PrecisionContext& ctx) {
  if (q.is_zero() || !(abs(q) < 1)) throw DomainError("p(q) needs 0 < |q| < 1");
  return 4 * q * chi(q, ctx) / pow(chi(pow(q, 5L), ctx), 5L);
}

const char* to_string(QuinticConstant c) { return c == QuinticConstant::PSquared ? "p^2" : "p^3"; }

namespace {

BigReal quadratic_sum(const BigReal& p) { return (p - 1) * (p - 1) + 7; }

void require_p_range(const BigReal& p) {
  if (!(p > 0) || !(p < 4)) throw DomainError("quintic parameter needs 0 < p < 4");
}

BigReal denominator_plus(const BigReal& p) { return sqrt(p + 1) + 1; }

}  // namespace

std::pair<BigReal, BigReal> quintic_roots(const BigReal& p, QuinticConstant constant) {
  const BigReal s = quadratic_sum(p);
  const BigReal c = constant == QuinticConstant::PSquared ? p * p : p * p * p;
  const BigReal disc = s * s - 4 * c;
  if (disc.sign() < 0) throw DomainError("quintic quadratic has complex roots");
  const BigReal r = sqrt(disc);
  return {(s + r) / 2, (s - r) / 2};
}

QuinticUV quintic_uv(const BigReal& p) {
  require_p_range(p);
  const BigReal s = quadratic_sum(p);
  const BigReal w = (4 - p) * sqrt(4 + p * p);
  return {root(p / 2 * (s + w), 5, RootMode::RealOdd), root(p / 2 * (s - w), 5, RootMode::RealOdd)};
}

QuinticUV quintic_uv_from_roots(const BigReal& p, QuinticConstant constant) {
  const auto [alpha, beta] = quintic_roots(p, constant);
  return {root(alpha * p, 5, RootMode::RealOdd), root(beta * p, 5, RootMode::RealOdd)};
}

BigReal R_from_p(const BigReal& p) { return quintic_uv(p).u / denominator_plus(p); }

BigReal R4_from_p(const BigReal& p) { return quintic_uv(p).v / denominator_plus(p); }

std::pair<BigReal, BigReal> quintic_corollary(const BigReal& p) {
  const QuinticUV uv = quintic_uv(p);
  return {2 / uv.u, 2 / uv.v};
}

QuinticResolution resolve_quintic(const BigReal& q, const PrecisionContext& ctx) {
  const BigReal p = p_value(q, ctx);
  QuinticResolution res{q, p, rr_real(q, ctx), rr_real(pow(q, 4L), ctx), {}, 0};
  const BigReal d = denominator_plus(p);
  for (QuinticConstant c : {QuinticConstant::PSquared, QuinticConstant::PCubed}) {
    for (bool swapped : {false, true}) {
      QuinticUV uv = quintic_uv_from_roots(p, c);
      if (swapped) std::swap(uv.u, uv.v);
      BigReal r = uv.u / d;
      BigReal r4 = uv.v / d;
      BigReal dev = max(abs(r - res.R_direct), abs(r4 - res.R4_direct));
      res.candidates.push_back({c, swapped, uv.u, uv.v, std::move(r), std::move(r4), std::move(dev)});
    }
  }
  for (std::size_t i = 1; i < res.candidates.size(); ++i) {
    if (res.candidates[i].deviation < res.candidates[res.chosen].deviation) res.chosen = i;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Registry

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::RValue:
      return "R";
    case ValueKind::SValue:
      return "S";
    case ValueKind::BareFraction:
      return "bare-fraction";
    case ValueKind::ThetaQuotient:
      return "theta-quotient";
  }
  return "?";
}

namespace {

std::vector<SpecialValueEntry> build_registry() {
  using CF = ClosedForm;
  const CF phi = CF::phi();
  const CF s5 = CF::sqrt(5);
  std::vector<SpecialValueEntry> out;

  out.push_back({"eq2", QPoint::exp_pi(2), CF::root(4, 5) * CF::sqrt(phi) - phi, ValueKind::RValue,
                 "Ramanujan, first letter to Hardy (16 January 1913)"});
  out.push_back({"eq3", QPoint::exp_pi(1), CF::root(4, 5) / CF::sqrt(phi) - 1 / phi, ValueKind::SValue,
                 "Ramanujan, first letter to Hardy (16 January 1913)"});

  const CF inner = CF::pow(5, mpq_class(3, 4)) * CF::pow((s5 - 1) / 2, mpq_class(5, 2)) - 1;
  out.push_back({"eq5", QPoint::exp_pi(2, 5),
                 CF::exp(2 * CF::pi() / s5) * (s5 / (1 + CF::root(5, inner)) - (s5 + 1) / 2),
                 ValueKind::BareFraction, "Ramanujan, second letter to Hardy (27 February 1913), case n = 20"});

  out.push_back({"eq7", QPoint::exp_pi(4), value_from_c_form(c_param_form(CF::root(4, 5), 1)), ValueKind::RValue,
                 "Ramanujan, first notebook p. 311: c-parametrization with a = 5^(1/4), b = 1"});
  out.push_back({"eq8", QPoint::exp_pi(6),
                 value_from_c_form(c_param_form(CF::root(4, 60), 2 - CF::sqrt(3) + s5)), ValueKind::RValue,
                 "Ramanujan, first notebook p. 311: c-parametrization with a = 60^(1/4), b = 2 - sqrt(3) + sqrt(5)"});

  out.push_back({"golden1-R", QPoint::rational(1), (s5 - 1) / 2, ValueKind::RValue,
                 "all partial numerators equal to 1: R(1) = 1/phi"});
  out.push_back({"golden1-S", QPoint::rational(1), (s5 + 1) / 2, ValueKind::SValue,
                 "alternating all-ones fraction: S(1) = phi"});

  out.push_back({"r-e4pi-explicit", QPoint::exp_pi(4),
                 phi * (CF::sqrt(5 * s5 - 10) - 1) / (1 + CF::sqrt(5 - 2 * s5)), ValueKind::RValue,
                 "quintic-parameter theorem at q = e^(-pi) with G_1 = 1, G_25 = phi"});

  out.push_back({"chan-s-pi-sqrt3", QPoint::exp_pi(1, 3), (-3 - s5 + CF::sqrt(6 * (5 + s5))) / 4,
                 ValueKind::SValue, "H. H. Chan, via modular equations"});
  out.push_back({"chan-berndt-s", QPoint::exp_pi(1, mpq_class(3, 5)),
                 CF::root(5, (-5 * s5 - 3 + CF::sqrt(30 * (5 + s5))) / 4), ValueKind::SValue,
                 "B. C. Berndt and H. H. Chan; argument e^(-pi sqrt(3/5)), the reciprocal of the printed sqrt(5/3)"});

  out.push_back({"theta-quotient-1", QPoint::exp_pi(1), 1 / CF::sqrt(5 * s5 - 10), ValueKind::ThetaQuotient,
                 "phi(e^(-5 pi)) / phi(e^(-pi)) from G_1 = 1, G_25 = phi"});
  return out;
}

}  // namespace

const std::vector<SpecialValueEntry>& registry() {
  static const std::vector<SpecialValueEntry> entries = build_registry();
  return entries;
}

const SpecialValueEntry& registry_entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw LookupError("no special value named '" + name + "'");
}

BigReal direct_value(const SpecialValueEntry& entry, const PrecisionContext& ctx) {
  const BigReal q = entry.q.at(ctx);
  switch (entry.kind) {
    case ValueKind::RValue:
      return rr_real(q, ctx);
    case ValueKind::SValue:
      return S(q, ctx);
    case ValueKind::BareFraction: {
      const CFResult r = eval_infinite(rr_bare_spec(q, ctx), ctx);
      if (!r.converged()) throw DivergenceError(entry.name + ": continued fraction did not converge");
      return r.value.real();
    }
    case ValueKind::ThetaQuotient:
      return theta_phi(entry.q.power(5).at(ctx), ctx) / theta_phi(q, ctx);
  }
  throw std::logic_error("unhandled value kind");
}

ValueCheck check_value(const SpecialValueEntry& entry, const PrecisionContext& ctx) {
  ValueCheck c{entry.name, direct_value(entry, ctx), entry.closed_form.evaluate(ctx), BigReal(ctx.bits()), 0, false};
  c.abs_dev = abs(c.direct - c.closed);
  c.agree_bits = agree_bits(c.direct, c.closed, ctx);
  c.pass = c.abs_dev < verification_tol(ctx);
  return c;
}

}  // namespace rrcf
