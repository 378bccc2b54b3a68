// rrcf: evaluate the Rogers-Ramanujan continued fraction and related
// functions, check special values and identities, classify roots of unity.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
// 3 numeric non-convergence.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/identities.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/report.hpp"
#include "rrcf/special_values.hpp"

namespace {

using namespace rrcf;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;
constexpr int kNonConvergence = 3;

struct RunConfig {
  int bits = PrecisionContext::kDefaultBits;
  std::optional<int> tol_digits;
  std::int64_t max_iter = PrecisionContext::kDefaultMaxIter;
  std::string format = "text";
  std::string invariants_file;
  int samples = 10;
  int order = 150;

  PrecisionContext context() const {
    PrecisionContext ctx(bits, PrecisionContext::kDefaultGuardBits, max_iter);
    return tol_digits ? ctx.with_tol_digits(*tol_digits) : ctx;
  }
};

struct Argument {
  std::string q;
  std::string exp_arg;

  QPoint point() const {
    if (!q.empty() && !exp_arg.empty()) throw DomainError("give either --q or --exp-arg, not both");
    if (!exp_arg.empty()) {
      mpq_class s;
      if (s.set_str(exp_arg, 10) != 0 || s.get_den() == 0) throw DomainError("bad --exp-arg '" + exp_arg + "'");
      s.canonicalize();
      if (s <= 0) throw DomainError("--exp-arg needs s > 0");
      return QPoint::exp_pi(s);
    }
    if (q.empty()) throw DomainError("an argument is required: --q VALUE or --exp-arg S");
    return QPoint::decimal(q);
  }
};

struct EvalOutcome {
  BigReal value;
  std::optional<CFResult> cf;
};

EvalOutcome evaluate_target(const std::string& target, const std::optional<QPoint>& point, const PrecisionContext& ctx) {
  if (target == "cf2") {
    CFResult r = eval_infinite(cf2_spec(ctx), ctx);
    return {r.value.real(), r};
  }
  const BigReal q = point->at(ctx);
  if (target == "R") {
    if (q.is_zero()) throw DomainError("R(q) needs q != 0");
    if (abs(q) > 1) throw DomainError("R(q) needs |q| <= 1");
    CFResult r = rr_cf(BigComplex(q), RootMode::RealOdd, ctx);
    return {r.value.real(), r};
  }
  if (target == "S") {
    if (!(q > 0) || q > 1) throw DomainError("S(q) needs 0 < q <= 1");
    CFResult r = eval_infinite(rr_bare_spec(-q, ctx), ctx);
    if (!r.converged()) return {r.value.real(), r};
    return {S(q, ctx), r};
  }
  if (!(abs(q) < 1)) throw DomainError(target + "(q) needs |q| < 1");
  if (target == "G") return {rr_G(q, ctx), std::nullopt};
  if (target == "H") return {rr_H(q, ctx), std::nullopt};
  if (target == "phi") return {theta_phi(q, ctx), std::nullopt};
  if (target == "chi") return {chi(q, ctx), std::nullopt};
  throw DomainError("unknown target '" + target + "'");
}

int cmd_eval(const RunConfig& cfg, const std::string& target, const Argument& arg) {
  const PrecisionContext ctx = cfg.context();
  std::optional<QPoint> point;
  if (target != "cf2") point = arg.point();
  const EvalOutcome out = evaluate_target(target, point, ctx);
  if (out.cf && !out.cf->converged()) {
    std::cerr << "rrcf: " << target << " did not converge (" << to_string(out.cf->status) << " after "
              << out.cf->iterations << " iterations)\n";
    return kNonConvergence;
  }
  const EvalOutcome check = evaluate_target(target, point, ctx.doubled());
  const int bits = agree_bits(out.value, check.value, ctx);
  const std::string value = to_string(out.value, ctx.decimal_digits());
  const std::string q = point ? point->label() : "-";
  const std::string iterations = out.cf ? std::to_string(out.cf->iterations) : "-";
  const std::string status = out.cf ? to_string(out.cf->status) : "converged";

  Document d;
  d.json = {{"target", target}, {"q", q}, {"bits", ctx.bits()}, {"value", value}};
  if (out.cf) {
    d.json["iterations"] = out.cf->iterations;
  } else {
    d.json["iterations"] = nullptr;
  }
  d.json["status"] = status;
  d.json["agree_bits"] = bits;
  d.summary = {{"target", target}, {"q", q},        {"value", value},
               {"iterations", iterations}, {"status", status}, {"agree_bits", std::to_string(bits)}};
  d.columns = {"target", "q", "value", "iterations", "status", "agree_bits"};
  d.rows = {{target, q, value, iterations, status, std::to_string(bits)}};
  d.text_table = false;
  std::cout << render(d, parse_format(cfg.format));
  return kOk;
}

int cmd_values(const RunConfig& cfg, const std::string& action, const std::string& name) {
  const Format format = parse_format(cfg.format);
  const PrecisionContext ctx = cfg.context();
  if (action == "list") {
    std::cout << render(registry_document(), format);
    return kOk;
  }
  if (action == "check") {
    std::vector<ValueCheck> checks;
    if (name.empty() || name == "all") {
      for (const auto& e : registry()) checks.push_back(check_value(e, ctx));
    } else {
      checks.push_back(check_value(registry_entry(name), ctx));
    }
    std::cout << render(document(checks, ctx), format);
    for (const auto& c : checks) {
      if (!c.pass) return kVerificationFailure;
    }
    return kOk;
  }
  if (action == "theta") {
    InvariantTable table = InvariantTable::seeded();
    if (!cfg.invariants_file.empty()) table.load_file(cfg.invariants_file, ctx);
    mpq_class n;
    if (name.empty() || n.set_str(name, 10) != 0 || n.get_den() == 0) {
      throw DomainError("values theta needs a positive rational n");
    }
    n.canonicalize();
    if (n <= 0) throw DomainError("values theta needs a positive rational n");
    const BigReal from_invariants = theta_quotient(n, table, ctx);
    const BigReal direct = theta_ratio_direct(n, ctx);
    const BigReal dev = abs(from_invariants - direct);
    const bool pass = dev < verification_tol(ctx);
    const int digits = ctx.decimal_digits();
    Document d;
    d.json = {{"n", n.get_str()},
              {"from_invariants", to_string(from_invariants, digits)},
              {"theta_ratio", to_string(direct, digits)},
              {"abs_dev", deviation_string(dev)},
              {"status", pass ? "pass" : "fail"}};
    d.summary = {{"n", n.get_str()},
                 {"from_invariants", to_string(from_invariants, digits)},
                 {"theta_ratio", to_string(direct, digits)},
                 {"abs_dev", deviation_string(dev)},
                 {"status", pass ? "pass" : "fail"}};
    std::cout << render(d, format);
    return pass ? kOk : kVerificationFailure;
  }
  throw DomainError("unknown values action '" + action + "' (list, check, theta)");
}

int cmd_verify(const RunConfig& cfg, const std::string& id, const std::string& mode) {
  const PrecisionContext ctx = cfg.context();
  VerifyOptions opt;
  opt.samples = cfg.samples;
  opt.order = cfg.order;
  if (mode == "numeric") {
    opt.mode = VerifyMode::Numeric;
  } else if (mode == "formal") {
    opt.mode = VerifyMode::FormalSeries;
  } else {
    throw DomainError("unknown mode '" + mode + "' (numeric, formal)");
  }
  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& info : identities()) {
      if (opt.mode == VerifyMode::Numeric ? info.numeric : info.formal) ids.push_back(info.id);
    }
  } else {
    ids.push_back(id);
  }
  std::vector<Document> docs;
  bool pass = true;
  for (const auto& i : ids) {
    const VerificationReport r = verify(i, ctx, opt);
    pass = pass && r.pass;
    docs.push_back(document(r));
  }
  std::cout << render(docs, parse_format(cfg.format));
  return pass ? kOk : kVerificationFailure;
}

int cmd_schur(const RunConfig& cfg, long n, long j) {
  if (n < 1) throw DomainError("schur needs n >= 1");
  const PrecisionContext ctx = cfg.context();
  const SchurClassification c = schur_classify(n);
  Document d = document(c);
  if (!c.diverges) {
    const BigComplex v = rr_at_root_of_unity(n, j, RootMode::Principal, ctx);
    const std::string value = to_string(v, ctx.decimal_digits());
    d.json["j"] = j;
    d.json["value"] = value;
    d.summary.emplace_back("j", std::to_string(j));
    d.summary.emplace_back("value", value);
  }
  std::cout << render(d, parse_format(cfg.format));
  return kOk;
}

int cmd_series(const RunConfig& cfg, const std::string& which, const std::string& backend_name) {
  Backend backend = Backend::Sum;
  if (backend_name == "product") {
    backend = Backend::Product;
  } else if (backend_name != "sum") {
    throw DomainError("unknown backend '" + backend_name + "' (sum, product)");
  }
  std::optional<IntegerSeries> s;
  if (which == "G") s = series_G(cfg.order, backend);
  if (which == "H") s = series_H(cfg.order, backend);
  if (which == "R") s = series_R(cfg.order);
  if (which == "theta") s = series_theta(cfg.order);
  if (which == "euler") s = series_euler(cfg.order);
  if (!s) throw DomainError("unknown series '" + which + "' (G, H, R, theta, euler)");
  std::cout << render(series_document(which, *s), parse_format(cfg.format));
  return kOk;
}

int cmd_asymptotic(const RunConfig& cfg, const std::string& x_text, bool no_polynomial) {
  const PrecisionContext ctx = cfg.context();
  const BigReal x = QPoint::decimal(x_text).at(ctx);
  const AsymptoticRecord r = asymptotic_check(x, ctx, !no_polynomial);
  std::cout << render(document(r, !no_polynomial, ctx), parse_format(cfg.format));
  return kOk;
}

int cmd_jims(const RunConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  const JimsRecord r = jims_identity(ctx);
  std::cout << render(document(r, ctx), parse_format(cfg.format));
  return r.pass ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rogers-Ramanujan continued fraction verification lab"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--bits", cfg.bits, "working precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--tol-digits", cfg.tol_digits, "verification tolerance 10^-D")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--invariants", cfg.invariants_file, "class invariant file (JSON)")->check(CLI::ExistingFile);
  app.add_option("--samples", cfg.samples, "sample points per identity")->check(CLI::PositiveNumber);
  app.add_option("--order", cfg.order, "formal series order")->check(CLI::Range(10, 100000));

  std::string target;
  Argument arg;
  auto* eval = app.add_subcommand("eval", "evaluate R, S, G, H, phi, chi or cf2");
  eval->add_option("target", target)->required()->check(CLI::IsMember({"R", "S", "G", "H", "phi", "chi", "cf2"}));
  eval->add_option("--q", arg.q, "nome as a decimal or p/q");
  eval->add_option("--exp-arg", arg.exp_arg, "s for q = e^(-pi s), s rational");

  std::string values_action, values_name;
  auto* values = app.add_subcommand("values", "list or check the special-value registry");
  values->add_option("action", values_action)->required()->check(CLI::IsMember({"list", "check", "theta"}));
  values->add_option("name", values_name, "entry name, 'all', or n for theta");

  std::string verify_id, verify_mode = "numeric";
  auto* verify_cmd = app.add_subcommand("verify", "verify an identity, or all");
  verify_cmd->add_option("id", verify_id)->required();
  verify_cmd->add_option("--mode", verify_mode, "numeric or formal")->check(CLI::IsMember({"numeric", "formal"}));

  long schur_n = 0, schur_j = 1;
  auto* schur = app.add_subcommand("schur", "classify R at primitive n-th roots of unity");
  schur->add_option("n", schur_n)->required();
  schur->add_option("--j", schur_j, "q = e^(2 pi i j/n)");

  std::string series_which, series_backend = "sum";
  auto* series = app.add_subcommand("series", "exact series coefficients");
  series->add_option("which", series_which)->required()->check(CLI::IsMember({"G", "H", "R", "theta", "euler"}));
  series->add_option("--backend", series_backend, "sum or product")->check(CLI::IsMember({"sum", "product"}));

  std::string asym_x;
  bool no_polynomial = false;
  auto* asym = app.add_subcommand("asymptotic", "approximation to the cf2 fraction for small x");
  asym->add_option("x", asym_x)->required();
  asym->add_flag("--no-polynomial", no_polynomial, "drop the polynomial correction");

  auto* jims = app.add_subcommand("jims", "double-factorial series plus cf2 against sqrt(pi e/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg, target, arg);
    if (*values) return cmd_values(cfg, values_action, values_name);
    if (*verify_cmd) return cmd_verify(cfg, verify_id, verify_mode);
    if (*schur) return cmd_schur(cfg, schur_n, schur_j);
    if (*series) return cmd_series(cfg, series_which, series_backend);
    if (*asym) return cmd_asymptotic(cfg, asym_x, no_polynomial);
    if (*jims) return cmd_jims(cfg);
  } catch (const DivergenceError& e) {
    std::cerr << "rrcf: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const EvaluationError& e) {
    std::cerr << "rrcf: " << e.what() << " (depth " << e.depth() << ")\n";
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "rrcf: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
