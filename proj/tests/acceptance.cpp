// Acceptance run: one [PASS]/[FAIL] line per criterion, details indented below.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "rrcf/continued_fraction.hpp"
#include "rrcf/identities.hpp"
#include "rrcf/partitions.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/special_values.hpp"

using namespace rrcf;

namespace {

const PrecisionContext kCtx(256);
const PrecisionContext kWide(512);

BigReal ten_to_minus(int d, const PrecisionContext& ctx) {
  return pow(BigReal(10, ctx), BigReal(-d, ctx));
}

std::string dev(const BigReal& x) { return to_string(x, 3); }

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> details;
  bool pass = true;

  void check(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void info(const std::string& line) { details.push_back("info " + line); }
};

/// Numeric values recomputed at 512 bits for criterion 11.
std::vector<std::pair<std::string, std::function<BigReal(const PrecisionContext&)>>> g_values;

void track(const std::string& name, std::function<BigReal(const PrecisionContext&)> f) {
  g_values.emplace_back(name, std::move(f));
}

Criterion special_values() {
  Criterion c{1, "special values reproduce their closed forms to < 1e-60"};
  const BigReal tol = ten_to_minus(60, kCtx);
  for (const char* name : {"eq2", "eq3", "eq5", "golden1-R", "golden1-S", "eq7", "eq8", "r-e4pi-explicit",
                           "chan-s-pi-sqrt3"}) {
    const auto& e = registry_entry(name);
    const ValueCheck v = check_value(e, kCtx);
    c.check(v.abs_dev < tol, std::string(name) + " at " + e.q.label() + ": deviation " + dev(v.abs_dev));
    track(std::string(name) + " direct", [&e](const PrecisionContext& ctx) { return direct_value(e, ctx); });
    track(std::string(name) + " closed form", [&e](const PrecisionContext& ctx) { return e.closed_form.evaluate(ctx); });
  }
  // Chan-Berndt value at the argument as printed, e^(-pi sqrt(5/3)).
  const auto& cb = registry_entry("chan-berndt-s");
  const BigReal closed = cb.closed_form.evaluate(kCtx);
  const BigReal literal = S(QPoint::exp_pi(1, mpq_class(5, 3)).at(kCtx), kCtx);
  c.check(abs(literal - closed) < tol, "chan-berndt S(e^(-pi sqrt(5/3))) = " + to_string(literal, 15) +
                                           " vs closed form " + to_string(closed, 15) + ": deviation " +
                                           dev(abs(literal - closed)));
  const ValueCheck corrected = check_value(cb, kCtx);
  c.info("chan-berndt closed form matches S(e^(-pi sqrt(3/5))) instead: deviation " + dev(corrected.abs_dev));
  track("chan-berndt direct at sqrt(3/5)", [&cb](const PrecisionContext& ctx) { return direct_value(cb, ctx); });
  return c;
}

Criterion theta_quotient_check() {
  Criterion c{2, "theta quotient phi(e^(-5 pi))/phi(e^(-pi)) against both closed forms to < 1e-60"};
  const BigReal tol = ten_to_minus(60, kCtx);
  const BigReal direct = theta_ratio_direct(1, kCtx);
  const BigReal from_g = theta_quotient(1, InvariantTable::seeded(), kCtx);
  const BigReal simplified = registry_entry("theta-quotient-1").closed_form.evaluate(kCtx);
  c.check(abs(direct - from_g) < tol, "(1/sqrt 5)(1 + 2 G_25/G_1^5)^(1/2): deviation " + dev(abs(direct - from_g)));
  c.check(abs(direct - simplified) < tol, "(5 sqrt 5 - 10)^(-1/2): deviation " + dev(abs(direct - simplified)));
  track("theta ratio", [](const PrecisionContext& ctx) { return theta_ratio_direct(1, ctx); });
  return c;
}

Criterion quintic() {
  Criterion c{3, "quintic theorem at q = e^(-pi): R values, u v = p, corollary, to < 1e-60"};
  const BigReal tol = ten_to_minus(60, kCtx);
  const BigReal q = QPoint::exp_pi(1).at(kCtx);
  const QuinticResolution res = resolve_quintic(q, kCtx);
  for (const auto& cand : res.candidates) {
    c.info(std::string("candidate constant ") + to_string(cand.constant) + (cand.swapped ? " swapped" : "") +
           ": deviation " + dev(cand.deviation));
  }
  const auto& best = res.best();
  c.check(best.constant == QuinticConstant::PCubed && !best.swapped,
          std::string("decision: constant term ") + to_string(best.constant) + (best.swapped ? ", u and v swapped" : ""));
  c.check(best.deviation < tol, "chosen candidate vs CF R(q), R(q^4): deviation " + dev(best.deviation));
  const BigReal p = res.p;
  const QuinticUV uv = quintic_uv(p);
  const BigReal r = res.R_direct;
  const BigReal r4 = res.R4_direct;
  c.check(abs(R_from_p(p) - r) < tol, "u/(sqrt(p+1)+1) = R(e^-pi): deviation " + dev(abs(R_from_p(p) - r)));
  c.check(abs(R4_from_p(p) - r4) < tol, "v/(sqrt(p+1)+1) = R(e^-4pi): deviation " + dev(abs(R4_from_p(p) - r4)));
  c.check(abs(uv.u * uv.v - p) < tol, "u v = p: deviation " + dev(abs(uv.u * uv.v - p)));
  const auto [two_u, two_v] = quintic_corollary(p);
  c.check(abs(1 / r - r4 - two_u) < tol, "1/R(q) - R(q^4) = 2/u: deviation " + dev(abs(1 / r - r4 - two_u)));
  c.check(abs(1 / r4 - r - two_v) < tol, "1/R(q^4) - R(q) = 2/v: deviation " + dev(abs(1 / r4 - r - two_v)));
  track("p(e^-pi)", [](const PrecisionContext& ctx) { return p_value(QPoint::exp_pi(1).at(ctx), ctx); });
  track("R_from_p", [](const PrecisionContext& ctx) { return R_from_p(p_value(QPoint::exp_pi(1).at(ctx), ctx)); });
  track("R4_from_p", [](const PrecisionContext& ctx) { return R4_from_p(p_value(QPoint::exp_pi(1).at(ctx), ctx)); });
  return c;
}

Criterion modular() {
  Criterion c{4, "modular relation for alpha in {pi/2, pi, 3pi/2, 2pi} to < 1e-60"};
  const BigReal tol = ten_to_minus(60, kCtx);
  VerifyOptions opt;
  opt.samples = 4;
  const VerificationReport rep = verify("modular-relation", kCtx, opt);
  for (const auto& r : rep.records) c.check(r.abs_dev < tol, r.point + ": deviation " + dev(r.abs_dev));
  // alpha = pi: R(e^(-2 pi)) = sqrt((5 + sqrt 5)/2) - phi, independent of the registry form.
  const BigReal from_relation = sqrt((5 + sqrt5(kCtx)) / 2) - golden_phi(kCtx);
  const BigReal eq2 = registry_entry("eq2").closed_form.evaluate(kCtx);
  const BigReal cf = rr_real(QPoint::exp_pi(2).at(kCtx), kCtx);
  c.check(abs(from_relation - eq2) < tol && abs(from_relation - cf) < tol,
          "alpha = pi gives 5^(1/4) sqrt(phi) - phi: deviation " + dev(abs(from_relation - cf)));
  for (const char* s : {"1", "2", "3", "4", "4/3"}) {
    const mpq_class sq(s);
    track(std::string("R(e^(-pi ") + s + "))",
          [sq](const PrecisionContext& ctx) { return rr_real(QPoint::exp_pi(sq).at(ctx), ctx); });
  }
  return c;
}

Criterion formal() {
  Criterion c{5, "exact formal suites: rr1, rr2 to order 200; R-identity-1, R-identity-2 to order 150"};
  for (const auto& [id, order] : std::vector<std::pair<std::string, int>>{
           {"rr1", 200}, {"rr2", 200}, {"R-identity-1", 150}, {"R-identity-2", 150}}) {
    VerifyOptions opt;
    opt.mode = VerifyMode::FormalSeries;
    opt.order = order;
    const VerificationReport rep = verify(id, kCtx, opt);
    const auto& r = rep.records.front();
    c.check(rep.pass, id + " " + r.point + ": " + r.note);
  }
  return c;
}

Criterion partitions() {
  Criterion c{6, "partition counts for n <= 60 equal the G and H coefficients"};
  const int n = 60;
  const IntegerSeries g = series_G(n + 1, Backend::Sum);
  const IntegerSeries h = series_H(n + 1, Backend::Sum);
  const auto dn = parallel::count_table(n, PartitionPredicate::DistinctNonconsecutive);
  const auto m14 = parallel::count_table(n, PartitionPredicate::PartsMod5In14);
  const auto dn2 = parallel::count_table(n, PartitionPredicate::DistinctNonconsecutiveMin2);
  const auto m23 = parallel::count_table(n, PartitionPredicate::PartsMod5In23);
  int bad_g = -1, bad_h = -1;
  for (int k = 0; k <= n; ++k) {
    const auto K = static_cast<std::size_t>(k);
    const mpz_class gk = g.coeff(k), hk = h.coeff(k);
    if (bad_g < 0 && !(gk == dn[K] && gk == m14[K])) bad_g = k;
    if (bad_h < 0 && !(hk == dn2[K] && hk == m23[K])) bad_h = k;
  }
  c.check(bad_g < 0, "G: distinct nonconsecutive = parts 1,4 mod 5 = coefficient" +
                         (bad_g < 0 ? std::string(", e.g. n=60: ") + std::to_string(dn[60])
                                    : " mismatch at n=" + std::to_string(bad_g)));
  c.check(bad_h < 0, "H: distinct nonconsecutive >= 2 = parts 2,3 mod 5 = coefficient" +
                         (bad_h < 0 ? std::string(", e.g. n=60: ") + std::to_string(dn2[60])
                                    : " mismatch at n=" + std::to_string(bad_h)));
  return c;
}

Criterion finite_form() {
  Criterion c{7, "mu_n/nu_n equals the depth-n fraction exactly for n <= 12"};
  VerifyOptions opt;
  opt.samples = 3;
  const VerificationReport rep = verify("finite-form", kCtx, opt);
  std::size_t checked = 0, excluded = 0;
  for (const auto& r : rep.records) (r.excluded ? excluded : checked)++;
  c.check(rep.pass, std::to_string(checked) + " exact comparisons, " + std::to_string(excluded) + " excluded");
  for (const auto& r : rep.records) {
    if (r.excluded) c.info(r.point + ": " + r.note);
    if (!r.excluded && !r.pass) c.check(false, r.point + ": " + r.lhs + " vs " + r.rhs);
  }
  return c;
}

Criterion schur() {
  Criterion c{8, "roots of unity: classification for n <= 10^4, direct evaluation within 1e-3, 5 | n never converges"};
  long bad = 0;
  for (long n = 1; n <= 10000; ++n) {
    const SchurClassification s = schur_classify(n);
    if (n % 5 == 0) {
      if (!s.diverges) ++bad;
      continue;
    }
    const long r = n % 5;
    const int lambda = (r == 1 || r == 4) ? 1 : -1;
    const long numer = lambda * r * n - 1;
    if (s.diverges || s.lambda != lambda || s.rho != r || numer % 5 != 0 || s.exponent != numer / 5) ++bad;
  }
  c.check(bad == 0, "lambda, rho and (lambda rho n - 1)/5 for n = 1..10000: " + std::to_string(bad) + " mismatches");
  const VerificationReport rep = verify("schur-consistency", kCtx);
  for (const auto& r : rep.records) {
    c.check(r.pass, r.point + ": " + (r.rhs == "diverges" ? r.lhs : "deviation " + dev(r.abs_dev) + ", " + r.note));
  }
  for (long n : {2L, 3L, 4L, 6L, 7L, 8L, 9L, 11L}) {
    track("schur n=" + std::to_string(n),
          [n](const PrecisionContext& ctx) { return rr_at_root_of_unity(n, 1, RootMode::Principal, ctx).real(); });
  }
  return c;
}

Criterion jims() {
  Criterion c{9, "double-factorial series plus cf2 equals sqrt(pi e/2) to < 1e-60"};
  const JimsRecord r = jims_identity(kCtx);
  c.check(r.abs_dev < ten_to_minus(60, kCtx), "sum " + to_string(r.sum, 20) + ": deviation " + dev(r.abs_dev));
  track("cf2", [](const PrecisionContext& ctx) { return jims_identity(ctx).cf; });
  track("jims sum", [](const PrecisionContext& ctx) { return jims_identity(ctx).sum; });
  return c;
}

Criterion asymptotic() {
  Criterion c{10, "asymptotic error decreases along x = 0.4, 0.2, 0.1, 0.05; the polynomial helps at 0.05"};
  std::vector<BigReal> errors;
  for (const char* x : {"0.4", "0.2", "0.1", "0.05"}) {
    const BigReal xv = QPoint::decimal(x).at(kCtx);
    errors.push_back(asymptotic_check(xv, kCtx, true).error);
    c.info(std::string("x = ") + x + ": error " + dev(errors.back()));
    const QPoint xp = QPoint::decimal(x);
    track(std::string("asymptotic approx x=") + x,
          [xp](const PrecisionContext& ctx) { return asymptotic_check(xp.at(ctx), ctx, true).approx; });
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];
  c.check(decreasing, "strictly decreasing");
  const BigReal x = QPoint::decimal("0.05").at(kCtx);
  const BigReal without = asymptotic_check(x, kCtx, false).error;
  c.check(errors.back() < without, "x = 0.05: with polynomial " + dev(errors.back()) + " < without " + dev(without));
  return c;
}

Criterion doubling() {
  Criterion c{11, "numeric acceptance values agree to >= 224 bits between 256 and 512 bits"};
  int worst = kCtx.bits();
  std::string worst_name;
  for (const auto& [name, f] : g_values) {
    const BigReal a = f(kCtx);
    const BigReal b = f(kWide);
    const int bits = agree_bits(a, b, kCtx);
    if (bits < 224) c.check(false, name + ": " + std::to_string(bits) + " bits");
    if (bits < worst) {
      worst = bits;
      worst_name = name;
    }
  }
  c.check(worst >= 224, std::to_string(g_values.size()) + " values, weakest " + worst_name + " at " +
                            std::to_string(worst) + " bits");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::function<Criterion()>> suite = {special_values, theta_quotient_check, quintic, modular,
                                                         formal,         partitions,           finite_form, schur,
                                                         jims,           asymptotic,           doubling};
  std::set<int> failed;
  for (const auto& run : suite) {
    Criterion c = run();
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title << "\n";
    for (const auto& d : c.details) std::cout << "         " << d << "\n";
    std::cout.flush();
    if (!c.pass) failed.insert(c.number);
  }
  std::cout << "\n" << (suite.size() - failed.size()) << "/" << suite.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << "; expected failures:";
    for (int e : expected) std::cout << " " << e;
  }
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
