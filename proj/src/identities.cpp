#include "rrcf/identities.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/formal_series.hpp"
#include "rrcf/kernels.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/special_values.hpp"

namespace rrcf {

const char* to_string(VerifyMode m) { return m == VerifyMode::Numeric ? "numeric" : "formal-series"; }

const std::vector<IdentityInfo>& identities() {
  static const std::vector<IdentityInfo> list = {
      {"rr1", "G(q): sum q^(n^2)/(q;q)_n = 1/((q;q^5)(q^4;q^5))", true, true},
      {"rr2", "H(q): sum q^(n(n+1))/(q;q)_n = 1/((q^2;q^5)(q^3;q^5))", true, true},
      {"cf-vs-product", "continued fraction R(q) = q^(1/5) H(q)/G(q)", true, true},
      {"entry15a", "sum b^n q^(n^2)/((aq;q)_n (q;q)_n) ratio = 1 + bq/(1-aq) + bq^2/(1-aq^2) + ...", true, false},
      {"entry15a-corollary", "the a = 0 case: ratio of sums = 1 + bq/1 + bq^2/1 + ...", true, false},
      {"modular-relation", "(phi + R(e^(-2a)))(phi + R(e^(-2b))) = (5 + sqrt 5)/2, ab = pi^2", true, false},
      {"R-identity-1", "1/R - 1 - R = (q^(1/5);q^(1/5)) / (q^(1/5) (q^5;q^5))", true, true},
      {"R-identity-2", "1/R^5 - 11 - R^5 = (q;q)^6 / (q (q^5;q^5)^6)", true, true},
      {"factorization-1", "1/sqrt(t) - alpha sqrt(t) as a product, alpha = (1 - sqrt 5)/2", true, false},
      {"factorization-2", "1/sqrt(t) - beta sqrt(t) as a product, beta = (1 + sqrt 5)/2", true, false},
      {"factorization-product", "the two factorizations multiply to R-identity-1", true, false},
      {"cubic", "(v - u^3)(1 + u v^3) = 3 u^2 v^2, u = R(q), v = R(q^3)", true, false},
      {"k-param", "k = R(q) R^2(q^2): R^5(q), R^5(q^2) and R(q^(1/2)) in terms of k", true, false},
      {"quintic-corollary", "u v = p, R and R(q^4) from p, 1/R(q) - R(q^4) = 2/u, 1/R(q^4) - R(q) = 2/v", true,
       false},
      {"finite-form", "mu_n/nu_n = 1 + aq/1 + ... + aq^n/1, exact rationals", true, false},
      {"schur-consistency", "R at primitive n-th roots of unity against the closed classification", true, false},
  };
  return list;
}

const IdentityInfo& identity_info(const std::string& id) {
  for (const auto& info : identities()) {
    if (info.id == id) return info;
  }
  throw LookupError("no identity named '" + id + "'");
}

namespace {

/// One comparison at a sample point. `verdict` overrides the tolerance test.
struct Check {
  std::string suffix;
  std::string lhs;
  std::string rhs;
  BigReal abs_dev;
  int agree_bits = 0;
  std::optional<BigReal> tol;
  std::optional<bool> verdict;
  bool excluded = false;
  std::string note;
};

struct Point {
  std::string label;
  std::function<std::vector<Check>(const PrecisionContext&)> eval;
};

std::string fmt(const BigReal& x, const PrecisionContext& ctx) { return to_string(x, ctx.decimal_digits()); }
std::string fmt(const BigComplex& z, const PrecisionContext& ctx) { return to_string(z, ctx.decimal_digits()); }

Check compare(std::string suffix, const BigReal& lhs, const BigReal& rhs, const PrecisionContext& ctx) {
  Check c{std::move(suffix), fmt(lhs, ctx), fmt(rhs, ctx), abs(lhs - rhs), 0, {}, {}, false, {}};
  c.agree_bits = agree_bits(lhs, rhs, ctx);
  return c;
}

Check compare(std::string suffix, const BigComplex& lhs, const BigComplex& rhs, const PrecisionContext& ctx) {
  Check c{std::move(suffix), fmt(lhs, ctx), fmt(rhs, ctx), abs(lhs - rhs), 0, {}, {}, false, {}};
  c.agree_bits = agree_bits(lhs, rhs, ctx);
  return c;
}

Check excluded(std::string suffix, std::string note, const PrecisionContext& ctx) {
  return {std::move(suffix), "-", "-", BigReal(0, ctx), 0, {}, {}, true, std::move(note)};
}

/// Evenly spaced subset of `axis`, endpoints included.
template <class T>
std::vector<T> thin(const std::vector<T>& axis, int samples) {
  const auto n = static_cast<int>(axis.size());
  if (samples >= n) return axis;
  if (samples == 1) return {axis.front()};
  std::vector<T> out;
  for (int i = 0; i < samples; ++i) {
    const int idx = static_cast<int>((static_cast<long>(i) * (n - 1) * 2 + (samples - 1)) / (2L * (samples - 1)));
    out.push_back(axis[static_cast<std::size_t>(idx)]);
  }
  return out;
}

const std::vector<std::string>& q_axis() {
  static const std::vector<std::string> axis = {"0.05", "0.10", "0.15", "0.20", "0.25",
                                                "0.30", "0.35", "0.40", "0.45", "0.50"};
  return axis;
}

using QCheck = std::function<std::vector<Check>(const BigReal& q, const PrecisionContext&)>;

std::vector<Point> q_grid(int samples, QCheck f) {
  std::vector<Point> points;
  for (const auto& text : thin(q_axis(), samples)) {
    const QPoint q = QPoint::decimal(text);
    points.push_back({"q=" + text, [q, f](const PrecisionContext& ctx) { return f(q.at(ctx), ctx); }});
  }
  return points;
}

BigReal tau_of(const BigReal& q) { return root(q, 5); }

BigReal euler_inf(const BigReal& q, const PrecisionContext& ctx) { return pochhammer_inf(q, q, ctx); }

/// (q^(1/5); q^(1/5)) / (q^(1/5) (q^5; q^5))
BigReal identity1_rhs(const BigReal& q, const PrecisionContext& ctx) {
  const BigReal tau = tau_of(q);
  return euler_inf(tau, ctx) / (tau * euler_inf(pow(q, 5L), ctx));
}

// ---------------------------------------------------------------------------
// Numeric cases

std::vector<Point> rr_points(int samples, bool h) {
  return q_grid(samples, [h](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal sum = h ? rr_H(q, ctx, Backend::Sum) : rr_G(q, ctx, Backend::Sum);
    const BigReal prod = h ? rr_H(q, ctx, Backend::Product) : rr_G(q, ctx, Backend::Product);
    return std::vector<Check>{compare("", sum, prod, ctx)};
  });
}

std::vector<Point> cf_vs_product_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    return std::vector<Check>{compare("", rr_real(q, ctx), rr_product(q, ctx), ctx)};
  });
}

/// sum_n b^n q^(n^2 + shift n) / ((aq;q)_n (q;q)_n)
BigReal entry15_sum(const BigReal& a, const BigReal& b, const BigReal& q, int shift, const PrecisionContext& ctx) {
  BigReal sum(1, ctx);
  BigReal term(1, ctx);
  BigReal qn(1, ctx);
  const BigReal tol = ctx.tol();
  for (std::int64_t n = 1; n <= ctx.max_iter(); ++n) {
    qn *= q;
    BigReal step = b * qn * qn / q / ((1 - a * qn) * (1 - qn));
    if (shift == 1) step *= q;
    term *= step;
    sum += term;
    if (abs(term) < tol * max(abs(sum), BigReal(1, ctx))) return sum;
  }
  throw DivergenceError("entry 15 sum did not settle within max_iter terms");
}

std::vector<Check> entry15_check(const BigReal& a, const BigReal& b, const BigReal& q, const PrecisionContext& ctx) {
  const BigReal lhs = entry15_sum(a, b, q, 0, ctx) / entry15_sum(a, b, q, 1, ctx);
  CFSpec<BigReal> spec{BigReal(1, ctx),
                       [a, b, q](std::int64_t k) {
                         const BigReal qk = pow(q, static_cast<long>(k));
                         return Term<BigReal>{b * qk, 1 - a * qk};
                       },
                       std::nullopt};
  const CFResult r = eval_infinite(spec, ctx);
  Check c = compare("", lhs, r.value.real(), ctx);
  if (!r.converged()) {
    c.verdict = false;
    c.note = std::string("continued fraction: ") + to_string(r.status);
  }
  return {c};
}

std::vector<Point> entry15a_points(int samples) {
  const std::vector<std::string> qs = {"1/10", "1/5", "3/10"};
  const std::vector<std::string> ab = {"0", "1/2", "-1/2", "1", "-1"};
  std::vector<Point> points;
  for (const auto& qt : thin(qs, samples)) {
    for (const auto& at : ab) {
      for (const auto& bt : ab) {
        const mpq_class q(qt), a(at), b(bt);
        points.push_back({"a=" + at + " b=" + bt + " q=" + qt, [q, a, b](const PrecisionContext& ctx) {
                            return entry15_check(BigReal(a, ctx), BigReal(b, ctx), BigReal(q, ctx), ctx);
                          }});
      }
    }
  }
  return points;
}

std::vector<Point> entry15a_corollary_points(int samples) {
  const std::vector<std::string> qs = {"0.05", "0.10", "0.15", "0.20", "0.25", "0.30"};
  const std::vector<std::string> bs = {"1/2", "-1/2", "1", "-1"};
  std::vector<Point> points;
  for (const auto& qt : thin(qs, samples)) {
    for (const auto& bt : bs) {
      const QPoint q = QPoint::decimal(qt);
      const mpq_class b(bt);
      points.push_back({"b=" + bt + " q=" + qt, [q, b](const PrecisionContext& ctx) {
                          return entry15_check(BigReal(0, ctx), BigReal(b, ctx), q.at(ctx), ctx);
                        }});
    }
  }
  return points;
}

std::vector<Point> modular_points(int samples) {
  struct Alpha {
    std::string label;
    mpq_class s1;  // e^(-2 alpha) = e^(-pi s1)
  };
  const std::vector<Alpha> alphas = {{"pi/2", 1}, {"pi", 2}, {"3pi/2", 3}, {"2pi", 4}};
  std::vector<Point> points;
  for (const auto& al : thin(alphas, samples)) {
    const mpq_class s1 = al.s1;
    const mpq_class s2 = mpq_class(4) / s1;
    points.push_back({"alpha=" + al.label, [s1, s2](const PrecisionContext& ctx) {
                        const BigReal& phi = golden_phi(ctx);
                        const BigReal r1 = rr_real(QPoint::exp_pi(s1).at(ctx), ctx);
                        const BigReal r2 = rr_real(QPoint::exp_pi(s2).at(ctx), ctx);
                        return std::vector<Check>{compare("", (phi + r1) * (phi + r2), (5 + sqrt5(ctx)) / 2, ctx)};
                      }});
  }
  return points;
}

std::vector<Point> identity1_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal r = rr_real(q, ctx);
    return std::vector<Check>{compare("", 1 / r - 1 - r, identity1_rhs(q, ctx), ctx)};
  });
}

std::vector<Point> identity2_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal r5 = pow(rr_real(q, ctx), 5L);
    const BigReal rhs = pow(euler_inf(q, ctx), 6L) / (q * pow(euler_inf(pow(q, 5L), ctx), 6L));
    return std::vector<Check>{compare("", 1 / r5 - 11 - r5, rhs, ctx)};
  });
}

BigReal alpha_c(const PrecisionContext& ctx) { return (1 - sqrt5(ctx)) / 2; }
BigReal beta_c(const PrecisionContext& ctx) { return (1 + sqrt5(ctx)) / 2; }

std::vector<Point> factorization_points(int samples, bool use_beta) {
  return q_grid(samples, [use_beta](const BigReal& q, const PrecisionContext& ctx) {
    const auto s = factorization_sides(q, use_beta ? beta_c(ctx) : alpha_c(ctx), ctx);
    return std::vector<Check>{compare("", s.lhs, s.rhs, ctx)};
  });
}

std::vector<Point> factorization_product_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const auto f1 = factorization_sides(q, alpha_c(ctx), ctx);
    const auto f2 = factorization_sides(q, beta_c(ctx), ctx);
    const BigReal t = rr_real(q, ctx);
    return std::vector<Check>{compare("lhs", f1.lhs * f2.lhs, 1 / t - 1 - t, ctx),
                              compare("rhs", f1.rhs * f2.rhs, identity1_rhs(q, ctx), ctx)};
  });
}

std::vector<Point> cubic_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal u = rr_real(q, ctx);
    const BigReal v = rr_real(pow(q, 3L), ctx);
    return std::vector<Check>{compare("", (v - pow(u, 3L)) * (1 + u * pow(v, 3L)), 3 * u * u * v * v, ctx)};
  });
}

std::vector<Point> k_param_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal r1 = rr_real(q, ctx);
    const BigReal r2 = rr_real(q * q, ctx);
    const BigReal k = r1 * r2 * r2;
    const BigReal ratio = (1 - k) / (1 + k);
    std::vector<Check> out{compare("R^5(q)", pow(r1, 5L), k * ratio * ratio, ctx),
                           compare("R^5(q^2)", pow(r2, 5L), k * k / ratio, ctx)};
    if (k <= sqrt5(ctx) - 2) {
      const BigReal display = root(k, 10) * pow(root(1 + k, 5), 4L) * root(1 - k, 5) /
                              (sqrt(k) + sqrt(1 + k - k * k));
      out.push_back(compare("R(q^(1/2))", rr_real(sqrt(q), ctx), display, ctx));
    } else {
      out.push_back(excluded("R(q^(1/2))", "k = " + to_string(k, 12) + " exceeds sqrt(5) - 2", ctx));
    }
    return out;
  });
}

std::vector<Point> quintic_points(int samples) {
  return q_grid(samples, [](const BigReal& q, const PrecisionContext& ctx) {
    const BigReal p = p_value(q, ctx);
    const QuinticUV uv = quintic_uv(p);
    const BigReal r = rr_real(q, ctx);
    const BigReal r4 = rr_real(pow(q, 4L), ctx);
    const BigReal s = sqrt(p + 1);
    return std::vector<Check>{
        compare("u*v", uv.u * uv.v, p, ctx),
        compare("R", uv.u / (s + 1), r, ctx),
        compare("R alt", (s - 1) / uv.v, r, ctx),
        compare("R(q^4)", (s - 1) / uv.u, r4, ctx),
        compare("R(q^4) alt", uv.v / (s + 1), r4, ctx),
        compare("2/u", 1 / r - r4, 2 / uv.u, ctx),
        compare("2/v", 1 / r4 - r, 2 / uv.v, ctx),
    };
  });
}

std::vector<Point> finite_form_points(int samples) {
  const std::vector<std::string> qs = {"1/2", "1/3", "2/3"};
  const std::vector<std::string> as = {"1", "-1", "1/2", "-1/2", "2"};
  std::vector<Point> points;
  for (const auto& qt : thin(qs, samples)) {
    for (const auto& at : as) {
      const mpq_class q(qt), a(at);
      points.push_back({"a=" + at + " q=" + qt, [q, a](const PrecisionContext& ctx) {
                          std::vector<Check> out;
                          const CFSpec<mpq_class> spec{mpq_class(1),
                                                       [a, q](std::int64_t k) {
                                                         mpq_class qk = 1;
                                                         for (std::int64_t i = 0; i < k; ++i) qk *= q;
                                                         return Term<mpq_class>{a * qk, mpq_class(1)};
                                                       },
                                                       std::nullopt};
                          for (long n = 0; n <= 12; ++n) {
                            const std::string suffix = "n=" + std::to_string(n);
                            const mpq_class nu = finite_nu(n, a, q);
                            if (nu == 0) {
                              out.push_back(excluded(suffix, "nu_n = 0", ctx));
                              continue;
                            }
                            const mpq_class lhs = finite_mu(n, a, q) / nu;
                            mpq_class rhs;
                            try {
                              rhs = eval_finite(spec, n);
                            } catch (const EvaluationError& e) {
                              out.push_back(excluded(suffix, e.what(), ctx));
                              continue;
                            }
                            const mpq_class diff = abs(lhs - rhs);
                            Check c{suffix, lhs.get_str(), rhs.get_str(), BigReal(diff, ctx), 0, BigReal(0, ctx),
                                    lhs == rhs, false, {}};
                            c.agree_bits = lhs == rhs ? ctx.bits() : agree_bits(BigReal(lhs, ctx), BigReal(rhs, ctx), ctx);
                            out.push_back(std::move(c));
                          }
                          return out;
                        }});
    }
  }
  return points;
}

constexpr std::int64_t kSchurIterationCap = 100000;

std::vector<Point> schur_points() {
  std::vector<Point> points;
  for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 11L}) {
    std::vector<long> js = {1};
    if (n > 2) js.push_back(n - 1);
    for (long j : js) {
      points.push_back({"n=" + std::to_string(n) + " j=" + std::to_string(j), [n, j](const PrecisionContext& ctx) {
                          const PrecisionContext capped = ctx.with_max_iter(std::min(ctx.max_iter(), kSchurIterationCap));
                          const CFResult r =
                              eval_infinite(rr_root_of_unity_spec(n, j, RootMode::Principal, capped), capped);
                          const std::string status =
                              std::string(to_string(r.status)) + " after " + std::to_string(r.iterations);
                          if (n % 5 == 0) {
                            Check c{"", status, "diverges", BigReal(0, ctx), 0, {}, !r.converged(), false, {}};
                            if (r.status == CFStatus::LimitCycle) c.note = "period " + std::to_string(r.period);
                            return std::vector<Check>{std::move(c)};
                          }
                          Check c = compare("", r.value, rr_at_root_of_unity(n, j, RootMode::Principal, ctx), ctx);
                          c.tol = BigReal(mpq_class(1, 1000), ctx);
                          c.note = status;
                          if (!r.converged()) c.verdict = false;
                          return std::vector<Check>{std::move(c)};
                        }});
    }
  }
  return points;
}

std::vector<Point> numeric_points(const std::string& id, int samples) {
  if (id == "rr1") return rr_points(samples, false);
  if (id == "rr2") return rr_points(samples, true);
  if (id == "cf-vs-product") return cf_vs_product_points(samples);
  if (id == "entry15a") return entry15a_points(samples);
  if (id == "entry15a-corollary") return entry15a_corollary_points(samples);
  if (id == "modular-relation") return modular_points(samples);
  if (id == "R-identity-1") return identity1_points(samples);
  if (id == "R-identity-2") return identity2_points(samples);
  if (id == "factorization-1") return factorization_points(samples, false);
  if (id == "factorization-2") return factorization_points(samples, true);
  if (id == "factorization-product") return factorization_product_points(samples);
  if (id == "cubic") return cubic_points(samples);
  if (id == "k-param") return k_param_points(samples);
  if (id == "quintic-corollary") return quintic_points(samples);
  if (id == "finite-form") return finite_form_points(samples);
  if (id == "schur-consistency") return schur_points();
  throw LookupError("no identity named '" + id + "'");
}

// ---------------------------------------------------------------------------
// Formal series cases

/// R in t from the continued fraction itself: backward in q, then t^5 = q and a factor t.
IntegerSeries cf_series_R(int order) {
  const int qorder = order / 5 + 1;
  IntegerSeries tail = IntegerSeries::one(qorder);
  for (int k = qorder - 1; k >= 1; --k) {
    tail = IntegerSeries::one(qorder) + IntegerSeries::monomial(k, mpz_class(1), qorder) * tail.reciprocal();
  }
  return tail.reciprocal().substituted(5).shifted(1).truncated(order);
}

std::pair<IntegerSeries, IntegerSeries> formal_sides(const std::string& id, int order) {
  if (id == "rr1") return {series_G(order, Backend::Sum), series_G(order, Backend::Product)};
  if (id == "rr2") return {series_H(order, Backend::Sum), series_H(order, Backend::Product)};
  if (id == "cf-vs-product") return {cf_series_R(order), series_R(order)};
  if (id == "R-identity-1") {
    // t (1/R - 1 - R) = (t;t) / (t^25;t^25)
    const IntegerSeries r = series_R(order + 2);
    const IntegerSeries t = IntegerSeries::monomial(1, mpz_class(1), order + 2);
    const IntegerSeries lhs = r.reciprocal().shifted(1) - t - r.shifted(1);
    const IntegerSeries rhs = series_euler(order, 1) * series_euler(order, 25).reciprocal();
    return {lhs.truncated(order), rhs.truncated(order)};
  }
  if (id == "R-identity-2") {
    // q (1/R^5 - 11 - R^5) = (H/G)^-5 - 11 q - q^2 (H/G)^5 = (q;q)^6 / (q^5;q^5)^6
    const IntegerSeries g = series_G(order, Backend::Product);
    const IntegerSeries h = series_H(order, Backend::Product);
    const IntegerSeries x5 = (h * g.reciprocal()).pow(5);
    const IntegerSeries xm5 = (g * h.reciprocal()).pow(5);
    const IntegerSeries lhs = xm5 - IntegerSeries::monomial(1, mpz_class(11), order) - x5.shifted(2);
    const IntegerSeries rhs = series_euler(order, 1).pow(6) * series_euler(order, 5).pow(6).reciprocal();
    return {lhs.truncated(order), rhs.truncated(order)};
  }
  throw DomainError("identity '" + id + "' has no formal-series mode");
}

std::string head_coefficients(const IntegerSeries& s, int from) {
  const auto dense = s.dense(from);
  std::string out = "[";
  const std::size_t shown = std::min<std::size_t>(dense.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i > 0) out += ",";
    out += dense[i].get_str();
  }
  if (shown < dense.size()) out += ",...";
  return out + "]";
}

VerificationRecord formal_record(const std::string& id, int order, const PrecisionContext& ctx) {
  const auto [lhs, rhs] = formal_sides(id, order);
  const int from = std::min(lhs.valuation(), rhs.valuation());
  const int to = std::min(lhs.order(), rhs.order());
  VerificationRecord rec{"t^" + std::to_string(from) + "..t^" + std::to_string(to - 1),
                         head_coefficients(lhs, from),
                         head_coefficients(rhs, from),
                         BigReal(0, ctx),
                         ctx.bits(),
                         BigReal(0, ctx),
                         true,
                         false,
                         {}};
  if (to < order) {
    rec.pass = false;
    rec.note = "series known only to order " + std::to_string(to);
  }
  mpz_class worst = 0;
  for (int e = from; e < to; ++e) {
    const mpz_class d = abs(lhs.coeff(e) - rhs.coeff(e));
    if (d > worst) worst = d;
  }
  if (worst != 0) {
    const int bad = *lhs.first_mismatch(rhs);
    rec.pass = false;
    rec.agree_bits = 0;
    rec.abs_dev = BigReal(worst, ctx.bits());
    rec.note = "first mismatch at t^" + std::to_string(bad) + ": " + lhs.coeff(bad).get_str() + " vs " +
               rhs.coeff(bad).get_str();
  } else {
    rec.note = std::to_string(to - from) + " coefficients equal";
  }
  return rec;
}

}  // namespace

FactorizationSides factorization_sides(const BigReal& q, const BigReal& c, const PrecisionContext& ctx) {
  if (!(q > 0) || !(q < 1)) throw DomainError("factorization needs 0 < q < 1");
  const BigReal t = rr_real(q, ctx);
  const BigReal st = sqrt(t);
  const BigReal tau = tau_of(q);
  const BigReal tol = ctx.tol();
  const BigReal bound_scale = (abs(c) + 1) / (1 - tau);
  BigReal prod(1, ctx);
  BigReal tn(1, ctx);
  for (std::int64_t n = 1; n <= ctx.max_iter(); ++n) {
    tn *= tau;
    prod /= 1 + c * tn + tn * tn;
    if (bound_scale * tn < tol) {
      const BigReal rhs = sqrt(euler_inf(q, ctx) / euler_inf(pow(q, 5L), ctx)) / sqrt(tau) * prod;
      return {1 / st - c * st, rhs};
    }
  }
  throw DivergenceError("factorization product did not settle within max_iter factors");
}

VerificationReport verify(const std::string& id, const PrecisionContext& ctx, const VerifyOptions& options) {
  const IdentityInfo& info = identity_info(id);
  if (options.samples < 1) throw DomainError("samples must be >= 1");
  VerificationReport report{id, options.mode, ctx, verification_tol(ctx), {}, BigReal(0, ctx), true};

  if (options.mode == VerifyMode::FormalSeries) {
    if (!info.formal) throw DomainError("identity '" + id + "' has no formal-series mode");
    if (options.order < 1) throw DomainError("series order must be >= 1");
    report.tol = BigReal(0, ctx);
    report.records.push_back(formal_record(id, options.order, ctx));
    report.max_deviation = report.records.front().abs_dev;
    report.pass = report.records.front().pass;
    return report;
  }

  const std::vector<Point> points = numeric_points(id, options.samples);
  auto run = [&](std::size_t i) -> std::vector<Check> {
    try {
      return points[i].eval(ctx);
    } catch (const std::exception& e) {
      Check c{"", "-", "-", BigReal(0, ctx), 0, {}, false, false, e.what()};
      return {std::move(c)};
    }
  };
  const auto results = options.parallel ? kernels::parallel::map_indices(points.size(), run)
                                        : kernels::serial::map_indices(points.size(), run);

  std::size_t counted = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const Check& c : results[i]) {
      VerificationRecord rec{c.suffix.empty() ? points[i].label : points[i].label + " [" + c.suffix + "]",
                             c.lhs,
                             c.rhs,
                             c.abs_dev,
                             c.agree_bits,
                             c.tol.value_or(report.tol),
                             false,
                             c.excluded,
                             c.note};
      if (!rec.excluded) {
        rec.pass = c.verdict.value_or(rec.abs_dev < rec.tol);
        report.pass = report.pass && rec.pass;
        report.max_deviation = max(report.max_deviation, rec.abs_dev);
        ++counted;
      }
      report.records.push_back(std::move(rec));
    }
  }
  if (counted == 0) throw DomainError("identity '" + id + "': no sample point satisfies its preconditions");
  return report;
}

// ---------------------------------------------------------------------------

AsymptoticRecord asymptotic_check(const BigReal& x, const PrecisionContext& ctx, bool with_polynomial) {
  if (!(x > 0) || x > BigReal(mpq_class(1, 2), ctx)) throw DomainError("asymptotic check needs 0 < x <= 1/2");
  const BigReal tol = ctx.tol() * x;
  BigReal gauss(0, ctx);
  for (std::int64_t n = 1;; ++n) {
    if (n > ctx.max_iter()) throw DivergenceError("Gaussian sum did not settle within max_iter terms");
    const BigReal y = 1 + x * BigReal(n, ctx);
    const BigReal term = exp(-(y * y) / 2);
    gauss += term;
    if (term < tol) break;
  }
  BigReal approx = x * sqrt(euler_e(ctx)) * gauss;
  if (with_polynomial) {
    const BigReal x2 = x * x;
    approx += x / 2 - x2 / 12 - pow(x2, 2L) / 360 - pow(x2, 3L) / 5040 - pow(x2, 4L) / 60480 -
              pow(x2, 5L) / 1710720;
  }
  const CFResult r = eval_infinite(cf2_spec(ctx), ctx);
  if (!r.converged()) throw DivergenceError("cf2 continued fraction did not converge");
  BigReal reference = r.value.real();
  BigReal error = abs(approx - reference);
  return {x, std::move(approx), std::move(reference), std::move(error)};
}

JimsRecord jims_identity(const PrecisionContext& ctx) {
  const BigReal tol = ctx.tol();
  BigReal series(1, ctx);
  BigReal term(1, ctx);
  for (long n = 1; term >= tol; ++n) {
    term /= 2 * n + 1;
    series += term;
  }
  const CFResult r = eval_infinite(cf2_spec(ctx), ctx);
  if (!r.converged()) throw DivergenceError("cf2 continued fraction did not converge");
  JimsRecord rec{series, r.value.real(), BigReal(0, ctx), sqrt(pi(ctx) * euler_e(ctx) / 2), BigReal(0, ctx), false};
  rec.sum = rec.series + rec.cf;
  rec.abs_dev = abs(rec.sum - rec.target);
  rec.pass = rec.abs_dev < verification_tol(ctx);
  return rec;
}

}  // namespace rrcf
