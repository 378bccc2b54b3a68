#include "doctest.h"

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/special_values.hpp"

using namespace rrcf;

namespace {

const PrecisionContext kCtx;

bool close(const BigReal& a, const BigReal& b) { return abs(a - b) < verification_tol(kCtx); }

BigReal one() { return BigReal(1L, kCtx); }

}  // namespace

TEST_CASE("c-parametrization") {
  CHECK(c_param(one(), -one(), kCtx) == BigReal(mpq_class(1, 2), kCtx));
  CHECK(value_from_c(BigReal(0L, kCtx)) == 1);
  CHECK(close(value_from_c(BigReal(mpq_class(1, 2), kCtx)), golden_phi(kCtx) - 1));
  // sqrt(c^2 + 1) - c is decreasing and positive
  BigReal prev = value_from_c(BigReal(-10L, kCtx));
  for (long k = -9; k <= 10; ++k) {
    const BigReal v = value_from_c(BigReal(k, kCtx));
    CHECK(v < prev);
    CHECK(v > 0);
    prev = v;
  }
  const ClosedForm c = c_param_form(ClosedForm::root(4, 5), 1);
  CHECK(close(c.evaluate(kCtx), c_param(root(BigReal(5L, kCtx), 4), one(), kCtx)));
  CHECK(close(value_from_c_form(c).evaluate(kCtx), value_from_c(c.evaluate(kCtx))));
}

TEST_CASE("registry values agree with the product quotient") {
  // R by H/G products and S(q) = -R(-q); an independent route from the fraction.
  for (const auto& e : registry()) {
    if (!e.q.exact() || *e.q.exact() != 1) {
      const BigReal q = e.q.at(kCtx);
      const BigReal closed = e.closed_form.evaluate(kCtx);
      if (e.kind == ValueKind::RValue) CHECK_MESSAGE(close(rr_product(q, kCtx), closed), e.name);
      if (e.kind == ValueKind::SValue && e.name != "chan-berndt-s") {
        CHECK_MESSAGE(close(-rr_product(-q, kCtx), closed), e.name);
      }
    }
  }
}

TEST_CASE("Chan-Berndt value holds at e^(-pi sqrt(3/5)) only") {
  const SpecialValueEntry& e = registry_entry("chan-berndt-s");
  const BigReal closed = e.closed_form.evaluate(kCtx);
  const BigReal at_reciprocal = -rr_product(-exp(-pi(kCtx) * sqrt(BigReal(mpq_class(3, 5), kCtx))), kCtx);
  const BigReal at_printed = -rr_product(-exp(-pi(kCtx) * sqrt(BigReal(mpq_class(5, 3), kCtx))), kCtx);
  CHECK(close(at_reciprocal, closed));
  CHECK(abs(at_printed - closed) > BigReal(mpq_class(1, 10), kCtx));
}

TEST_CASE("every registry entry passes its check") {
  for (const auto& e : registry()) {
    ValueCheck c = check_value(e, kCtx);
    CHECK_MESSAGE(c.pass, e.name);
    CHECK(c.name == e.name);
    CHECK(c.agree_bits >= 190);
  }
  CHECK_THROWS_AS((void)registry_entry("nope"), LookupError);
}

TEST_CASE("golden values at q = 1") {
  CHECK(close(direct_value(registry_entry("golden1-R"), kCtx), golden_phi(kCtx) - 1));
  CHECK(close(direct_value(registry_entry("golden1-S"), kCtx), golden_phi(kCtx)));
}

TEST_CASE("class invariants") {
  CHECK(close(class_invariant_direct(1, kCtx), one()));
  CHECK(close(class_invariant_direct(25, kCtx), golden_phi(kCtx)));
  CHECK(close(class_invariant_direct(3, kCtx), pow(BigReal(2L, kCtx), BigReal(mpq_class(1, 12), kCtx))));
  // G_{1/n} = G_n
  CHECK(close(class_invariant_direct(mpq_class(1, 3), kCtx), class_invariant_direct(3, kCtx)));
}

TEST_CASE("invariant table") {
  InvariantTable t = InvariantTable::seeded();
  CHECK(t.contains(1));
  CHECK(t.contains(25));
  CHECK_THROWS_AS((void)t.G(2), LookupError);
  t.insert(3, ClosedForm::root(12, 2), kCtx);
  CHECK(t.contains(3));
  CHECK_THROWS_AS(t.insert(7, ClosedForm::root(12, 3), kCtx), ConfigError);
  CHECK_FALSE(t.contains(7));
  CHECK_THROWS_AS(t.insert(mpq_class(1, 2), ClosedForm(1) / ClosedForm(2), kCtx), ConfigError);

  InvariantTable j = InvariantTable::seeded();
  j.load_json(nlohmann::json::parse(R"j([{"n": "3", "closed_form": "root(12, 2)"}])j"), kCtx);
  CHECK(j.G(3) == ClosedForm::root(12, 2));
  CHECK_THROWS_AS(j.load_json(nlohmann::json::parse(R"([{"n": "3"}])"), kCtx), ConfigError);
}

TEST_CASE("theta quotient from invariants equals the theta series ratio") {
  InvariantTable t = InvariantTable::seeded();
  t.insert(mpq_class(1, 25), ClosedForm::phi(), kCtx);
  CHECK(close(theta_quotient(1, t, kCtx), theta_ratio_direct(1, kCtx)));
  CHECK(close(theta_quotient(mpq_class(1, 25), t, kCtx), theta_ratio_direct(mpq_class(1, 25), kCtx)));
  CHECK_THROWS_AS((void)theta_quotient(3, t, kCtx), LookupError);
}

TEST_CASE("quintic parameter at e^(-pi)") {
  const BigReal q = exp(-pi(kCtx));
  const BigReal p = p_value(q, kCtx);
  const QuinticUV uv = quintic_uv(p);
  CHECK(close(uv.u * uv.v, p));
  const QuinticUV r = quintic_uv_from_roots(p, QuinticConstant::PCubed);
  CHECK(close(r.u, uv.u));
  CHECK(close(r.v, uv.v));
  CHECK(close(R_from_p(p), rr_real(q, kCtx)));
  CHECK(close(R4_from_p(p), rr_real(pow_int(q, 4), kCtx)));
  auto [alpha, beta] = quintic_roots(p, QuinticConstant::PCubed);
  CHECK(alpha > beta);
  CHECK(close(alpha * beta, pow_int(p, 3)));
  CHECK_THROWS_AS((void)p_value(one(), kCtx), DomainError);
}

TEST_CASE("quintic resolution picks the cubic constant, unswapped") {
  for (long s : {1L, 2L}) {
    QuinticResolution res = resolve_quintic(exp(-pi(kCtx) * s), kCtx);
    CHECK(res.candidates.size() == 4);
    CHECK(res.best().constant == QuinticConstant::PCubed);
    CHECK_FALSE(res.best().swapped);
    CHECK(res.best().deviation < verification_tol(kCtx));
    for (std::size_t i = 0; i < res.candidates.size(); ++i) {
      if (i != res.chosen) CHECK(res.candidates[i].deviation > BigReal(mpq_class(1, 1000), kCtx));
    }
  }
}
