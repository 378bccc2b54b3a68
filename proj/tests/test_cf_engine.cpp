#include "doctest.h"

#include <numeric>

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"

using namespace rrcf;

namespace {

const PrecisionContext kCtx;

CFSpec<BigReal> constant_spec(const BigReal& a, const PrecisionContext& ctx) {
  return {BigReal(0L, ctx), [a, ctx](std::int64_t) { return Term<BigReal>{a, BigReal(1L, ctx)}; }, std::nullopt};
}

// q^(1/5) H(q)/G(q) from the raw products, independent of the library q-series.
BigReal rr_products(const BigReal& q, const PrecisionContext& ctx) {
  BigReal ratio(1L, ctx), qk(1L, ctx);
  for (long k = 1; k < 4000; ++k) {
    qk *= q;
    const long r = k % 5;
    if (r == 1 || r == 4) ratio *= 1 - qk;
    if (r == 2 || r == 3) ratio /= 1 - qk;
    if (abs(qk) < ctx.tol() * ctx.tol()) break;
  }
  return root(q, 5, RootMode::RealOdd) * ratio;
}

}  // namespace

TEST_CASE("golden convergents are ratios of Fibonacci numbers") {
  auto conv = convergents(golden_spec(), 30);
  REQUIRE(conv.size() == 31);
  mpz_class a = 1, b = 1;
  for (std::int64_t n = 0; n <= 30; ++n) {
    CHECK(eval_finite(golden_spec(), n) == mpq_class(b, a));
    const auto& cv = conv[static_cast<std::size_t>(n)];
    CHECK(mpq_class(cv.A / cv.B) == mpq_class(b, a));
    mpz_class c = a + b;
    a = b;
    b = c;
  }
}

TEST_CASE("golden fraction converges to phi") {
  CFSpec<BigReal> spec{BigReal(1L, kCtx), [](std::int64_t) { return Term<BigReal>{BigReal(1L, kCtx), BigReal(1L, kCtx)}; },
                       std::nullopt};
  CFResult r = eval_infinite(spec, kCtx);
  CHECK(r.converged());
  CHECK(abs(r.value.real() - golden_phi(kCtx)) < kCtx.tol() * 4);
}

TEST_CASE("zero denominator reports its depth") {
  CFSpec<mpq_class> spec{0, [](std::int64_t k) { return Term<mpq_class>{k == 2 ? -1 : 1, 1}; }, std::nullopt};
  try {
    (void)eval_finite(spec, 2);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.depth() == 1);
  }
  CHECK_THROWS_AS((void)eval_finite(spec, -1), DomainError);
}

TEST_CASE("elliptic constant fractions cycle with the predicted period") {
  // K(a/1) is the orbit of z -> a/(1+z); it has exact period n when -1/a = 4 cos^2(pi/n).
  for (long n : {3L, 4L, 5L}) {
    const BigReal c = cos(pi(kCtx) / n);
    const BigReal a = -1 / (4 * c * c);
    CFResult r = eval_infinite(constant_spec(a, kCtx), kCtx);
    CHECK(r.status == CFStatus::LimitCycle);
    CHECK(r.period == n);
  }
}

TEST_CASE("an irrational rotation hits the iteration cap") {
  const PrecisionContext ctx = kCtx.with_max_iter(2000);
  CFResult r = eval_infinite(constant_spec(BigReal(mpq_class(-3, 10), ctx), ctx), ctx);
  CHECK(r.status == CFStatus::MaxIterations);
  CHECK(r.iterations == 2000);
}

TEST_CASE("hyperbolic constant fraction converges to the attracting fixed point") {
  // z = a/(1+z): z = (-1 + sqrt(1 + 4a)) / 2
  const BigReal a(2L, kCtx);
  CFResult r = eval_infinite(constant_spec(a, kCtx), kCtx);
  CHECK(r.converged());
  CHECK(abs(r.value.real() - BigReal(1L, kCtx)) < kCtx.tol() * 4);
}

TEST_CASE("R by continued fraction matches the product quotient") {
  for (const char* qs : {"0.05", "0.3", "0.7", "-0.4", "-0.05"}) {
    const BigReal q = BigReal::parse(qs, kCtx.bits());
    CHECK(abs(rr_real(q, kCtx) - rr_products(q, kCtx)) < verification_tol(kCtx));
  }
}

TEST_CASE("R(1) is 1/phi and R(-1) is -phi") {
  CHECK(abs(rr_real(BigReal(1L, kCtx), kCtx) - (golden_phi(kCtx) - 1)) < verification_tol(kCtx));
  CHECK(abs(rr_real(BigReal(-1L, kCtx), kCtx) + golden_phi(kCtx)) < verification_tol(kCtx));
}

TEST_CASE("cf2 satisfies the double factorial companion sum") {
  BigReal sum(0L, kCtx), term(1L, kCtx);
  for (long n = 0; n < 200; ++n) {
    term /= 2 * n + 1;
    sum += term;
  }
  CFResult r = eval_infinite(cf2_spec(kCtx), kCtx);
  REQUIRE(r.converged());
  const BigReal target = sqrt(pi(kCtx) * euler_e(kCtx) / 2);
  CHECK(abs(sum + r.value.real() - target) < verification_tol(kCtx));
}

TEST_CASE("legendre symbol mod 5 agrees with Euler's criterion") {
  for (long n = -20; n <= 60; ++n) {
    const long m = ((n % 5) + 5) % 5;
    const long e = (m * m) % 5;  // n^2 = n^((5-1)/2) mod 5
    const int expected = m == 0 ? 0 : (e == 1 ? 1 : -1);
    CHECK(legendre5(n) == expected);
  }
}

TEST_CASE("Schur classification is consistent") {
  for (long n = 1; n <= 500; ++n) {
    SchurClassification s = schur_classify(n);
    CHECK(s.n == n);
    if (n % 5 == 0) {
      CHECK(s.diverges);
      continue;
    }
    CHECK(s.lambda == legendre5(n));
    CHECK(s.rho == n % 5);
    CHECK(5 * s.exponent + 1 == s.lambda * s.rho * n);
  }
}

TEST_CASE("unit roots are exact at quarter turns") {
  BigComplex i = unit_root_power(4, 1, kCtx);
  CHECK(i.real().is_zero());
  CHECK(i.imag() == 1);
  CHECK(unit_root_power(12, 6, kCtx).real() == -1);
  BigComplex w = unit_root_power(7, 3, kCtx);
  CHECK(abs(pow(w, 7) - BigComplex(1L, kCtx.bits())) < kCtx.tol() * 16);
}

TEST_CASE("R at roots of unity: fraction agrees with Schur's value") {
  for (long n : {2L, 3L, 4L, 6L, 7L, 9L, 12L}) {
    for (long j = 1; j < n; ++j) {
      if (std::gcd(j, n) != 1) continue;
      CFResult r = eval_infinite(rr_root_of_unity_spec(n, j, RootMode::Principal, kCtx), kCtx);
      REQUIRE(r.converged());
      BigComplex s = rr_at_root_of_unity(n, j, RootMode::Principal, kCtx);
      CHECK(abs(r.value - s) < BigReal(mpq_class(1, 1000), kCtx));
    }
  }
}

TEST_CASE("roots of unity of order divisible by 5 diverge") {
  CHECK_THROWS_AS((void)rr_at_root_of_unity(5, 1, RootMode::Principal, kCtx), DivergenceError);
  CHECK_THROWS_AS((void)rr_at_root_of_unity(10, 3, RootMode::Principal, kCtx), DivergenceError);
  CHECK_THROWS_AS((void)rr_at_root_of_unity(6, 2, RootMode::Principal, kCtx), DomainError);
  const PrecisionContext short_ctx = kCtx.with_max_iter(20000);
  CHECK_FALSE(eval_infinite(rr_root_of_unity_spec(5, 1, RootMode::Principal, short_ctx), short_ctx).converged());
}
