#include "doctest.h"

#include "rrcf/continued_fraction.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/qseries.hpp"

using namespace rrcf;

namespace {

const PrecisionContext kCtx;

BigReal q_of(const char* s) { return BigReal::parse(s, kCtx.bits()); }

bool close(const BigReal& a, const BigReal& b) { return abs(a - b) < verification_tol(kCtx); }

}  // namespace

TEST_CASE("exact q-Pochhammer") {
  CHECK(pochhammer(mpq_class(1, 2), mpq_class(1, 3), 0) == 1);
  CHECK(pochhammer(mpq_class(1, 2), mpq_class(1, 3), 3) ==
        mpq_class(1, 2) * (1 - mpq_class(1, 6)) * (1 - mpq_class(1, 18)));
  const BigReal a(mpq_class(1, 2), kCtx), q(mpq_class(1, 3), kCtx);
  CHECK(close(pochhammer(a, q, 3), BigReal(pochhammer(mpq_class(1, 2), mpq_class(1, 3), 3), kCtx)));
}

TEST_CASE("infinite q-Pochhammer reaches its tail") {
  const BigReal q = q_of("0.5");
  CHECK(close(pochhammer_inf(q, q, kCtx), pochhammer(q, q, 600)));
}

TEST_CASE("G and H: sum side equals product side") {
  for (const char* qs : {"0.01", "0.2", "0.5", "-0.6", "0.85"}) {
    const BigReal q = q_of(qs);
    CHECK(close(rr_G(q, kCtx, Backend::Sum), rr_G(q, kCtx, Backend::Product)));
    CHECK(close(rr_H(q, kCtx, Backend::Sum), rr_H(q, kCtx, Backend::Product)));
  }
}

TEST_CASE("complex nome: sum side equals product side") {
  const BigComplex q(q_of("0.3"), q_of("0.4"));
  CHECK(abs(rr_G(q, kCtx, Backend::Sum) - rr_G(q, kCtx, Backend::Product)) < verification_tol(kCtx));
  CHECK(abs(rr_H(q, kCtx, Backend::Sum) - rr_H(q, kCtx, Backend::Product)) < verification_tol(kCtx));
}

TEST_CASE("product quotient equals the continued fraction") {
  for (const char* qs : {"0.1", "0.45", "-0.3"}) {
    const BigReal q = q_of(qs);
    CHECK(close(rr_product(q, kCtx), rr_real(q, kCtx)));
  }
}

TEST_CASE("S(q) is -R(-q) with the real fifth root") {
  for (const char* qs : {"0.05", "0.5", "0.9"}) {
    const BigReal q = q_of(qs);
    CHECK(close(S(q, kCtx), -rr_real(-q, kCtx)));
  }
  CHECK_THROWS_AS((void)S(BigReal(0L, kCtx), kCtx), DomainError);
}

TEST_CASE("Jacobi triple product for phi") {
  // phi(q) = (q^2; q^2)_inf (-q; q^2)_inf^2
  for (const char* qs : {"0.1", "0.5", "-0.7"}) {
    const BigReal q = q_of(qs);
    const BigReal q2 = q * q;
    BigReal ch(1L, kCtx), e(1L, kCtx), qk = q;
    for (int k = 0; k < 2000; ++k, qk *= q2) {
      ch *= 1 + qk;
      e *= 1 - qk * q;
    }
    CHECK(close(chi(q, kCtx), ch));
    CHECK(close(theta_phi(q, kCtx), e * ch * ch));
  }
}

TEST_CASE("finite forms at small n") {
  const mpq_class q(1, 3), a(2, 7);
  CHECK(finite_mu(0, a, q) == 1);
  CHECK(finite_mu(1, a, q) == 1 + a * q);
  CHECK(finite_nu(0, a, q) == 1);
  CHECK(finite_nu(1, a, q) == 1);
  // n = 2: k = 0 gives 1, k = 1 gives a q^2
  CHECK(finite_nu(2, a, q) == 1 + a * q * q);
}

TEST_CASE("series: G and H agree on both backends") {
  CHECK(series_G(200, Backend::Sum) == series_G(200, Backend::Product));
  CHECK(series_H(200, Backend::Sum) == series_H(200, Backend::Product));
}

TEST_CASE("series: leading coefficients by hand") {
  // H/G to q^5 from (1-q)(1-q^4) / ((1-q^2)(1-q^3))
  IntegerSeries r = series_R(30);
  CHECK(r.valuation() == 1);
  const long expected[] = {1, -1, 1, 0, -1, 1};
  for (int k = 0; k < 6; ++k) CHECK(r.coeff(1 + 5 * k) == expected[k]);
  for (int e = 0; e < 30; ++e) {
    if (e % 5 != 1) CHECK(r.coeff(e) == 0);
  }
}

TEST_CASE("series: Euler's pentagonal number theorem") {
  const int order = 300;
  std::vector<long> expected(order, 0);
  for (long k = -20; k <= 20; ++k) {
    const long g = k * (3 * k - 1) / 2;
    if (g >= 0 && g < order) expected[static_cast<std::size_t>(g)] = (k % 2 == 0) ? 1 : -1;
  }
  IntegerSeries e = series_euler(order);
  for (int n = 0; n < order; ++n) CHECK(e.coeff(n) == expected[static_cast<std::size_t>(n)]);
  IntegerSeries e3 = series_euler(order, 3);
  CHECK(e3 == e.substituted(3).truncated(order));
}

TEST_CASE("series: theta counts signed square roots") {
  IntegerSeries t = series_theta(120);
  for (int n = 0; n < 120; ++n) {
    int r = 0;
    for (int m = -11; m <= 11; ++m) r += (m * m == n);
    CHECK(t.coeff(n) == r);
  }
}

TEST_CASE("QPoint") {
  QPoint d = QPoint::decimal("0.05");
  REQUIRE(d.exact().has_value());
  CHECK(*d.exact() == mpq_class(1, 20));
  CHECK_THROWS_AS((void)QPoint::decimal("abc"), DomainError);
  QPoint e = QPoint::exp_pi(2);
  CHECK(close(e.at(kCtx), exp(-2 * pi(kCtx))));
  CHECK(close(e.power(3).at(kCtx), exp(-6 * pi(kCtx))));
  QPoint r = QPoint::exp_pi(1, mpq_class(5, 3));
  CHECK(close(r.at(kCtx), exp(-pi(kCtx) * sqrt(BigReal(mpq_class(5, 3), kCtx)))));
  CHECK(d.power(2).exact() == mpq_class(1, 400));
}
