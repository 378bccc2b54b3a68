#include "doctest.h"

#include <stdexcept>

#include "rrcf/closed_form.hpp"

using namespace rrcf;

namespace {

const PrecisionContext kCtx;

bool close(const BigReal& a, const BigReal& b) { return abs(a - b) < kCtx.tol() * 16; }

}  // namespace

TEST_CASE("evaluation of literals and operators") {
  CHECK(ClosedForm(7).evaluate(kCtx) == 7);
  CHECK(close(ClosedForm::phi().evaluate(kCtx), golden_phi(kCtx)));
  CHECK(close(ClosedForm::pi().evaluate(kCtx), pi(kCtx)));
  CHECK(close(ClosedForm::e().evaluate(kCtx), euler_e(kCtx)));
  CHECK(close((ClosedForm(1) / ClosedForm(3)).evaluate(kCtx), BigReal(mpq_class(1, 3), kCtx)));
  CHECK((ClosedForm(5) - ClosedForm(8)).evaluate(kCtx) == -3);
  CHECK((-ClosedForm(2) * ClosedForm(3) + ClosedForm(1)).evaluate(kCtx) == -5);
}

TEST_CASE("roots and powers") {
  CHECK(close(ClosedForm::sqrt(5).evaluate(kCtx), sqrt5(kCtx)));
  CHECK(close(ClosedForm::root(5, -32, RootMode::RealOdd).evaluate(kCtx), BigReal(-2L, kCtx)));
  CHECK(close(ClosedForm::pow(8, mpq_class(2, 3)).evaluate(kCtx), BigReal(4L, kCtx)));
  CHECK(close(ClosedForm::pow(-2, mpq_class(3)).evaluate(kCtx), BigReal(-8L, kCtx)));
  CHECK(close(ClosedForm::exp(ClosedForm(1)).evaluate(kCtx), euler_e(kCtx)));
}

TEST_CASE("golden ratio identities hold in closed form") {
  ClosedForm phi = ClosedForm::phi();
  CHECK(close((phi * phi - phi).evaluate(kCtx), BigReal(1L, kCtx)));
  CHECK(close(((ClosedForm::sqrt(5) + 1) / 2).evaluate(kCtx), phi.evaluate(kCtx)));
}

TEST_CASE("parse and to_string round trip") {
  const char* texts[] = {"phi", "pi", "e", "42", "-(3)", "+(1, 2, 3)", "*(phi, root(5, 2))", "/(1, -(7, phi))",
                         "rroot(5, -(3))", "pow(2, 3/4)", "exp(*(-(2), pi))"};
  for (const char* t : texts) {
    ClosedForm f = ClosedForm::parse(t);
    ClosedForm g = ClosedForm::parse(f.to_string());
    CHECK(f == g);
    CHECK(g.to_string() == f.to_string());
    CHECK(f.evaluate(kCtx) == g.evaluate(kCtx));
  }
}

TEST_CASE("parse builds the expected tree") {
  CHECK(ClosedForm::parse("+(1, phi)") == ClosedForm(1) + ClosedForm::phi());
  CHECK(ClosedForm::parse("root(2, 5)") == ClosedForm::sqrt(5));
  CHECK(ClosedForm::parse(" *( 2 ,3 ) ").kind() == ClosedForm::Kind::Mul);
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "phi(", "+(1,", "root(0, 2)", "foo", "1 2", "pow(2, x)", "/(1)", "root(2, 3) extra"}) {
    CHECK_THROWS_AS((void)ClosedForm::parse(bad), std::exception);
  }
}

TEST_CASE("evaluation is precision independent") {
  ClosedForm f = ClosedForm::parse("*(root(5, phi), exp(/(pi, 7)))");
  const PrecisionContext hi(1024);
  const BigReal lo_v = f.evaluate(kCtx), hi_v = f.evaluate(hi);
  CHECK(abs(lo_v - hi_v) < kCtx.tol() * 16);
}
