#include "rrcf/closed_form.hpp"

#include <cctype>
#include <stdexcept>

#include "rrcf/errors.hpp"

namespace rrcf {

struct ClosedForm::Node {
  Kind kind = Kind::Integer;
  mpz_class value;
  long k = 0;
  RootMode mode = RootMode::Principal;
  mpq_class exponent;
  std::vector<ClosedForm> kids;
};

ClosedForm ClosedForm::make(Node node) { return ClosedForm(std::make_shared<const Node>(std::move(node))); }

ClosedForm::ClosedForm(long value) : ClosedForm(integer(mpz_class(value))) {}

ClosedForm ClosedForm::integer(const mpz_class& value) {
  Node n;
  n.value = value;
  return make(std::move(n));
}

ClosedForm ClosedForm::phi() { return make(Node{Kind::Phi, 0, 0, RootMode::Principal, 0, {}}); }
ClosedForm ClosedForm::pi() { return make(Node{Kind::Pi, 0, 0, RootMode::Principal, 0, {}}); }
ClosedForm ClosedForm::e() { return make(Node{Kind::E, 0, 0, RootMode::Principal, 0, {}}); }

ClosedForm ClosedForm::root(long k, const ClosedForm& x, RootMode mode) {
  if (k < 1) throw DomainError("root index must be positive");
  if (mode == RootMode::RealOdd && k % 2 == 0) throw DomainError("rroot needs an odd index");
  return make(Node{Kind::Root, 0, k, mode, 0, {x}});
}

ClosedForm ClosedForm::pow(const ClosedForm& x, const mpq_class& exponent) {
  mpq_class e = exponent;
  e.canonicalize();
  return make(Node{Kind::Pow, 0, 0, RootMode::Principal, e, {x}});
}

ClosedForm ClosedForm::exp(const ClosedForm& x) { return make(Node{Kind::Exp, 0, 0, RootMode::Principal, 0, {x}}); }

ClosedForm::Kind ClosedForm::kind() const { return node_->kind; }

namespace {

// Flatten nested sums/products so a + b + c builds +(a,b,c).
std::vector<ClosedForm> gather(ClosedForm::Kind kind, const ClosedForm& a, const ClosedForm& b,
                               const std::vector<ClosedForm>* a_kids, const std::vector<ClosedForm>* b_kids) {
  std::vector<ClosedForm> out;
  if (a.kind() == kind && a_kids) {
    out = *a_kids;
  } else {
    out.push_back(a);
  }
  if (b.kind() == kind && b_kids) {
    out.insert(out.end(), b_kids->begin(), b_kids->end());
  } else {
    out.push_back(b);
  }
  return out;
}

}  // namespace

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  return ClosedForm::make(ClosedForm::Node{
      ClosedForm::Kind::Add, 0, 0, RootMode::Principal, 0,
      gather(ClosedForm::Kind::Add, a, b, &a.node_->kids, &b.node_->kids)});
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  return ClosedForm::make(ClosedForm::Node{
      ClosedForm::Kind::Mul, 0, 0, RootMode::Principal, 0,
      gather(ClosedForm::Kind::Mul, a, b, &a.node_->kids, &b.node_->kids)});
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
  return ClosedForm::make(ClosedForm::Node{ClosedForm::Kind::Sub, 0, 0, RootMode::Principal, 0, {a, b}});
}

ClosedForm operator/(const ClosedForm& a, const ClosedForm& b) {
  return ClosedForm::make(ClosedForm::Node{ClosedForm::Kind::Div, 0, 0, RootMode::Principal, 0, {a, b}});
}

ClosedForm operator-(const ClosedForm& a) {
  return ClosedForm::make(ClosedForm::Node{ClosedForm::Kind::Neg, 0, 0, RootMode::Principal, 0, {a}});
}

bool operator==(const ClosedForm& a, const ClosedForm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.kids.size() != y.kids.size()) return false;
  switch (x.kind) {
    case ClosedForm::Kind::Integer:
      if (x.value != y.value) return false;
      break;
    case ClosedForm::Kind::Root:
      if (x.k != y.k || x.mode != y.mode) return false;
      break;
    case ClosedForm::Kind::Pow:
      if (x.exponent != y.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

std::string ClosedForm::to_string() const {
  const Node& n = *node_;
  auto call = [&](const std::string& head, const std::vector<std::string>& args) {
    std::string out = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
    return out + ")";
  };
  std::vector<std::string> args;
  for (const auto& kid : n.kids) args.push_back(kid.to_string());
  switch (n.kind) {
    case Kind::Integer:
      return n.value.get_str();
    case Kind::Phi:
      return "phi";
    case Kind::Pi:
      return "pi";
    case Kind::E:
      return "e";
    case Kind::Add:
      return call("+", args);
    case Kind::Mul:
      return call("*", args);
    case Kind::Sub:
    case Kind::Neg:
      return call("-", args);
    case Kind::Div:
      return call("/", args);
    case Kind::Root:
      return call(n.mode == RootMode::RealOdd ? "rroot" : "root", {std::to_string(n.k), args[0]});
    case Kind::Pow:
      return call("pow", {args[0], n.exponent.get_str()});
    case Kind::Exp:
      return call("exp", args);
  }
  return "?";
}

BigReal ClosedForm::evaluate(const PrecisionContext& ctx) const {
  const PrecisionContext work(ctx.bits() + 32, ctx.guard_bits(), ctx.max_iter());
  const BigReal r = eval_at(work);
  BigReal out(ctx.bits());
  mpfr_set(out.get(), r.get(), MPFR_RNDN);
  return out;
}

BigReal ClosedForm::eval_at(const PrecisionContext& work) const {
  const Node& n = *node_;
  auto kid = [&](std::size_t i) { return n.kids[i].eval_at(work); };
  BigReal r(work.bits());
  switch (n.kind) {
    case Kind::Integer:
      r = BigReal(n.value, work.bits());
      break;
    case Kind::Phi:
      r = golden_phi(work);
      break;
    case Kind::Pi:
      r = rrcf::pi(work);
      break;
    case Kind::E:
      r = euler_e(work);
      break;
    case Kind::Add:
      r = kid(0);
      for (std::size_t i = 1; i < n.kids.size(); ++i) r = r + kid(i);
      break;
    case Kind::Mul:
      r = kid(0);
      for (std::size_t i = 1; i < n.kids.size(); ++i) r = r * kid(i);
      break;
    case Kind::Sub:
      r = kid(0) - kid(1);
      break;
    case Kind::Neg:
      r = -kid(0);
      break;
    case Kind::Div: {
      const BigReal d = kid(1);
      if (d.is_zero()) throw DomainError("division by zero in " + to_string());
      r = kid(0) / d;
      break;
    }
    case Kind::Root:
      r = rrcf::root(kid(0), n.k, n.mode);
      break;
    case Kind::Pow: {
      const BigReal x = kid(0);
      const mpz_class& den = n.exponent.get_den();
      if (!den.fits_slong_p() || !n.exponent.get_num().fits_slong_p()) {
        throw DomainError("exponent too large in " + to_string());
      }
      const long p = n.exponent.get_num().get_si();
      if (den == 1) {
        if (x.is_zero() && p < 0) throw DomainError("zero to a negative power in " + to_string());
        r = rrcf::pow(x, p);
      } else {
        if (!(x > 0)) throw DomainError("fractional power of a nonpositive number in " + to_string());
        r = rrcf::pow(rrcf::root(x, den.get_si()), p);
      }
      break;
    }
    case Kind::Exp:
      r = rrcf::exp(kid(0));
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ClosedForm parse_all() {
    ClosedForm f = expr();
    skip_space();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("closed form: " + why + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<ClosedForm> args() {
    expect('(');
    std::vector<ClosedForm> out{expr()};
    skip_space();
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
      skip_space();
    }
    expect(')');
    return out;
  }

  mpz_class integer_token() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  long small_integer() {
    const mpz_class v = integer_token();
    if (!v.fits_slong_p()) fail("integer out of range");
    return v.get_si();
  }

  ClosedForm expr() {
    skip_space();
    const char c = peek();
    if (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1)))) return ClosedForm::integer(integer_token());
    if (std::isdigit(static_cast<unsigned char>(c))) return ClosedForm::integer(integer_token());
    if (c == '+' || c == '*' || c == '-' || c == '/') {
      ++pos_;
      const std::vector<ClosedForm> a = args();
      switch (c) {
        case '+':
        case '*': {
          if (a.size() < 2) fail(std::string("'") + c + "' needs at least two arguments");
          ClosedForm acc = a[0];
          for (std::size_t i = 1; i < a.size(); ++i) acc = c == '+' ? acc + a[i] : acc * a[i];
          return acc;
        }
        case '-':
          if (a.size() == 1) return -a[0];
          if (a.size() == 2) return a[0] - a[1];
          fail("'-' takes one or two arguments");
        default:
          if (a.size() != 2) fail("'/' takes two arguments");
          return a[0] / a[1];
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "phi") return ClosedForm::phi();
      if (name == "pi") return ClosedForm::pi();
      if (name == "e") return ClosedForm::e();
      if (name == "exp") {
        const std::vector<ClosedForm> a = args();
        if (a.size() != 1) fail("exp takes one argument");
        return ClosedForm::exp(a[0]);
      }
      if (name == "root" || name == "rroot") {
        expect('(');
        const long k = small_integer();
        expect(',');
        const ClosedForm x = expr();
        expect(')');
        return ClosedForm::root(k, x, name == "rroot" ? RootMode::RealOdd : RootMode::Principal);
      }
      if (name == "pow") {
        expect('(');
        const ClosedForm x = expr();
        expect(',');
        const mpz_class num = integer_token();
        mpz_class den = 1;
        skip_space();
        if (peek() == '/') {
          ++pos_;
          den = integer_token();
          if (den <= 0) fail("exponent denominator must be positive");
        }
        expect(')');
        return ClosedForm::pow(x, mpq_class(num, den));
      }
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm ClosedForm::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace rrcf
