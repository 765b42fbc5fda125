#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <climits>
#include <random>

#include "reeskit/errors.hpp"
#include "reeskit/parse.hpp"
#include "reeskit/poly.hpp"
#include "reeskit/rational.hpp"
#include "support.hpp"

using namespace reeskit;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("12345678901234567890123/1").str() == "12345678901234567890123");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("parse_poly reads the grammar") {
  auto R = make_ring({"x", "y", "z"});
  Poly f = parse_poly("x^2*y - 3/2*z", R);
  REQUIRE(f.size() == 2);
  CHECK(f.terms()[0].mono == Monomial{2, 1, 0});
  CHECK(f.terms()[0].coeff == Rational(1));
  CHECK(f.terms()[1].mono == Monomial{0, 0, 1});
  CHECK(f.terms()[1].coeff == Rational(-3, 2));
  CHECK(f.str() == "x^2*y - 3/2*z");

  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("  x *  y ", R) == parse_poly("x*y", R));
  CHECK(parse_poly("2x y^2", R) == parse_poly("2*x*y^2", R));
  CHECK(parse_poly("-x + x", R).is_zero());
  CHECK(parse_poly("x^0", R) == Poly::constant(R, 1));
}

TEST_CASE("parse_poly rejects malformed input with a position") {
  auto R = make_ring({"x", "y"});
  CHECK_THROWS_WITH_AS(parse_poly("x^(-1)", R), doctest::Contains("negative exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("x^1.5", R), doctest::Contains("exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("x^3/2", R), doctest::Contains("exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("w + 1", R), doctest::Contains("unknown variable 'w'"), ParseError);
  CHECK_THROWS_AS(parse_poly("+x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", R), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x # y", R), ParseError);
  try {
    parse_poly("x + y + q", R);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(parse_poly_list("x, y^(-2)", R), ParseError);
  CHECK_THROWS_AS(parse_var_list("x,1y"), ParseError);
  CHECK(parse_var_list("x, y ,z") == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("multiplication and powers") {
  auto R = make_ring({"x", "y"});
  auto P = [&](const char* s) { return parse_poly(s, R); };
  CHECK(P("x+y") * P("x-y") == P("x^2 - y^2"));
  CHECK((P("x+y") * Poly(R)).is_zero());
  CHECK(pow(P("x+y"), 2) == P("x^2 + 2*x*y + y^2"));
  CHECK(pow(Poly(R), 0) == P("1"));
  CHECK(pow(P("x+y"), 0) == P("1"));
  CHECK(pow(P("x+1"), 2) == P("x^2 + 2*x + 1"));
  CHECK(pow(P("x"), 5).terms()[0].mono == Monomial{5, 0});
  CHECK(pow(P("x"), 5).total_degree() == 5);
  CHECK((P("x^2+y") * P("x*y-3")).total_degree() == 4);
  CHECK(divide_exact(P("x^2 - y^2"), P("x+y")) == P("x - y"));
  CHECK_FALSE(divide_exact(P("x^2 + y^2"), P("x+y")).has_value());
}

TEST_CASE("exponent overflow and ring mismatch are reported") {
  const Monomial big{INT32_MAX, 0};
  const Monomial x{1, 0};
  CHECK_THROWS_AS(big * x, ResourceCapExceeded);
  auto R = make_ring({"x", "y"});
  auto S = make_ring({"x", "z"});
  CHECK_THROWS_AS(parse_poly("x", R) * parse_poly("x", S), ContextMismatch);
  CHECK_THROWS_AS(parse_poly("x", R) + parse_poly("z", S), ContextMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  auto R = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = testing::random_poly(R, rng), b = testing::random_poly(R, rng), c = testing::random_poly(R, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Poly::constant(R, 1) == a);
  }
}

TEST_CASE("canonical form: equal term maps iff equal polynomials") {
  auto R = make_ring({"x", "y"});
  Poly f = Poly::from_terms(R, {{Monomial{1, 0}, 1}, {Monomial{0, 1}, 2}, {Monomial{1, 0}, -1}, {Monomial{0, 0}, 0}});
  CHECK(f == parse_poly("2*y", R));
  CHECK(f.size() == 1);
  CHECK_FALSE(parse_poly("x", R) == parse_poly("y", R));
}

namespace {

void check_order_axioms(const MonomialOrder& ord, std::size_t nvars, std::mt19937& rng) {
  const Monomial one(nvars);
  for (int i = 0; i < 1000; ++i) {
    Monomial a = testing::random_monomial(nvars, rng), b = testing::random_monomial(nvars, rng);
    Monomial w = testing::random_monomial(nvars, rng, 3);
    const int ab = ord.compare(a, b);
    CHECK(ab == -ord.compare(b, a));
    CHECK((ab == 0) == (a == b));
    if (ab < 0) CHECK(ord.compare(a * w, b * w) < 0);
    CHECK(ord.compare(one, a) <= 0);
    if (i % 4 == 0) {
      Monomial c = testing::random_monomial(nvars, rng);
      if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
      if (ord.less(b, a) && ord.less(a, c)) CHECK(ord.less(b, c));
    }
  }
}

}  // namespace

TEST_CASE("monomial orders are multiplicative well-orders") {
  std::mt19937 rng(11);
  check_order_axioms(MonomialOrder::lex(), 4, rng);
  check_order_axioms(MonomialOrder::degrevlex(), 4, rng);
  check_order_axioms(MonomialOrder::elimination(1), 4, rng);
  check_order_axioms(MonomialOrder::elimination(2, MonomialOrder::lex()), 4, rng);
  check_order_axioms(MonomialOrder::tgraded(2), 4, rng);
  check_order_axioms(MonomialOrder::tgraded(1, MonomialOrder::lex()), 4, rng);
}

TEST_CASE("block orders: elimination and T-grading") {
  std::mt19937 rng(5);
  const auto elim = MonomialOrder::elimination(2);
  const auto tg = MonomialOrder::tgraded(2);
  for (int i = 0; i < 500; ++i) {
    Monomial a = testing::random_monomial(4, rng), b = testing::random_monomial(4, rng);
    if (a[0] + a[1] > 0 && b[0] + b[1] == 0) CHECK(elim.compare(a, b) > 0);
    const long ta = a.degree_in(2, 4), tb = b.degree_in(2, 4);
    if (ta != tb) CHECK((tg.compare(a, b) > 0) == (ta > tb));
  }
  CHECK(MonomialOrder::lex().compare(Monomial{1, 0}, Monomial{0, 5}) > 0);
  CHECK(MonomialOrder::degrevlex().compare(Monomial{1, 0}, Monomial{0, 5}) < 0);
  CHECK(MonomialOrder::degrevlex().compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) < 0);
  CHECK(MonomialOrder::from_name("grevlex") == MonomialOrder::degrevlex());
  CHECK_THROWS_AS(MonomialOrder::from_name("deglex"), Error);
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(3);
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
    auto R = make_ring({"x", "y", "z1"}, ord);
    for (int i = 0; i < 200; ++i) {
      Poly f = testing::random_poly(R, rng);
      const std::string s = f.str();
      CHECK(parse_poly(s, R) == f);
      CHECK(parse_poly(s, R).str() == s);
    }
  }
  auto R = make_ring({"x", "y"});
  CHECK(parse_poly("-x + 1", R).str() == "-x + 1");
  CHECK(parse_poly("1/3*x^2 - y", R).str() == "1/3*x^2 - y");
  CHECK(parse_poly("-1", R).str() == "-1");
  CHECK(Poly(R).str() == "0");
}
