#include <doctest.h>

#include <random>

#include "exactalg/polymatrix.hpp"

using namespace adeflat;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), num(-9, 9), den(1, 6);
  MultiPoly p(vars);
  for (int k = 0; k < terms; ++k) {
    Exponent ex(vars.size());
    for (auto& v : ex) v = e(rng);
    p.add_term(ex, make_rational(num(rng), den(rng)));
  }
  return p;
}

std::map<std::string, Rational> random_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::map<std::string, Rational> pt;
  for (const auto& v : vars) pt[v] = make_rational(num(rng), den(rng));
  return pt;
}

}  // namespace

TEST_CASE("canonical text is fixed and round-trips") {
  const MultiPoly p = MultiPoly::parse("5 + x*y*(-1/3) + 2*x^2");
  CHECK(p.to_string() == "2*x^2 - 1/3*x*y + 5");
  CHECK(MultiPoly::parse(p.to_string()).to_string() == p.to_string());
  CHECK(MultiPoly::parse("0").is_zero());

  std::mt19937_64 rng(11);
  const std::vector<std::string> vars = {"x", "y", "s00", "s10", "t20"};
  for (int k = 0; k < 200; ++k) {
    const MultiPoly q = random_poly(rng, vars, 1 + k % 9, 4);
    const std::string text = q.to_string();
    const MultiPoly back = MultiPoly::parse(text, vars);
    CHECK(back == q);
    CHECK(back.to_string() == text);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(MultiPoly::parse("x^"), AlgebraError);
  CHECK_THROWS_AS(MultiPoly::parse("2**x"), AlgebraError);
  CHECK_THROWS_AS(MultiPoly::parse("1/0"), std::exception);
}

TEST_CASE("products agree with evaluation at random points") {
  std::mt19937_64 rng(3);
  std::vector<std::string> wide;
  for (int i = 0; i < 15; ++i) wide.push_back("v" + std::to_string(i));
  for (const auto& vars : {std::vector<std::string>{"x", "y", "t"}, wide}) {
    for (int k = 0; k < 20; ++k) {
      const MultiPoly a = random_poly(rng, vars, 6, 3), b = random_poly(rng, vars, 7, 3);
      const auto pt = random_point(rng, vars);
      CHECK((a * b).evaluate_exact(pt) == a.evaluate_exact(pt) * b.evaluate_exact(pt));
      CHECK((a + b).evaluate_exact(pt) == a.evaluate_exact(pt) + b.evaluate_exact(pt));
    }
  }
  const MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
  CHECK(((x + y) * (x - y)).to_string() == "x^2 - y^2");
  CHECK((x + y).pow(3).to_string() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
}

TEST_CASE("large exponents take the general product path") {
  const MultiPoly a = MultiPoly::parse("x^200 + y");
  const MultiPoly b = MultiPoly::parse("x^100 - y");
  CHECK((a * b).to_string() == "x^300 - x^200*y + x^100*y - y^2");
}

TEST_CASE("exact division") {
  const auto q = exact_divide(MultiPoly::parse("x^2 - y^2"), MultiPoly::parse("x - y"));
  REQUIRE(q.has_value());
  CHECK(q->embedded({"x", "y"}) == MultiPoly::parse("x + y", {"x", "y"}));
  CHECK_FALSE(exact_divide(MultiPoly::parse("x"), MultiPoly::parse("y")).has_value());
}

TEST_CASE("derivative, substitution and weighted degree") {
  const MultiPoly p = MultiPoly::parse("x^3 + y^2 + s10*x + s00");
  CHECK(p.derivative("x").to_string() == "3*x^2 + s10");
  CHECK(p.substitute("s10", MultiPoly::parse("-3")).evaluate_exact({{"x", 1}, {"y", 0}, {"s00", 2}}) == 0);
  const auto d = p.weighted_degree({{"x", Rational(1, 3)}, {"y", Rational(1, 2)}, {"s10", Rational(2, 3)}, {"s00", 1}});
  REQUIRE(d.has_value());
  CHECK(*d == 1);
  CHECK_FALSE(MultiPoly::parse("x + y").weighted_degree({{"x", 1}, {"y", 2}}).has_value());
}

TEST_CASE("resultant and discriminant oracles") {
  const MultiPoly r = resultant(MultiPoly::parse("x^2 - a"), MultiPoly::parse("x - b"), "x");
  CHECK(r.compacted() == MultiPoly::parse("b^2 - a").compacted());
  const MultiPoly disc = monic_discriminant(MultiPoly::parse("x^3 + p*x + q"), "x");
  CHECK(disc.compacted() == MultiPoly::parse("-4*p^3 - 27*q^2").compacted());
}

TEST_CASE("characteristic polynomial matches Bareiss determinant") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vars = {"a", "b"};
  std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
  for (auto& row : m)
    for (auto& e : row) e = random_poly(rng, vars, 3, 2);
  const auto c = charpoly_coefficients(m);
  REQUIRE(c.size() == 4);
  CHECK(c[3] == MultiPoly(vars, 1));
  auto neg = m;
  for (auto& row : neg)
    for (auto& e : row) e = -e;
  // c_0 = det(-m)
  CHECK((c[0] - bareiss_determinant(neg)).is_zero());
  CHECK((c[2] + m[0][0] + m[1][1] + m[2][2]).is_zero());
}

TEST_CASE("rational linear algebra") {
  std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}};
  CHECK(rational_rank(m) == 1);
  const auto ns = rational_nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(rational_determinant({{2, 1}, {Rational(1, 2), 3}}) == Rational(11, 2));
}

TEST_CASE("rational functions normalize") {
  const RatFunc a(MultiPoly::parse("1"), MultiPoly::parse("x"));
  const RatFunc b(MultiPoly::parse("1"), MultiPoly::parse("y"));
  const RatFunc sum = (a + b).reduced();
  CHECK(sum == RatFunc(MultiPoly::parse("x + y"), MultiPoly::parse("x*y")));
  CHECK((sum * RatFunc(MultiPoly::parse("x*y"))).reduced().is_polynomial());
  const PolyMatrix m = PolyMatrix::from_polys({{MultiPoly::parse("x"), MultiPoly::parse("1")},
                                               {MultiPoly::parse("0"), MultiPoly::parse("y")}});
  const PolyMatrix prod = (m * m.inverse()).reduced();
  CHECK(prod == PolyMatrix::identity(2));
}
