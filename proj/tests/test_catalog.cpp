#include <doctest.h>

#include "catalog/catalog.hpp"
#include "exactalg/polymatrix.hpp"
#include "oracles.hpp"

using namespace adeflat;

TEST_CASE("A2 entry") {
  const SingularitySpec s = build_spec(SingularityClass::parse("A2"));
  CHECK(s.H.to_string() == MultiPoly::parse("x^3 + y^2 + s10*x + s00", s.vars).to_string());
  CHECK(s.rho1 == Rational(1, 3));
  CHECK(s.rho2 == Rational(1, 2));
  CHECK(s.basis == std::vector<Nu>{{0, 0}, {1, 0}});
  CHECK(s.w == std::vector<Rational>{1, Rational(2, 3)});
  CHECK(s.lambda == std::vector<Rational>{Rational(-1, 6), Rational(1, 6)});
}

TEST_CASE("E6 and E8 entries") {
  const SingularitySpec e6 = build_spec(SingularityClass::parse("E6"));
  CHECK(e6.rho1 == Rational(1, 4));
  CHECK(e6.rho2 == Rational(1, 3));
  CHECK(e6.mu() == 6);
  for (const Nu nu : {Nu{0, 0}, Nu{1, 0}, Nu{0, 1}, Nu{2, 0}, Nu{1, 1}, Nu{2, 1}}) CHECK(e6.index_of(nu) >= 0);
  const SingularitySpec e8 = build_spec(SingularityClass::parse("E8"));
  CHECK(e8.rho1 == Rational(1, 5));
  CHECK(e8.rho2 == Rational(1, 3));
  CHECK(e8.mu() == 8);
  CHECK(e8.index_of({3, 1}) >= 0);
}

TEST_CASE("D family basis") {
  for (int mu = 4; mu <= 8; ++mu) {
    const SingularitySpec d = build_spec({Family::D, mu});
    CHECK(d.mu() == mu);
    for (int i = 1; i <= mu - 2; ++i) CHECK(d.index_of({i - 1, 0}) >= 0);
    CHECK(d.index_of({0, 1}) >= 0);
  }
}

TEST_CASE("invalid classes are rejected") {
  CHECK_THROWS_AS(build_spec({Family::D, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_spec({Family::A, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SingularityClass::parse("Z3"), std::invalid_argument);
  CHECK_THROWS_AS(SingularityClass::parse("E9"), std::invalid_argument);
  CHECK(SingularityClass::parse("A(2)").name() == "A2");
}

TEST_CASE("Milnor dimension and basis for every class up to mu 8") {
  CHECK(milnor_quotient_dim(build_spec(SingularityClass::parse("A3"))) == 3);
  CHECK(milnor_quotient_dim(build_spec(SingularityClass::parse("D4"))) == 4);
  CHECK(milnor_quotient_dim(build_spec(SingularityClass::parse("E7"))) == 7);
  for (const auto& c : all_classes(8)) {
    CAPTURE(c.name());
    const SingularitySpec s = build_spec(c);
    CHECK(milnor_quotient_dim(s) == s.mu());
    CHECK(basis_is_milnor_basis(s));
    CHECK(check_quasihomogeneity(s));
    for (const auto& w : s.w) CHECK(w > 0);
  }
}

TEST_CASE("non-isolated singularity is detected") {
  CHECK_THROWS_AS(milnor_quotient_dim(MultiPoly::parse("x^2", {"x", "y"}), Rational(1, 2), Rational(1, 2)),
                  AlgebraError);
}

TEST_CASE("small discriminants") {
  const SingularitySpec a1 = build_spec(SingularityClass::parse("A1"));
  CHECK(discriminant(a1) == MultiPoly::parse("s00", a1.s_names).embedded(discriminant(a1).vars()));
  const SingularitySpec a2 = build_spec(SingularityClass::parse("A2"));
  const MultiPoly d2 = discriminant(a2);
  CHECK(d2.compacted() == MultiPoly::parse("4*s10^3 + 27*s00^2").compacted());
}

TEST_CASE("A discriminants match the resultant oracle") {
  for (int mu = 2; mu <= 5; ++mu) {
    CAPTURE(mu);
    const SingularitySpec s = build_spec({Family::A, mu});
    // H = x^(mu+1) + y^2 + ..., singular iff the x-part has a double root
    const MultiPoly fx = s.H.substitute("y", MultiPoly(s.vars, 0));
    const MultiPoly oracle = monic_discriminant(fx, "x").normalized();
    CHECK(discriminant(s).compacted() == oracle.compacted());
  }
}

TEST_CASE("discriminant vanishes at 0 and is weighted homogeneous") {
  for (const auto& c : all_classes(6)) {
    CAPTURE(c.name());
    const SingularitySpec s = build_spec(c);
    const MultiPoly d = discriminant(s);
    std::map<std::string, Rational> zero, weights;
    for (std::size_t i = 0; i < s.s_names.size(); ++i) {
      zero[s.s_names[i]] = 0;
      weights[s.s_names[i]] = s.w[i];
    }
    CHECK(d.evaluate_exact(zero) == 0);
    CHECK(d.weighted_degree(weights).has_value());
  }
}

TEST_CASE("discriminant agrees with numeric singularity detection") {
  for (const char* name : {"A3", "D4"}) {
    CAPTURE(name);
    const SingularitySpec s = build_spec(SingularityClass::parse(name));
    const auto r = oracle::discriminant_cross_check(s, discriminant(s), 25, 25, 17);
    CHECK(r.samples == 50);
    CHECK(r.agree == 50);
    CHECK(r.ratio_spread < 1e-6);
  }
}

TEST_CASE("D4 discriminant divides the iterated resultant") {
  const SingularitySpec d4 = build_spec(SingularityClass::parse("D4"));
  const MultiPoly& h = d4.H;
  const MultiPoly hx = h.derivative("x"), hy = h.derivative("y");
  const MultiPoly r = resultant(resultant(h, hy, "y"), resultant(hx, hy, "y"), "x");
  REQUIRE(!r.is_zero());
  CHECK(exact_divide(r, discriminant(d4)).has_value());
}
