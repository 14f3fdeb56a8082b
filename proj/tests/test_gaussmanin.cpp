#include <doctest.h>

#include "gaussmanin/gaussmanin.hpp"

using namespace adeflat;

namespace {

GMStructure derive(const char* name, LatticeConvention conv = LatticeConvention::Corrected) {
  const SingularitySpec s = build_spec(SingularityClass::parse(name));
  return derive_connection(s, build_flat_map(s, conv));
}

void check_all_identities(const GMStructure& gm) {
  const IdentityReport id = check_identities(gm);
  CHECK(id.dS_dt0_is_identity);
  CHECK(id.det_matches_discriminant);
  CHECK(id.S_times_A_is_Lambda);
  CHECK(id.P_polynomial_t0_free);
  CHECK(id.S_weighted_homogeneous);
  CHECK(id.residue_is_Lambda);
  CHECK(id.dubrovin_degrees);
}

}  // namespace

TEST_CASE("pole reduction of basis monomials and x^2 for A2") {
  const SingularitySpec a2 = build_spec(SingularityClass::parse("A2"));
  for (std::size_t i = 0; i < a2.basis.size(); ++i) {
    const MultiPoly g = MultiPoly::monomial(a2.vars, {a2.basis[i][0], a2.basis[i][1], 0, 0});
    const PoleReduction r = reduce_pole_order(a2, g);
    for (std::size_t k = 0; k < a2.basis.size(); ++k) CHECK(r.coeffs()[k] == MultiPoly(r.coeffs()[k].vars(), k == i ? 1 : 0));
  }
  const MultiPoly x2 = MultiPoly::parse("x^2", a2.vars);
  const PoleReduction r = reduce_pole_order(a2, x2);
  CHECK(r.coeffs()[0].compacted().to_string() == "-1/3*s10");
  CHECK(r.coeffs()[1].is_zero());
  for (const auto& d : r.chain) CHECK(check_certificate(a2, x2, d));
}

TEST_CASE("A1 is the degenerate base case") {
  const GMStructure gm = derive("A1");
  CHECK(gm.Lambda == std::vector<Rational>{0});
  CHECK(gm.S_tilde(0, 0).to_string() == "t00");
  CHECK(gm.det_S.to_string() == "t00");
  check_all_identities(gm);
}

TEST_CASE("A2 connection") {
  const GMStructure gm = derive("A2");
  CHECK(gm.Lambda == std::vector<Rational>{Rational(-1, 6), Rational(1, 6)});
  CHECK(gm.constant_c == Rational(1, 27));
  REQUIRE(gm.Delta_t.has_value());
  CHECK(gm.Delta_t->compacted() == MultiPoly::parse("4*t10^3 + 27*t00^2").compacted());
  CHECK(gm.det_S.compacted() == (gm.constant_c * *gm.Delta_t).compacted());
  REQUIRE(gm.A.has_value());
  CHECK((gm.S_tilde * *gm.A).reduced() == PolyMatrix::diagonal(gm.Lambda));
  CHECK(gm.g.size() == 3);
  check_all_identities(gm);
}

TEST_CASE("structural identities and constants for A3, D4, E6") {
  const std::pair<const char*, Rational> cases[] = {
      {"A3", Rational(1, 256)}, {"D4", Rational(1, 432)}, {"E6", Rational(1, 1289945088)}};
  for (const auto& [name, c] : cases) {
    CAPTURE(name);
    const GMStructure gm = derive(name);
    CHECK(gm.constant_c == c);
    CHECK(gm.S_tilde.derivative(gm.t0()).reduced() == PolyMatrix::identity(gm.mu()));
    check_all_identities(gm);
    for (std::size_t i = 0; i < gm.g.size(); ++i) CHECK(gm.g[i].degree(gm.t0()) == static_cast<int>(i));
  }
}

TEST_CASE("printed lattice conventions break the connection") {
  for (const char* name : {"E6", "D4"}) {
    CAPTURE(name);
    CHECK_THROWS_AS(derive(name, LatticeConvention::Printed), AlgebraError);
  }
}

TEST_CASE("Dubrovin operator annihilates the eigen-frame solutions exactly") {
  for (const char* name : {"A1", "A2", "A3", "D4"}) {
    CAPTURE(name);
    const GMStructure gm = derive(name);
    for (int k = 0; k < gm.mu(); ++k) {
      const DubrovinCheck d = dubrovin_check(gm, k);
      CHECK(d.exact);
      CHECK(d.t0_free);
    }
    const DubrovinOperator op = dubrovin_ode(gm);
    CHECK(op.g.size() == static_cast<std::size_t>(gm.mu() + 1));
  }
}

TEST_CASE("A2 monomial reduction") {
  const GMStructure gm = derive("A2");
  auto c = reduce_monomial_to_basis(gm, 2, 0);
  CHECK(c[0].compacted().to_string() == "-1/3*t10");
  CHECK(c[1].is_zero());
  c = reduce_monomial_to_basis(gm, 1, 0);
  CHECK(c[0].is_zero());
  CHECK(c[1] == MultiPoly(c[1].vars(), 1));
  c = reduce_monomial_to_basis(gm, 3, 0);
  for (const auto& e : c) CHECK(e.degree(gm.t0()) <= 2);
  CHECK(degree_bound_v0(gm.spec, 3) == 2);
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k1 + k2 <= 4; ++k2) {
      const auto cc = reduce_monomial_to_basis(gm, k1, k2);
      for (const auto& e : cc) CHECK(e.degree(gm.t0()) <= degree_bound_v0(gm.spec, k1 + k2));
    }
}

TEST_CASE("basis monomials reduce to rows of P") {
  const GMStructure gm = derive("A3");
  for (int i = 0; i < gm.mu(); ++i) {
    const auto c = reduce_monomial_to_basis(gm, gm.spec.basis[i][0], gm.spec.basis[i][1]);
    for (int j = 0; j < gm.mu(); ++j) {
      CHECK(c[j].degree(gm.t0()) <= 0);
      CHECK(RatFunc(c[j]) == gm.P(i, j).reduced());
    }
  }
}
