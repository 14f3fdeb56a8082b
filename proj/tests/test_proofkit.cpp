#include <doctest.h>

#include <cmath>

#include "proofkit/proofkit.hpp"

using namespace adeflat;

namespace {

const GMStructure& gm_of(const char* name) {
  static std::map<std::string, GMStructure> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const SingularitySpec s = build_spec(SingularityClass::parse(name));
    it = cache.emplace(name, derive_connection(s, build_flat_map(s))).first;
  }
  return it->second;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int mu) {
  std::vector<Rational> t;
  for (int i = 0; i < mu; ++i) t.push_back(random_rational(rng, -3, 3, 5));
  return t;
}

}  // namespace

TEST_CASE("Taylor matrices: T0 = id, T1 = A") {
  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    const GMStructure& gm = gm_of(name);
    CHECK(taylor_matrix(gm, 0) == PolyMatrix::identity(gm.mu()));
    REQUIRE(gm.A.has_value());
    CHECK(taylor_matrix(gm, 1) == *gm.A);
  }
}

TEST_CASE("Taylor matrix at a point matches the symbolic one") {
  const GMStructure& gm = gm_of("A3");
  std::mt19937_64 rng(3);
  const std::vector<Rational> t = random_point(rng, gm.mu());
  const PolyMatrix T2 = taylor_matrix(gm, 2).evaluate(gm.t_point(t));
  const RMatrix T2n = taylor_matrix_at(gm, 2, t);
  for (int i = 0; i < gm.mu(); ++i)
    for (int j = 0; j < gm.mu(); ++j) CHECK(T2(i, j) == RatFunc(T2n[i][j]));
}

TEST_CASE("commuting closed form fails for the ordered product") {
  const GMStructure& gm = gm_of("A2");
  const std::vector<Rational> t{Rational(1, 2), Rational(-2)};
  CHECK(taylor_matrix_at(gm, 1, t) == taylor_matrix_commuting_at(gm, 1, t));
  CHECK(taylor_matrix_at(gm, 3, t) != taylor_matrix_commuting_at(gm, 3, t));
}

TEST_CASE("Sigma agrees with the product rule") {
  for (const char* name : {"A1", "A2", "A3"}) {
    CAPTURE(name);
    for (int v0 = 0; v0 <= 2; ++v0)
      for (int ell = 0; ell <= 3; ++ell) CHECK(sigma_matches_product_rule(gm_of(name), v0, ell));
  }
}

TEST_CASE("eigen-shifts of A2 at t = (0, -3)") {
  const GMStructure& gm = gm_of("A2");
  const EigenShifts e = eigen_shifts(gm, {Rational(0), Rational(-3)});
  REQUIRE(e.eigenvalues.size() == 2);
  const Complex prod = e.eigenvalues[0] * e.eigenvalues[1];
  CHECK(prod.real() == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(std::abs(prod.imag()) < 1e-12);
  CHECK(e.product_rel_error < 1e-12);
  CHECK(e.min_gap == doctest::Approx(4.0));

  const EigenShifts shifted = eigen_shifts(gm, {Rational(5, 2), Rational(-3)});
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(shifted.taus[i] - e.taus[i]) < 1e-12);

  CHECK_THROWS_AS(eigen_shifts(gm, {Rational(1), Rational(0)}), AlgebraError);
}

TEST_CASE("A1 eigen-shift is the single root") {
  const GMStructure& gm = gm_of("A1");
  const EigenShifts e = eigen_shifts(gm, {Rational(3, 7)});
  REQUIRE(e.taus.size() == 1);
  CHECK(std::abs(e.taus[0]) < 1e-15);
}

TEST_CASE("bifurcation polynomial") {
  CHECK(bifurcation_poly(gm_of("A2")).compacted() == MultiPoly::parse("-16/27*t10^3"));
  CHECK(bifurcation_poly(gm_of("A1")).compacted() == MultiPoly::parse("1"));
  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    const GMStructure& gm = gm_of(name);
    const MultiPoly B = bifurcation_poly(gm);
    CHECK(B.degree(gm.t0()) <= 0);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
      const std::vector<Rational> t = random_point(rng, gm.mu());
      const double b = to_double(B.evaluate_exact(gm.t_point(t)));
      if (b == 0) continue;
      const EigenShifts e = eigen_shifts(gm, t, 0);
      Complex p = 1;
      for (std::size_t i = 0; i < e.taus.size(); ++i)
        for (std::size_t j = i + 1; j < e.taus.size(); ++j) p *= (e.taus[i] - e.taus[j]) * (e.taus[i] - e.taus[j]);
      CHECK(std::abs(p - b) <= 1e-8 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("minor vector is orthogonal and scales homogeneously") {
  const std::vector<Rational> lambda{Rational(-1, 6), Rational(1, 6)};
  const std::vector<Rational> Z{Rational(2, 3), Rational(-5, 4)};
  for (int v0 = 0; v0 <= 2; ++v0) {
    CAPTURE(v0);
    const int M = 2 * (v0 + 1);
    const MinorResult r = sigma_tilde_and_minor(Z, lambda, v0, 1);
    CHECK(r.orthogonal);
    CHECK(r.d_M != 0);
    CHECK(r.d.size() == static_cast<std::size_t>(M + 1));
    const Rational q(3, 2);
    std::vector<Rational> Zq;
    for (const auto& z : Z) Zq.push_back(q * z);
    const MinorResult rq = sigma_tilde_and_minor(Zq, lambda, v0, 1);
    Rational expect = 1;
    for (int k = 0; k < M * (M + 1) / 2; ++k) expect *= q;
    CHECK(rq.d_M / r.d_M == expect);
  }
}

TEST_CASE("recurrence residual vanishes on the normal vector") {
  const std::vector<double> Z{0.7, -1.3, 2.1};
  const std::vector<Rational> lambda{Rational(-1, 4), Rational(0), Rational(1, 4)};
  const auto sig = sigma_tilde<double>(Z, lambda, 1, 1);
  const auto d = normal_vector(sig);
  for (double v : mat_vec(sig, d)) CHECK(std::abs(v) < 1e-10);
  for (double v : recurrence_residual(Z, lambda, 1, 1, d)) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("proof context sizes") {
  const GMStructure& gm = gm_of("A2");
  const ProofContext c = make_context(gm, 3, {Rational(1, 3), Rational(-2)});
  CHECK(c.v0 == 1);
  CHECK(c.M == 4);
  CHECK(c.taus.size() == 2);
}
