#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "periods/periods.hpp"

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

std::vector<Rational> R(std::initializer_list<const char*> v) {
  std::vector<Rational> out;
  for (const char* s : v) out.push_back(parse_decimal(s));
  return out;
}

}  // namespace

TEST_CASE("decimal parsing is exact") {
  CHECK(parse_decimal("-0.25") == Rational(-1, 4));
  CHECK(parse_decimal("3/9") == Rational(1, 3));
  CHECK(parse_decimal("1e-2") == Rational(1, 100));
  CHECK_THROWS(parse_decimal("abc"));
  CHECK(exact_rational(0.5) == Rational(1, 2));
}

TEST_CASE("A1 circles") {
  const PeriodEvaluator ev(gm_of("A1"));
  for (const char* r2 : {"-1", "-4", "-1/9"}) {
    CAPTURE(r2);
    const PeriodSample ps = ev.at_s(R({r2}));
    const double rr = -to_double(parse_decimal(r2));
    CHECK(ps.trace.arclength == doctest::Approx(2 * std::numbers::pi * std::sqrt(rr)).epsilon(1e-12));
    CHECK(std::abs(std::abs(ps.J[0]) - std::numbers::pi) < 1e-9);
    const auto v = ev.integrate(ps, {MultiPoly::parse("x^2"), MultiPoly::parse("x*y")});
    CHECK(v[0] == doctest::Approx(ps.J[0] * rr / 2).epsilon(1e-10));
    CHECK(std::abs(v[1]) < 1e-12);
  }
}

TEST_CASE("A2 period against a one-dimensional integral") {
  const PeriodEvaluator ev(gm_of("A2"));
  const PeriodSample ps = ev.at_s(R({"0", "-3"}));
  CHECK(std::abs(ps.K[0] - (-oracle::a2_half_period())) < 1e-8);
  CHECK(ps.K_err < 1e-9);
}

TEST_CASE("exact forms have zero period") {
  const GMStructure& gm = gm_of("A2");
  const PeriodEvaluator ev(gm);
  const PeriodSample ps = ev.at_s(R({"1/3", "-3"}));
  const auto& v = gm.spec.vars;
  const MultiPoly hx = gm.spec.H.derivative("x"), hy = gm.spec.H.derivative("y");
  // g_x h_y - g_y h_x gives the differential of g along the curve; g = x*y^2.
  const MultiPoly exact = MultiPoly::parse("y^2", v) * hy - MultiPoly::parse("2*x*y", v) * hx;
  const auto vals = ev.integrate(ps, {exact, MultiPoly::parse("y", v), MultiPoly::parse("1", v)});
  CHECK(std::abs(vals[0]) < 1e-10);
  CHECK(std::abs(vals[1]) < 1e-10);
  CHECK(std::abs(vals[2]) > 0.1);
}

TEST_CASE("chart choice does not change the period") {
  const GMStructure& gm = gm_of("A3");
  const SingularitySpec& sp = gm.spec;
  const std::vector<double> s{0.5, 0.1, -2};
  const PlaneCurve c(sp, s);
  const auto ovals = find_ovals(sp, s);
  REQUIRE(ovals.size() == 2);
  const MultiPoly num = MultiPoly::parse("1 + x^2", sp.vars);
  const CompiledPoly g = c.compile(num);
  for (const auto& tr : ovals) {
    const double a = integrate_period(c, tr, num);
    CHECK(std::abs(integrate_period_fixed(c, tr, num, 2) - a) < 1e-5);
    // Longest run of nodes where neither chart degenerates.
    std::size_t best0 = 0, best1 = 0, start = 0;
    for (std::size_t i = 0; i < tr.nodes.size(); ++i) {
      const Point2 gr = c.gradient(tr.nodes[i]);
      const double n = std::hypot(gr[0], gr[1]);
      if (std::abs(gr[0]) < 0.3 * n || std::abs(gr[1]) < 0.3 * n) {
        start = i + 1;
        continue;
      }
      if (i - start > best1 - best0) best0 = start, best1 = i;
    }
    REQUIRE(best1 > best0 + 3);
    const double ax = integrate_arc(c, tr, g, best0, best1, {1e-12, Chart::X});
    const double ay = integrate_arc(c, tr, g, best0, best1, {1e-12, Chart::Y});
    CHECK(std::abs(ax - ay) < 1e-9);
  }
}

TEST_CASE("midpoint rule converges at second order") {
  const GMStructure& gm = gm_of("A2");
  const PlaneCurve c(gm.spec, std::vector<double>{0, -3});
  const OrderCheck oc = quadrature_order_check(c, {1.0, 0.0}, MultiPoly::parse("1", gm.spec.vars));
  CHECK(oc.passed);
  CHECK(oc.observed_order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("no oval on the discriminant or outside the real region") {
  const PeriodEvaluator ev(gm_of("A2"));
  CHECK_THROWS_AS(ev.at_s(R({"2", "-3"})), PeriodError);
  CHECK_THROWS_AS(ev.at_s(R({"0", "3"})), PeriodError);
}

TEST_CASE("Fornberg weights") {
  const auto w = fornberg_weights({-1, 0, 1}, 2);
  CHECK(w[0][1] == doctest::Approx(1));
  CHECK(w[1][0] == doctest::Approx(-0.5));
  CHECK(w[1][2] == doctest::Approx(0.5));
  CHECK(w[2][0] == doctest::Approx(1));
  CHECK(w[2][1] == doctest::Approx(-2));
  const auto w5 = fornberg_weights({-2, -1, 0, 1, 2}, 1);
  CHECK(w5[1][0] == doctest::Approx(1.0 / 12));
  CHECK(w5[1][1] == doctest::Approx(-8.0 / 12));
}

TEST_CASE("Gauss-Manin verification at real samples") {
  struct Case {
    const char* cls;
    std::vector<Rational> s;
    int oval;
  };
  const Case cases[] = {
      {"A2", R({"0", "-3"}), 0},         {"A2", R({"1/2", "-3"}), 0},       {"A2", R({"-1/4", "-2"}), 0},
      {"A3", R({"1/2", "1/10", "-2"}), 0}, {"A3", R({"1/2", "1/10", "-2"}), 1}, {"A3", R({"1/3", "0", "-3/2"}), 0},
      {"A3", R({"-1/5", "1/4", "-1"}), 0},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.cls);
    CAPTURE(cs.oval);
    const PeriodEvaluator ev(gm_of(cs.cls));
    VerifyOptions opt;
    opt.periods.oval = cs.oval;
    const VerifyReport r = verify_gm(ev, cs.s, opt);
    CHECK(r.passed);
    CHECK(r.gm_residual < 1e-5);
    CHECK(r.basis_residual < 1e-5);
    CHECK(r.taylor2_residual < 1e-4);
    for (double d : r.dubrovin_residual) CHECK(d < 1e-4);
    CHECK(r.gm_residual_w > 1e-2);
  }
}

TEST_CASE("monomial reduction against direct periods") {
  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    const GMStructure& gm = gm_of(name);
    const PeriodEvaluator ev(gm);
    const PeriodSample ps = ev.at_s(name == std::string("A2") ? R({"1/5", "-3"}) : R({"1/2", "1/10", "-2"}));
    const auto tp = gm.t_point(ps.t);
    for (int k1 = 0; k1 <= 4; ++k1)
      for (int k2 = 0; k1 + k2 <= 4; ++k2) {
        CAPTURE(k1);
        CAPTURE(k2);
        const auto c = reduce_monomial_to_basis(gm, k1, k2);
        double sum = 0;
        for (int nu = 0; nu < gm.mu(); ++nu) sum += to_double(c[nu].evaluate_exact(tp)) * ps.J[nu];
        const double direct =
            ev.integrate(ps, {MultiPoly::monomial(gm.spec.vars, [&] {
                                Exponent e(gm.spec.vars.size(), 0);
                                e[0] = k1;
                                e[1] = k2;
                                return e;
                              }())})[0];
        CHECK(std::abs(sum - direct) < 1e-8 * std::max(1.0, std::abs(direct)));
      }
  }
}
