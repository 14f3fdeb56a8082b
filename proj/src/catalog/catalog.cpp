#include "catalog/catalog.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>

#include "catalog/milnor.hpp"
#include "exactalg/polymatrix.hpp"

namespace adeflat {

SingularityClass SingularityClass::parse(const std::string& text) {
  static const std::regex re(R"(^\s*([AaDdEe])\s*\(?\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("unknown singularity class '" + text + "'");
  const char tag = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
  const int mu = std::stoi(m[2].str());
  SingularityClass c;
  c.mu = mu;
  if (tag == 'A') {
    if (mu < 1) throw std::invalid_argument("A_mu needs mu >= 1");
    c.family = Family::A;
  } else if (tag == 'D') {
    if (mu < 4) throw std::invalid_argument("D_mu needs mu >= 4");
    c.family = Family::D;
  } else {
    if (mu == 6) c.family = Family::E6;
    else if (mu == 7) c.family = Family::E7;
    else if (mu == 8) c.family = Family::E8;
    else throw std::invalid_argument("E_mu needs mu in {6,7,8}");
  }
  return c;
}

std::string SingularityClass::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(mu);
    case Family::D: return "D" + std::to_string(mu);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string nu_label(const Nu& nu) { return std::to_string(nu[0]) + std::to_string(nu[1]); }

int SingularitySpec::index_of(const Nu& nu) const {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k] == nu) return static_cast<int>(k);
  return -1;
}

SingularitySpec build_spec(const SingularityClass& cls) {
  SingularitySpec s;
  s.cls = cls;
  const int mu = cls.mu;
  std::string h0;
  switch (cls.family) {
    case Family::A:
      if (mu < 1) throw std::invalid_argument("A_mu needs mu >= 1");
      s.kind = LatticeKind::AE;
      s.rho1 = make_rational(1, mu + 1);
      s.rho2 = make_rational(1, 2);
      for (int i = 0; i < mu; ++i) s.basis.push_back({i, 0});
      h0 = "x^" + std::to_string(mu + 1) + " + y^2";
      break;
    case Family::D:
      if (mu < 4) throw std::invalid_argument("D_mu needs mu >= 4");
      s.kind = LatticeKind::DE7;
      s.rho1 = make_rational(1, mu - 1);
      s.rho2 = make_rational(mu - 2, 2 * (mu - 1));
      for (int i = 0; i <= mu - 2; ++i) s.basis.push_back({i, 0});
      s.basis.push_back({0, 1});
      h0 = "x^" + std::to_string(mu - 1) + " + x*y^2";
      break;
    case Family::E6:
      if (mu != 6) throw std::invalid_argument("E6 has mu = 6");
      s.kind = LatticeKind::AE;
      s.rho1 = make_rational(1, 4);
      s.rho2 = make_rational(1, 3);
      s.basis = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
      h0 = "x^4 + y^3";
      break;
    case Family::E7:
      if (mu != 7) throw std::invalid_argument("E7 has mu = 7");
      s.kind = LatticeKind::DE7;
      s.rho1 = make_rational(1, 3);
      s.rho2 = make_rational(2, 9);
      s.basis = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}};
      h0 = "x^3 + x*y^3";
      break;
    case Family::E8:
      if (mu != 8) throw std::invalid_argument("E8 has mu = 8");
      s.kind = LatticeKind::AE;
      s.rho1 = make_rational(1, 5);
      s.rho2 = make_rational(1, 3);
      s.basis = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {3, 1}};
      h0 = "x^5 + y^3";
      break;
  }
  s.vars = {"x", "y"};
  for (const Nu& nu : s.basis) {
    s.s_names.push_back("s" + nu_label(nu));
    s.vars.push_back(s.s_names.back());
    s.w.push_back(1 - s.rho1 * nu[0] - s.rho2 * nu[1]);
    s.lambda.push_back(s.rho1 * (nu[0] + 1) + s.rho2 * (nu[1] + 1) - 1);
  }
  s.H0 = MultiPoly::parse(h0, {"x", "y"});
  s.H = s.H0.embedded(s.vars);
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    Exponent e(s.vars.size(), 0);
    e[0] = s.basis[k][0];
    e[1] = s.basis[k][1];
    e[2 + k] = 1;
    s.H.add_term(e, 1);
  }
  // Euler identity fixes rho
  const MultiPoly euler = s.rho1 * MultiPoly::variable("x", {"x", "y"}) * s.H0.derivative("x") +
                          s.rho2 * MultiPoly::variable("y", {"x", "y"}) * s.H0.derivative("y");
  if (euler != s.H0) throw AlgebraError("internal: Euler identity fails for " + cls.name());
  for (const Rational& w : s.w)
    if (w <= 0) throw AlgebraError("internal: nonpositive parameter weight for " + cls.name());
  return s;
}

std::vector<SingularityClass> all_classes(int max_mu) {
  std::vector<SingularityClass> out;
  for (int m = 1; m <= max_mu; ++m) out.push_back({Family::A, m});
  for (int m = 4; m <= max_mu; ++m) out.push_back({Family::D, m});
  if (max_mu >= 6) out.push_back({Family::E6, 6});
  if (max_mu >= 7) out.push_back({Family::E7, 7});
  if (max_mu >= 8) out.push_back({Family::E8, 8});
  return out;
}

MultiPoly discriminant(const SingularitySpec& spec) {
  JacobianDivider div(spec);
  const MultiPoly hx = spec.H.derivative("x"), hy = spec.H.derivative("y");
  const int mu = spec.mu();
  std::vector<std::vector<MultiPoly>> mult(mu, std::vector<MultiPoly>(mu));
  for (int l = 0; l < mu; ++l) {
    Exponent e(spec.vars.size(), 0);
    e[0] = spec.basis[l][0];
    e[1] = spec.basis[l][1];
    const Division d = div.divide(spec.H * MultiPoly::monomial(spec.vars, e), hx, hy);
    for (int k = 0; k < mu; ++k) mult[l][k] = d.rem[k].embedded(spec.s_names);
  }
  // mult = s00 id + N with N free of s00, so the determinant is the characteristic polynomial of -N at s00
  const std::string& s00 = spec.s_names.front();
  const MultiPoly z = MultiPoly::variable(s00, spec.s_names);
  for (int l = 0; l < mu; ++l) {
    mult[l][l] -= z;
    for (int k = 0; k < mu; ++k) {
      if (mult[l][k].degree(s00) > 0) throw AlgebraError("multiplication matrix is not affine in " + s00);
      mult[l][k] = -mult[l][k];
    }
  }
  const auto c = charpoly_coefficients(mult);
  MultiPoly det(spec.s_names);
  for (std::size_t k = c.size(); k-- > 0;) det = det * z + c[k].embedded(spec.s_names);
  return det.normalized();
}

bool check_quasihomogeneity(const SingularitySpec& spec) {
  BigInt n = spec.rho1.get_den();
  auto fold = [&](const Rational& r) { mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), r.get_den_mpz_t()); };
  fold(spec.rho2);
  for (const Rational& w : spec.w) fold(w);
  const long N = to_long(n);
  std::vector<std::string> vars = spec.vars;
  vars.push_back("u");
  const MultiPoly u = MultiPoly::variable("u", vars);
  auto scaled = [&](const std::string& v, const Rational& weight) {
    return u.pow(static_cast<unsigned>(to_long(Rational(weight * N).get_num()))) * MultiPoly::variable(v, vars);
  };
  std::map<std::string, MultiPoly> subs;
  subs["x"] = scaled("x", spec.rho1);
  subs["y"] = scaled("y", spec.rho2);
  for (std::size_t k = 0; k < spec.s_names.size(); ++k) subs[spec.s_names[k]] = scaled(spec.s_names[k], spec.w[k]);
  const MultiPoly lhs = spec.H.embedded(vars).substitute(subs);
  return lhs == u.pow(static_cast<unsigned>(N)) * spec.H.embedded(vars);
}

}  // namespace adeflat
