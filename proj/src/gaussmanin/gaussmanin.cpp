#include "gaussmanin/gaussmanin.hpp"

#include <algorithm>

namespace adeflat {

PolyGrid grid_mul(const PolyGrid& a, const PolyGrid& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::string> vars;
  for (const auto& row : a)
    for (const auto& e : row) vars = merge_vars(vars, e.vars());
  for (const auto& row : b)
    for (const auto& e : row) vars = merge_vars(vars, e.vars());
  PolyGrid out(n, std::vector<MultiPoly>(m, MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l].is_zero() || b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
  return out;
}

PolyMatrix grid_to_matrix(const PolyGrid& g) { return PolyMatrix::from_polys(g); }

namespace {

MultiPoly xy_mono(const std::vector<std::string>& vars, const Nu& nu) {
  Exponent e(vars.size(), 0);
  e[0] = nu[0];
  e[1] = nu[1];
  return MultiPoly::monomial(vars, e);
}

std::string grid_text(const PolyGrid& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < g[i].size(); ++j) out += (j ? ", " : "") + g[i][j].to_string();
    out += "]";
  }
  return out + "]";
}

// row vector times grid
std::vector<MultiPoly> row_times(const std::vector<MultiPoly>& r, const PolyGrid& m, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out(m.empty() ? 0 : m[0].size(), MultiPoly(vars));
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (r[l].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!m[l][j].is_zero()) out[j] += r[l] * m[l][j];
  }
  for (auto& e : out) e = e.embedded(vars);
  return out;
}

}  // namespace

std::vector<std::vector<MultiPoly>> level_chain(const SingularitySpec& spec, const JacobianDivider& div,
                                                const MultiPoly& g_in, const MultiPoly& fx, const MultiPoly& fy) {
  std::vector<std::vector<MultiPoly>> levels;
  MultiPoly g = g_in;
  (void)spec;
  while (!g.is_zero()) {
    Division d = div.divide(g, fx, fy);
    levels.push_back(d.rem);
    g = d.a.derivative("x") + d.b.derivative("y");
    if (levels.size() > 64) throw AlgebraError("level chain does not terminate");
  }
  return levels;
}

PoleReduction reduce_pole_order(const SingularitySpec& spec, const MultiPoly& G, int pole_order) {
  if (pole_order < 1) throw AlgebraError("pole order must be >= 1");
  JacobianDivider div(spec);
  const MultiPoly hx = spec.H.derivative("x"), hy = spec.H.derivative("y");
  PoleReduction out;
  out.by_order.assign(pole_order, std::vector<MultiPoly>(spec.basis.size(), MultiPoly(spec.vars)));
  MultiPoly g = G.embedded(merge_vars(spec.vars, G.vars()));
  for (int p = pole_order; p >= 1; --p) {
    Division d = div.divide(g, hx, hy);
    for (std::size_t k = 0; k < d.rem.size(); ++k) out.by_order[p - 1][k] += d.rem[k];
    out.chain.push_back(d);
    if (p == 1) break;
    // (a H_x + b H_y) / H^p  ->  (a_x + b_y) / ((p-1) H^(p-1))
    g = (d.a.derivative("x") + d.b.derivative("y")) * Rational(1, p - 1);
    if (g.is_zero()) break;
  }
  return out;
}

bool check_certificate(const SingularitySpec& spec, const MultiPoly& G, const Division& d) {
  std::vector<std::string> vars = merge_vars(spec.vars, G.vars());
  MultiPoly acc = d.a * spec.H.derivative("x") + d.b * spec.H.derivative("y");
  for (std::size_t k = 0; k < d.rem.size(); ++k) acc += d.rem[k] * xy_mono(vars, spec.basis[k]);
  return acc == G;
}

std::map<std::string, Rational> GMStructure::t_point(const std::vector<Rational>& t) const {
  std::map<std::string, Rational> out;
  for (std::size_t k = 0; k < flat.t_names.size(); ++k) out[flat.t_names[k]] = t.at(k);
  return out;
}

std::vector<std::vector<Rational>> GMStructure::S_at(const std::vector<Rational>& t) const {
  const auto pt = t_point(t);
  const std::size_t n = R0.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = R0[i][j].evaluate_exact(pt) + (i == j ? t[0] : Rational(0));
  return out;
}

GMStructure derive_connection(const SingularitySpec& spec, const FlatMap& flat, const DeriveOptions& opt) {
  GMStructure gm{spec, flat, {}, {}, {}, {}, {}, {}, std::nullopt, {}, std::nullopt, std::nullopt, 0, {}};
  const std::size_t mu = spec.basis.size();
  const auto& tn = flat.t_names;
  const std::string& t0 = tn.front();
  std::vector<std::string> vars = {"x", "y"};
  vars.insert(vars.end(), tn.begin(), tn.end());
  gm.F = flat.to_t(spec.H).embedded(vars);
  const MultiPoly f = gm.F - MultiPoly::variable(t0, vars);
  if (f.degree(t0) > 0) throw AlgebraError("F - t0 depends on t0: " + f.to_string());
  const MultiPoly fx = f.derivative("x"), fy = f.derivative("y");
  JacobianDivider div(spec);

  // K = P J with J_nu = sum_l (ds_l/dt_nu) K_l
  PolyGrid M(mu, std::vector<MultiPoly>(mu));
  for (std::size_t l = 0; l < mu; ++l)
    for (std::size_t n = 0; n < mu; ++n) M[l][n] = flat.inverse[l].derivative(tn[n]).embedded(tn);
  gm.P = grid_to_matrix(M).transpose().inverse();
  if (!gm.P.is_polynomial()) throw AlgebraError("P is not polynomial");
  const PolyGrid P = gm.P.polys();

  std::vector<PolyGrid> R;
  for (std::size_t n = 0; n < mu; ++n) {
    const MultiPoly phi = gm.F.derivative(tn[n]);
    const auto levels = level_chain(spec, div, f * phi, fx, fy);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      while (R.size() <= k) R.emplace_back(mu, std::vector<MultiPoly>(mu, MultiPoly(tn)));
      std::vector<MultiPoly> row;
      for (const auto& e : levels[k]) row.push_back(e.embedded(tn));
      R[k][n] = row_times(row, P, tn);
    }
  }
  while (R.size() < 2) R.emplace_back(mu, std::vector<MultiPoly>(mu, MultiPoly(tn)));
  for (std::size_t k = 2; k < R.size(); ++k)
    for (const auto& row : R[k])
      for (const auto& e : row)
        if (!e.is_zero()) throw AlgebraError("nonzero residue at level " + std::to_string(k) + ": " + grid_text(R[k]));
  gm.R0 = R[0];
  for (const auto& row : gm.R0)
    for (const auto& e : row)
      if (e.degree(t0) > 0) throw AlgebraError("S_tilde - t0 id depends on t0: " + grid_text(gm.R0));
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const MultiPoly& e = R[1][i][j];
      if (i != j && !e.is_zero()) throw AlgebraError("first-level residue is not diagonal: " + grid_text(R[1]));
      if (i == j && !e.is_constant()) throw AlgebraError("first-level residue is not constant: " + grid_text(R[1]));
    }
  for (std::size_t i = 0; i < mu; ++i) gm.residue.push_back(R[1][i][i].constant_term() - 1);
  gm.Lambda = spec.lambda;
  if (gm.residue != gm.Lambda) throw AlgebraError("first-level residue minus id differs from diag(lambda): " + grid_text(R[1]));

  PolyGrid S = gm.R0;
  for (std::size_t i = 0; i < mu; ++i) S[i][i] += MultiPoly::variable(t0, tn);
  gm.S_tilde = grid_to_matrix(S);

  // det(z id + R0) once; det S = p(t0), det(S + lam) = p(t0 + lam)
  std::vector<std::string> zvars = tn;
  zvars.push_back("z");
  PolyGrid negR0(mu, std::vector<MultiPoly>(mu));
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) negR0[i][j] = -gm.R0[i][j];
  const auto cz = charpoly_coefficients(negR0);
  const MultiPoly zv = MultiPoly::variable("z", zvars);
  MultiPoly pz(zvars);
  for (std::size_t k = cz.size(); k-- > 0;) pz = pz * zv + cz[k].embedded(zvars);
  gm.det_S = pz.substitute("z", MultiPoly::variable(t0, zvars)).embedded(tn);
  if (opt.dubrovin || opt.connection) {
    std::vector<std::string> lvars = tn;
    lvars.push_back("z");
    const MultiPoly shifted =
        pz.substitute("z", MultiPoly::variable(t0, lvars) + MultiPoly::variable("z", lvars)).embedded(lvars);
    const auto coeffs = shifted.coefficients_in("z");
    gm.g.assign(mu + 1, MultiPoly(tn));
    for (std::size_t p = 0; p < coeffs.size(); ++p) gm.g[mu - p] = coeffs[p].embedded(tn);
  }
  if (opt.discriminant) {
    gm.Delta_s = discriminant(spec);
    gm.Delta_t = flat.to_t(*gm.Delta_s).embedded(tn);
    const auto [e, lc] = gm.Delta_t->leading_term();
    gm.constant_c = gm.det_S.coefficient(e) / lc;
    if (gm.constant_c == 0 || gm.det_S != gm.constant_c * *gm.Delta_t)
      throw AlgebraError("det S_tilde is not a constant multiple of the discriminant: " + gm.det_S.to_string());
  }
  if (opt.connection) {
    // adj(S) by Cayley-Hamilton: det(x - S) = sum_k c_k x^k with c_{mu-i} = (-1)^i g_i,
    // adj(S) = (-1)^(mu+1) sum_{k>=1} c_k S^(k-1); checked as S adj = det S id
    auto c_of = [&](std::size_t k) {
      const std::size_t i = mu - k;
      return i % 2 ? -gm.g[i] : gm.g[i];
    };
    PolyGrid Y(mu, std::vector<MultiPoly>(mu, MultiPoly(tn)));
    for (std::size_t i = 0; i < mu; ++i) Y[i][i] = c_of(mu);
    for (std::size_t k = mu - 1; k >= 1; --k) {
      Y = grid_mul(Y, S);
      for (std::size_t i = 0; i < mu; ++i) Y[i][i] += c_of(k);
    }
    if (mu % 2 == 0)
      for (auto& row : Y)
        for (auto& e : row) e = -e;
    const PolyGrid SY = grid_mul(S, Y);
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j)
        if (SY[i][j].embedded(tn) != (i == j ? gm.det_S : MultiPoly(tn))) throw AlgebraError("S_tilde * A != Lambda");
    PolyMatrix A(mu, mu);
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) A(i, j) = RatFunc(Y[i][j] * gm.Lambda[j], gm.det_S);
    gm.A = std::move(A);
  }
  return gm;
}

IdentityReport check_identities(const GMStructure& gm) {
  IdentityReport r;
  const std::size_t mu = gm.R0.size();
  const auto& tn = gm.flat.t_names;
  r.dS_dt0_is_identity = gm.S_tilde.derivative(gm.t0()) == PolyMatrix::identity(mu);
  r.det_matches_discriminant = gm.Delta_t && gm.constant_c != 0 && gm.det_S == gm.constant_c * *gm.Delta_t;
  if (gm.A) {
    // row-wise common denominators make this a polynomial identity
    bool ok = true;
    const PolyMatrix prod = gm.S_tilde * *gm.A;
    for (std::size_t i = 0; ok && i < mu; ++i)
      for (std::size_t j = 0; ok && j < mu; ++j) {
        const RatFunc& e = prod(i, j);
        ok = e.num() == (i == j ? gm.Lambda[i] * e.den() : MultiPoly(e.den().vars()));
      }
    r.S_times_A_is_Lambda = ok;
  }
  bool pok = gm.P.is_polynomial();
  if (pok)
    for (const auto& row : gm.P.polys())
      for (const auto& e : row) pok = pok && e.degree(gm.t0()) <= 0;
  pok = pok && !gm.P.determinant().is_zero() && gm.P.determinant().num().is_constant();
  r.P_polynomial_t0_free = pok;
  std::map<std::string, Rational> weights;
  for (std::size_t k = 0; k < tn.size(); ++k) weights[tn[k]] = gm.spec.w[k];
  bool hom = true;
  const PolyGrid S = gm.S_tilde.polys();
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      if (S[i][j].is_zero()) continue;
      auto wd = S[i][j].weighted_degree(weights);
      hom = hom && wd && *wd == 1 + gm.spec.w[j] - gm.spec.w[i];
    }
  r.S_weighted_homogeneous = hom;
  r.residue_is_Lambda = gm.residue == gm.Lambda;
  bool deg = gm.g.size() == mu + 1;
  for (std::size_t i = 0; deg && i <= mu; ++i) deg = gm.g[i].degree(gm.t0()) == static_cast<int>(i);
  r.dubrovin_degrees = deg;
  return r;
}

DubrovinOperator dubrovin_ode(const GMStructure& gm) {
  DubrovinOperator op;
  op.g = gm.g;
  const int mu = gm.mu();
  op.shift.assign(mu + 1, std::vector<Rational>(mu, Rational(1)));
  for (int k = 0; k <= mu; ++k)
    for (int n = 0; n < mu; ++n)
      for (int b = k; b < mu; ++b) op.shift[k][n] *= gm.Lambda[n] - b;
  return op;
}

DubrovinCheck dubrovin_check(const GMStructure& gm, int component) {
  const int mu = gm.mu();
  const Rational lam = gm.Lambda.at(component);
  std::vector<std::string> vars = gm.flat.t_names;
  vars.push_back("tau");
  const MultiPoly Zp = MultiPoly::variable(gm.t0(), vars) - MultiPoly::variable("tau", vars);
  auto falling = [&](int k) {
    Rational f = 1;
    for (int b = 0; b < k; ++b) f *= lam - b;
    return f;
  };
  MultiPoly E(vars);
  for (int k = 0; k <= mu; ++k) {
    Rational coef = falling(k);
    for (int b = k; b < mu; ++b) coef *= lam - b;
    if (k % 2) coef = -coef;
    E += coef * gm.g[k].embedded(vars) * Zp.pow(static_cast<unsigned>(mu - k));
  }
  // (-1)^mu L^(mu) det(tau id + R0)
  PolyGrid T(mu, std::vector<MultiPoly>(mu));
  for (int i = 0; i < mu; ++i)
    for (int j = 0; j < mu; ++j)
      T[i][j] = gm.R0[i][j].embedded(vars) + (i == j ? MultiPoly::variable("tau", vars) : MultiPoly(vars));
  MultiPoly expect = falling(mu) * bareiss_determinant(T).embedded(vars);
  if (mu % 2) expect = -expect;
  DubrovinCheck c;
  c.exact = E == expect;
  c.t0_free = E.degree(gm.t0()) <= 0;
  c.residual = (E - expect).to_string();
  return c;
}

int degree_bound_v0(const SingularitySpec& spec, int k) {
  return static_cast<int>(to_long(floor_of(Rational((spec.rho1 + spec.rho2) * k))));
}

std::vector<MultiPoly> reduce_monomial_to_basis(const GMStructure& gm, int k1, int k2) {
  if (k1 < 0 || k2 < 0) throw AlgebraError("monomial exponents must be nonnegative");
  const auto& tn = gm.flat.t_names;
  const std::size_t mu = gm.R0.size();
  std::vector<std::string> vars = {"x", "y"};
  vars.insert(vars.end(), tn.begin(), tn.end());
  const MultiPoly f = gm.F - MultiPoly::variable(gm.t0(), vars);
  JacobianDivider div(gm.spec);
  const auto levels = level_chain(gm.spec, div, xy_mono(vars, {k1, k2}), f.derivative("x"), f.derivative("y"));
  const PolyGrid P = gm.P.polys();
  const PolyGrid S = gm.S_tilde.polys();
  PolyGrid W(mu, std::vector<MultiPoly>(mu, MultiPoly(tn)));
  for (std::size_t i = 0; i < mu; ++i) W[i][i] = MultiPoly(tn, Rational(1));
  std::vector<MultiPoly> c(mu, MultiPoly(tn));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k > 0) {
      PolyGrid next = grid_mul(S, W);
      for (std::size_t i = 0; i < mu; ++i)
        for (auto& e : next[i]) e = (e * Rational(-1) * (Rational(1) / (gm.Lambda[i] + static_cast<long>(k)))).embedded(tn);
      W = std::move(next);
    }
    std::vector<MultiPoly> row;
    for (const auto& e : levels[k]) row.push_back(e.embedded(tn));
    const auto rp = row_times(row_times(row, P, tn), W, tn);
    for (std::size_t j = 0; j < mu; ++j) c[j] += rp[j];
  }
  const int bound = degree_bound_v0(gm.spec, k1 + k2);
  for (const auto& e : c)
    if (e.degree(gm.t0()) > bound)
      throw AlgebraError("degree bound violated for x^" + std::to_string(k1) + " y^" + std::to_string(k2) + ": " +
                         e.to_string());
  return c;
}

}  // namespace adeflat
