#include "periods/periods.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "proofkit/proofkit.hpp"

namespace adeflat {

Rational parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  const auto e = text.find_first_of("eE");
  if (dot == std::string::npos && e == std::string::npos) return parse_rational(text);
  std::string mant = text.substr(0, e);
  long exp10 = 0;
  if (e != std::string::npos) {
    try {
      exp10 = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw AlgebraError("malformed number: '" + text + "'");
    }
  }
  if (dot != std::string::npos && dot < mant.size()) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw AlgebraError("malformed number: '" + text + "'");
  if (mant[0] == '+') mant.erase(0, 1);
  Rational r = parse_rational(mant);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0) r *= p;
  else r /= p;
  r.canonicalize();
  return r;
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw AlgebraError("non-finite value");
  return Rational(v);
}

PeriodEvaluator::PeriodEvaluator(const GMStructure& gm) : gm_(gm) {
  for (const auto& tn : gm.flat.t_names) phi_.push_back(gm.F.derivative(tn));
}

namespace {

std::vector<Rational> eval_all(const std::vector<MultiPoly>& ps, const std::vector<std::string>& names,
                               const std::vector<Rational>& v) {
  std::map<std::string, Rational> pt;
  for (std::size_t i = 0; i < names.size(); ++i) pt[names[i]] = v.at(i);
  std::vector<Rational> out;
  for (const auto& p : ps) out.push_back(p.evaluate_exact(pt));
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(r.get_d());
  return out;
}

MultiPoly basis_monomial(const Nu& nu) { return MultiPoly::monomial({"x", "y"}, {nu[0], nu[1]}); }

}  // namespace

std::vector<double> PeriodEvaluator::t_of_s(const std::vector<Rational>& s) const {
  return to_doubles(eval_all(gm_.flat.forward, gm_.flat.s_names, s));
}

std::vector<Point2> PeriodEvaluator::oval_centers(const std::vector<Rational>& s) const {
  std::vector<Point2> out;
  for (const auto& tr : find_ovals(gm_.spec, to_doubles(s))) out.push_back(tr.center);
  return out;
}

Point2 PeriodEvaluator::pick_center(const std::vector<Rational>& s, const PeriodOptions& opt) const {
  if (opt.center) return *opt.center;
  const auto cs = oval_centers(s);
  if (cs.empty()) throw PeriodError("no real oval at this parameter point");
  if (opt.oval < 0 || opt.oval >= static_cast<int>(cs.size()))
    throw PeriodError("oval index " + std::to_string(opt.oval) + " out of range (" + std::to_string(cs.size()) +
                      " ovals)");
  return cs[opt.oval];
}

PeriodSample PeriodEvaluator::at_s(const std::vector<Rational>& s, const PeriodOptions& opt) const {
  return at_t(eval_all(gm_.flat.forward, gm_.flat.s_names, s), opt);
}

PeriodSample PeriodEvaluator::at_t(const std::vector<Rational>& t, const PeriodOptions& opt) const {
  PeriodSample ps;
  ps.t = t;
  ps.s = eval_all(gm_.flat.inverse, gm_.flat.t_names, t);
  const Point2 center = pick_center(ps.s, opt);
  const PlaneCurve c(gm_.spec, to_doubles(ps.s));
  ps.trace = find_oval(c, center, opt.trace);
  ps.trace.s = to_doubles(ps.s);
  std::map<std::string, Rational> tp = gm_.t_point(t);
  for (std::size_t k = 0; k < gm_.spec.basis.size(); ++k) {
    double e = 0;
    ps.K.push_back(integrate_period(c, ps.trace, basis_monomial(gm_.spec.basis[k]), opt.quad, &e));
    ps.K_err = std::max(ps.K_err, e);
    ps.J.push_back(integrate_period(c, ps.trace, phi_[k].evaluate(tp), opt.quad, &e));
    ps.J_err = std::max(ps.J_err, e);
  }
  return ps;
}

std::vector<double> PeriodEvaluator::integrate(const PeriodSample& ps, const std::vector<MultiPoly>& numerators,
                                               const QuadOptions& q) const {
  const PlaneCurve c(gm_.spec, to_doubles(ps.s));
  std::vector<double> out;
  for (const auto& n : numerators) out.push_back(integrate_period(c, ps.trace, n, q));
  return out;
}

std::vector<std::vector<double>> fornberg_weights(const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<double>> c(x.size(), std::vector<double>(m + 1, 0.0));
  double c1 = 1, c4 = x[0];
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<std::vector<double>> w(m + 1, std::vector<double>(x.size()));
  for (int k = 0; k <= m; ++k)
    for (std::size_t i = 0; i < x.size(); ++i) w[k][i] = c[i][k];
  return w;
}

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct Derivatives {
  std::vector<std::vector<double>> D;  // D[k][nu]
  double richardson = 0;
};

// Derivatives 0..kmax in t0 from a 17-point stencil, Richardson-combined over spacings h and 2h.
Derivatives stencil_derivatives(const PeriodEvaluator& ev, const std::vector<Rational>& t, double h, int kmax,
                                const PeriodOptions& po) {
  const std::size_t mu = t.size();
  std::vector<std::vector<double>> J(17);
  for (int j = -8; j <= 8; ++j) {
    std::vector<Rational> tj = t;
    tj[0] += exact_rational(j * h);
    try {
      J[j + 8] = ev.at_t(tj, po).J;
    } catch (const PeriodError& e) {
      throw PeriodError(std::string("stencil crosses discriminant (") + e.what() + ")");
    }
  }
  std::vector<double> fine_x, coarse_x;
  for (int j = -4; j <= 4; ++j) {
    fine_x.push_back(j * h);
    coarse_x.push_back(2 * j * h);
  }
  const auto wf = fornberg_weights(fine_x, kmax);
  const auto wc = fornberg_weights(coarse_x, kmax);
  Derivatives out;
  out.D.assign(kmax + 1, std::vector<double>(mu, 0.0));
  for (int k = 0; k <= kmax; ++k) {
    const int p = std::max(2, 8 - 2 * ((k + 1) / 2 - 1));
    for (std::size_t nu = 0; nu < mu; ++nu) {
      double f = 0, c = 0;
      for (int j = 0; j < 9; ++j) {
        f += wf[k][j] * J[j + 4][nu];
        c += wc[k][j] * J[2 * j][nu];
      }
      out.D[k][nu] = f + (f - c) / (std::pow(2.0, p) - 1);
      const double scale = std::max({std::abs(out.D[k][nu]), std::abs(out.D[0][nu]), 1e-300});
      if (k >= 1) out.richardson = std::max(out.richardson, std::abs(f - c) / scale);
    }
  }
  return out;
}

std::vector<double> rmat_vec(const RMatrix& m, const std::vector<double>& v) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j].get_d() * v[j];
  return out;
}

}  // namespace

VerifyReport verify_gm(const PeriodEvaluator& ev, const std::vector<Rational>& s, const VerifyOptions& opt) {
  const GMStructure& gm = ev.gm();
  const std::size_t mu = gm.spec.basis.size();
  VerifyReport r;
  r.s = s;
  r.t = eval_all(gm.flat.forward, gm.flat.s_names, s);
  PeriodOptions po = opt.periods;
  const PeriodSample base = ev.at_t(r.t, po);
  po.center = base.trace.center;
  r.center = base.trace.center;
  r.K = base.K;
  r.J = base.J;
  r.polyline = base.trace.nodes;

  const RMatrix S = gm.S_at(r.t);
  Eigen::MatrixXd Sd(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) Sd(i, j) = S[i][j].get_d();
  const Eigen::VectorXcd eig = Eigen::EigenSolver<Eigen::MatrixXd>(Sd).eigenvalues();
  r.distance = INFINITY;
  for (Eigen::Index i = 0; i < eig.size(); ++i) r.distance = std::min(r.distance, std::abs(eig[i]));
  if (!(r.distance > 0) || !std::isfinite(r.distance)) throw PeriodError("sample on the discriminant");
  r.h = opt.h_factor * r.distance;

  const int kmax = opt.dubrovin ? std::max<int>(2, static_cast<int>(mu)) : 2;
  const Derivatives low = stencil_derivatives(ev, r.t, r.h, std::min(kmax, 2), po);
  Derivatives high = low;
  if (kmax > 2) high = stencil_derivatives(ev, r.t, 0.02 * r.distance, kmax, po);
  r.richardson_error = std::max(low.richardson, high.richardson);
  r.dJ = low.D[1];
  r.d2J = low.D[2];

  std::vector<double> lamJ(mu), wJ(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    lamJ[i] = gm.Lambda[i].get_d() * r.J[i];
    wJ[i] = gm.spec.w[i].get_d() * r.J[i];
  }
  const auto SdJ = rmat_vec(S, r.dJ);
  std::vector<double> d1(mu), d2(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    d1[i] = SdJ[i] - lamJ[i];
    d2[i] = SdJ[i] - wJ[i];
  }
  // Lambda J vanishes identically only for the A1 case, where S dJ itself is the residual.
  const double nl = norm2(lamJ), nw = norm2(wJ), nj = norm2(r.J);
  r.gm_residual = norm2(d1) / (nl > 1e-12 * nj ? nl : nj);
  r.gm_residual_w = norm2(d2) / (nw > 1e-12 * nj ? nw : nj);

  const RMatrix P = [&] {
    const PolyMatrix pe = gm.P.evaluate(gm.t_point(r.t));
    RMatrix out(mu, std::vector<Rational>(mu));
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) out[i][j] = pe(i, j).evaluate_exact({});
    return out;
  }();
  const auto PJ = rmat_vec(P, r.J);
  std::vector<double> db(mu);
  for (std::size_t i = 0; i < mu; ++i) db[i] = r.K[i] - PJ[i];
  r.basis_residual = norm2(db) / norm2(r.K);

  const auto T2J = rmat_vec(taylor_matrix_at(gm, 2, r.t), r.J);
  std::vector<double> dt(mu);
  for (std::size_t i = 0; i < mu; ++i) dt[i] = r.d2J[i] - T2J[i];
  const double nt = norm2(T2J);
  r.taylor2_residual = norm2(dt) / (nt > 1e-12 * nj ? nt : nj);

  bool dub_ok = true;
  if (opt.dubrovin) {
    std::vector<RMatrix> T;
    for (std::size_t k = 0; k <= mu; ++k) T.push_back(taylor_matrix_at(gm, static_cast<int>(k), r.t));
    for (std::size_t nu = 0; nu < mu; ++nu) {
      std::vector<std::vector<Rational>> m(mu, std::vector<Rational>(mu + 1));
      for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t k = 0; k <= mu; ++k) m[j][k] = T[k][nu][j];
      auto ns = rational_nullspace(m, mu + 1);
      if (ns.empty()) throw AlgebraError("no scalar annihilator for component " + std::to_string(nu));
      auto top = [&](const std::vector<Rational>& q) {
        int hi = -1;
        for (std::size_t k = 0; k < q.size(); ++k)
          if (q[k] != 0) hi = static_cast<int>(k);
        return hi;
      };
      std::vector<Rational> q = ns.front();
      for (const auto& c : ns)
        if (top(c) < top(q)) q = c;
      double num = 0, den = 0, qmax = 0;
      for (std::size_t k = 0; k <= mu; ++k) {
        const double dk = k <= 2 ? low.D[k][nu] : high.D[k][nu];
        num += q[k].get_d() * dk;
        den += std::abs(q[k].get_d() * dk);
        qmax = std::max(qmax, std::abs(q[k].get_d()));
      }
      den = std::max(den, qmax * std::abs(r.J[nu]));
      r.dubrovin_residual.push_back(den > 0 ? std::abs(num) / den : 0.0);
      r.annihilators.push_back(q);
      if (!(r.dubrovin_residual.back() < opt.dubrovin_gate)) dub_ok = false;
    }
  }
  r.passed = r.gm_residual < opt.gate && r.basis_residual < opt.gate && r.taylor2_residual < opt.taylor_gate && dub_ok;
  return r;
}

}  // namespace adeflat
