#include "proofkit/proofkit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace adeflat {

namespace {

RMatrix r_identity(std::size_t n) {
  RMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMatrix r_mul(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RMatrix r_inverse(RMatrix m) {
  const std::size_t n = m.size();
  RMatrix inv = r_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw AlgebraError("matrix is singular at the sample point (on the discriminant)");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = Rational(1) / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

void scale_columns_by(RMatrix& m, const std::vector<Rational>& d) {
  for (auto& row : m)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= d[j];
}

Rational binom(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

template <class T>
double magnitude(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) return std::fabs(v.get_d());
  else return std::abs(v);
}

}  // namespace

PolyMatrix taylor_matrix(const GMStructure& gm, int ell) {
  const std::size_t mu = gm.Lambda.size();
  PolyMatrix T = PolyMatrix::identity(mu);
  if (ell == 0) return T;
  const PolyMatrix Sinv = gm.S_tilde.inverse();
  for (int l = 0; l < ell; ++l) {
    std::vector<Rational> shift;
    for (const auto& v : gm.Lambda) shift.push_back(v - l);
    T = (Sinv * (PolyMatrix::diagonal(shift) * T)).reduced();
  }
  return T;
}

RMatrix taylor_matrix_at(const GMStructure& gm, int ell, const std::vector<Rational>& t) {
  const std::size_t mu = gm.Lambda.size();
  RMatrix T = r_identity(mu);
  if (ell == 0) return T;
  const RMatrix Sinv = r_inverse(gm.S_at(t));
  for (int l = 0; l < ell; ++l) {
    for (std::size_t i = 0; i < mu; ++i)
      for (auto& e : T[i]) e *= gm.Lambda[i] - l;
    T = r_mul(Sinv, T);
  }
  return T;
}

RMatrix taylor_matrix_commuting_at(const GMStructure& gm, int ell, const std::vector<Rational>& t) {
  const std::size_t mu = gm.Lambda.size();
  const RMatrix Sinv = r_inverse(gm.S_at(t));
  RMatrix T = r_identity(mu);
  for (int l = 0; l < ell; ++l) T = r_mul(Sinv, T);
  std::vector<Rational> d(mu, Rational(1));
  for (std::size_t i = 0; i < mu; ++i)
    for (int b = 0; b < ell; ++b) d[i] *= gm.Lambda[i] - b;
  scale_columns_by(T, d);
  return T;
}

RMatrix build_sigma_at(const GMStructure& gm, int v0, int ell, const std::vector<Rational>& t) {
  const std::size_t mu = gm.Lambda.size();
  const std::size_t M = mu * static_cast<std::size_t>(v0 + 1);
  RMatrix out(M, std::vector<Rational>(M, Rational(0)));
  std::vector<RMatrix> T;
  for (int l = 0; l <= ell; ++l) T.push_back(taylor_matrix_at(gm, l, t));
  for (int a = 0; a <= v0; ++a)
    for (int b = 0; b <= a; ++b) {
      const int j = a - b;
      if (j > ell) continue;
      const Rational coef = binom(ell, j) * Rational(factorial(a)) / Rational(factorial(b));
      for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = 0; q < mu; ++q) out[a * mu + p][b * mu + q] = coef * T[ell - j][p][q];
    }
  return out;
}

PolyMatrix build_sigma(const GMStructure& gm, int v0, int ell) {
  const std::size_t mu = gm.Lambda.size();
  const std::size_t M = mu * static_cast<std::size_t>(v0 + 1);
  PolyMatrix out(M, M);
  std::vector<PolyMatrix> T;
  for (int l = 0; l <= ell; ++l) T.push_back(taylor_matrix(gm, l));
  for (int a = 0; a <= v0; ++a)
    for (int b = 0; b <= a; ++b) {
      const int j = a - b;
      if (j > ell) continue;
      const RatFunc coef(binom(ell, j) * Rational(factorial(a)) / Rational(factorial(b)));
      for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = 0; q < mu; ++q) out(a * mu + p, b * mu + q) = coef * T[ell - j](p, q);
    }
  return out;
}

EigenShifts eigen_shifts(const GMStructure& gm, const std::vector<Rational>& t, double gap_tol) {
  const RMatrix S = gm.S_at(t);
  const int n = static_cast<int>(S.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = S[i][j].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw AlgebraError("eigenvalue iteration failed");
  EigenShifts out;
  Complex prod = 1;
  for (int i = 0; i < n; ++i) {
    out.eigenvalues.push_back(es.eigenvalues()[i]);
    out.taus.push_back(t[0].get_d() - es.eigenvalues()[i]);
    prod *= es.eigenvalues()[i];
  }
  const double expect = gm.det_S.evaluate_exact(gm.t_point(t)).get_d();
  out.product_rel_error = std::abs(prod - expect) / std::max(std::abs(expect), 1e-300);
  out.min_gap = n > 1 ? INFINITY : 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.min_gap = std::min(out.min_gap, std::abs(out.taus[i] - out.taus[j]));
  if (n > 1 && out.min_gap < gap_tol) throw AlgebraError("on or near discriminant/bifurcation set");
  return out;
}

ProofContext make_context(const GMStructure& gm, int K, const std::vector<Rational>& t) {
  if (K < 1) throw AlgebraError("K must be >= 1");
  ProofContext c;
  c.K = K;
  c.v0 = degree_bound_v0(gm.spec, K - 1);
  c.M = gm.mu() * (c.v0 + 1);
  c.t = t;
  c.taus = eigen_shifts(gm, t).taus;
  c.lambdas = gm.Lambda;
  return c;
}

template <class T>
std::vector<std::vector<T>> sigma_tilde(const std::vector<T>& Z, const std::vector<Rational>& lambda, int v0, int i) {
  const int mu = static_cast<int>(Z.size());
  const int M = mu * (v0 + 1);
  std::vector<std::vector<T>> out(M, std::vector<T>(M + 1, T(0)));
  for (int a = 0; a <= v0; ++a)
    for (int nu = 0; nu < mu; ++nu)
      for (int col = 0; col <= M; ++col) {
        const int k = M - col;
        if (k < a) continue;
        const int j = k - a;
        Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(j + i)));
        for (int b = i; b <= j + i - 1; ++b) c *= lambda[nu] - b;
        T z = T(1);
        for (int p = 0; p < M - k; ++p) z *= Z[nu];
        if constexpr (std::is_same_v<T, Rational>) out[a * mu + nu][col] = c * z;
        else out[a * mu + nu][col] = z * c.get_d();
      }
  return out;
}

template <class T>
T determinant_generic(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    if constexpr (std::is_same_v<T, Rational>) {
      while (p < n && m[p][c] == 0) ++p;
      if (p == n) return T(0);
    } else {
      for (std::size_t r = c + 1; r < n; ++r)
        if (magnitude(m[r][c]) > magnitude(m[p][c])) p = r;
      if (magnitude(m[p][c]) == 0) return T(0);
    }
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == T(0)) continue;
      const T f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

template <class T>
std::vector<T> normal_vector(const std::vector<std::vector<T>>& sigma) {
  const std::size_t rows = sigma.size();
  const std::size_t cols = rows + 1;
  std::vector<T> d;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::vector<T>> minor(rows, std::vector<T>(rows));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0, cc = 0; c < cols; ++c)
        if (c != j) minor[r][cc++] = sigma[r][c];
    T v = determinant_generic(std::move(minor));
    d.push_back(j % 2 ? T(-v) : v);
  }
  return d;
}

template <class T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& m, const std::vector<T>& v) {
  std::vector<T> out(m.size(), T(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

template <class T>
std::vector<T> recurrence_residual(const std::vector<T>& Z, const std::vector<Rational>& lambda, int v0, int i,
                                   const std::vector<T>& d) {
  const int mu = static_cast<int>(Z.size());
  const int M = mu * (v0 + 1);
  std::vector<T> out;
  for (int a = 0; a <= v0; ++a)
    for (int nu = 0; nu < mu; ++nu) {
      T acc = T(0);
      T zinv = T(1);
      for (int k = a; k <= M; ++k) {
        const int j = k - a;
        Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(j + i)));
        for (int b = i; b <= j + i - 1; ++b) c *= lambda[nu] - b;
        if constexpr (std::is_same_v<T, Rational>) acc += d[M - k] * c * zinv;
        else acc += d[M - k] * zinv * c.get_d();
        zinv /= Z[nu];
      }
      out.push_back(acc);
    }
  return out;
}

MinorResult sigma_tilde_and_minor(const std::vector<Rational>& Z, const std::vector<Rational>& lambda, int v0, int i) {
  MinorResult r;
  r.sigma = sigma_tilde<Rational>(Z, lambda, v0, i);
  r.d = normal_vector(r.sigma);
  r.d_M = r.d.front();
  r.orthogonal = true;
  for (const auto& v : mat_vec(r.sigma, r.d)) r.orthogonal = r.orthogonal && v == 0;
  return r;
}

bool sigma_matches_product_rule(const GMStructure& gm, int v0, int ell) {
  if (!gm.A) throw AlgebraError("product-rule oracle needs the symbolic connection");
  const std::size_t mu = gm.Lambda.size();
  const PolyMatrix sig = build_sigma(gm, v0, ell);
  for (int a = 0; a <= v0; ++a) {
    // d/dt0 (u^k G J) = k u^(k-1) G J + u^k (G' + G A) J, u = t0 - t~0
    std::map<int, PolyMatrix> terms;
    terms.emplace(a, PolyMatrix::identity(mu));
    for (int step = 0; step < ell; ++step) {
      std::map<int, PolyMatrix> next;
      auto add = [&](int k, const PolyMatrix& g) {
        auto it = next.find(k);
        if (it == next.end()) next.emplace(k, g);
        else it->second = it->second + g;
      };
      for (const auto& [k, G] : terms) {
        if (k > 0) add(k - 1, RatFunc(Rational(k)) * G);
        add(k, G.derivative(gm.t0()) + G * *gm.A);
      }
      terms = std::move(next);
    }
    for (int b = 0; b <= v0; ++b) {
      const auto it = terms.find(b);
      for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = 0; q < mu; ++q) {
          const RatFunc want = it == terms.end() ? RatFunc(Rational(0)) : it->second(p, q);
          if (!(want - sig(a * mu + p, b * mu + q)).reduced().num().is_zero()) return false;
        }
    }
  }
  return true;
}

MultiPoly bifurcation_poly(const GMStructure& gm) {
  if (gm.mu() == 1) return MultiPoly(gm.flat.t_names, Rational(1));
  return monic_discriminant(gm.det_S, gm.t0()).embedded(gm.flat.t_names);
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dd(1, den);
  const long q = dd(rng);
  std::uniform_int_distribution<long> nd(lo * q, hi * q);
  return make_rational(nd(rng), q);
}

template std::vector<std::vector<Rational>> sigma_tilde(const std::vector<Rational>&, const std::vector<Rational>&, int, int);
template std::vector<std::vector<double>> sigma_tilde(const std::vector<double>&, const std::vector<Rational>&, int, int);
template std::vector<std::vector<Complex>> sigma_tilde(const std::vector<Complex>&, const std::vector<Rational>&, int, int);
template Rational determinant_generic(std::vector<std::vector<Rational>>);
template double determinant_generic(std::vector<std::vector<double>>);
template Complex determinant_generic(std::vector<std::vector<Complex>>);
template std::vector<Rational> normal_vector(const std::vector<std::vector<Rational>>&);
template std::vector<double> normal_vector(const std::vector<std::vector<double>>&);
template std::vector<Complex> normal_vector(const std::vector<std::vector<Complex>>&);
template std::vector<Rational> mat_vec(const std::vector<std::vector<Rational>>&, const std::vector<Rational>&);
template std::vector<double> mat_vec(const std::vector<std::vector<double>>&, const std::vector<double>&);
template std::vector<Complex> mat_vec(const std::vector<std::vector<Complex>>&, const std::vector<Complex>&);
template std::vector<Rational> recurrence_residual(const std::vector<Rational>&, const std::vector<Rational>&, int, int,
                                                   const std::vector<Rational>&);
template std::vector<Complex> recurrence_residual(const std::vector<Complex>&, const std::vector<Rational>&, int, int,
                                                  const std::vector<Complex>&);
template std::vector<double> recurrence_residual(const std::vector<double>&, const std::vector<Rational>&, int, int,
                                                 const std::vector<double>&);

}  // namespace adeflat
