#include "exactalg/polymatrix.hpp"

namespace adeflat {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(Rational(1));
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Rational>& d) {
  PolyMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = RatFunc(d[i]);
  return m;
}

PolyMatrix PolyMatrix::from_polys(const std::vector<std::vector<MultiPoly>>& rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = RatFunc(rows[i][j]);
  return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix shape mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch in *");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RatFunc acc(Rational(0));
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  return out;
}

PolyMatrix operator*(const RatFunc& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (auto& e : out.a_) e *= c;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (a.a_[k] != b.a_[k]) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::derivative(const std::string& var) const {
  PolyMatrix d = *this;
  for (auto& e : d.a_) e = e.derivative(var);
  return d;
}

PolyMatrix PolyMatrix::evaluate(const std::map<std::string, Rational>& values) const {
  PolyMatrix d = *this;
  for (auto& e : d.a_) e = e.evaluate(values);
  return d;
}

PolyMatrix PolyMatrix::reduced() const {
  PolyMatrix d = *this;
  for (auto& e : d.a_) e = e.reduced();
  return d;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_polynomial() const {
  for (const auto& e : a_)
    if (!e.as_polynomial()) return false;
  return true;
}

std::vector<std::vector<MultiPoly>> PolyMatrix::polys() const {
  std::vector<std::vector<MultiPoly>> out(rows_, std::vector<MultiPoly>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      auto p = (*this)(i, j).as_polynomial();
      if (!p) throw AlgebraError("matrix entry is not a polynomial: " + (*this)(i, j).to_string());
      out[i][j] = *p;
    }
  return out;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly({}, Rational(1));
  std::vector<std::string> vars;
  for (const auto& row : m) {
    if (row.size() != n) throw AlgebraError("determinant of non-square matrix");
    for (const auto& e : row) vars = merge_vars(vars, e.vars());
  }
  for (auto& row : m)
    for (auto& e : row) e = e.embedded(vars);
  int sign = 1;
  MultiPoly prev(vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(vars);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_divide(v, prev);
        if (!q) throw AlgebraError("Bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

std::vector<MultiPoly> charpoly_coefficients(const std::vector<std::vector<MultiPoly>>& a) {
  const std::size_t n = a.size();
  std::vector<std::string> vars;
  for (const auto& row : a) {
    if (row.size() != n) throw AlgebraError("characteristic polynomial of non-square matrix");
    for (const auto& e : row) vars = merge_vars(vars, e.vars());
  }
  std::vector<std::vector<MultiPoly>> A(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j].embedded(vars);
  std::vector<MultiPoly> c(n + 1, MultiPoly(vars));
  c[n] = MultiPoly(vars, Rational(1));
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
  std::vector<std::vector<MultiPoly>> Mk(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i) Mk[i][i] = c[n];
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<MultiPoly>> AM(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (A[i][l].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!Mk[l][j].is_zero()) AM[i][j] += A[i][l] * Mk[l][j];
      }
    MultiPoly tr(vars);
    for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = tr * Rational(-1, static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k];
    Mk = std::move(AM);
  }
  return c;
}

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

RatFunc PolyMatrix::determinant() const {
  if (rows_ != cols_) throw AlgebraError("determinant of non-square matrix");
  std::vector<std::vector<MultiPoly>> m(rows_, std::vector<MultiPoly>(cols_));
  MultiPoly scale({}, Rational(1));
  for (std::size_t i = 0; i < rows_; ++i) {
    MultiPoly rowden({}, Rational(1));
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).den().is_constant() && !exact_divide(rowden, (*this)(i, j).den()))
        rowden = rowden * (*this)(i, j).den();
    for (std::size_t j = 0; j < cols_; ++j) {
      const RatFunc& e = (*this)(i, j);
      auto q = exact_divide(rowden, e.den());
      m[i][j] = e.num() * *q;
    }
    scale = scale * rowden;
  }
  return RatFunc(bareiss_determinant(std::move(m)), scale).reduced();
}

std::pair<std::vector<std::vector<MultiPoly>>, MultiPoly> fraction_free_solve(std::vector<std::vector<MultiPoly>> m,
                                                                              const std::vector<std::vector<MultiPoly>>& b) {
  const std::size_t n = m.size();
  const std::size_t r = b.empty() ? 0 : b[0].size();
  if (b.size() != n) throw AlgebraError("solve_linear: right-hand side has wrong length");
  const std::size_t w = n + r;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw AlgebraError("solve_linear: matrix not square");
    for (const auto& e : m[i]) vars = merge_vars(vars, e.vars());
    for (const auto& e : b[i]) vars = merge_vars(vars, e.vars());
  }
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(w));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < w; ++j) a[i][j] = (j < n ? m[i][j] : b[i][j - n]).embedded(vars);
  MultiPoly prev(vars, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) throw AlgebraError("solve_linear: matrix is identically singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        auto q = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        if (!q) throw AlgebraError("solve_linear: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MultiPoly(vars);
    }
    prev = a[k][k];
  }
  // y = p x is polynomial, p the last pivot
  const MultiPoly piv = a[n - 1][n - 1];
  std::vector<std::vector<MultiPoly>> y(n, std::vector<MultiPoly>(r));
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      MultiPoly acc = piv * a[ii][n + c];
      for (std::size_t j = ii + 1; j < n; ++j)
        if (!a[ii][j].is_zero() && !y[j][c].is_zero()) acc -= a[ii][j] * y[j][c];
      auto q = exact_divide(acc, a[ii][ii]);
      if (!q) throw AlgebraError("solve_linear: inexact back substitution");
      y[ii][c] = std::move(*q);
    }
  }
  return {std::move(y), piv};
}

PolyMatrix solve_linear(const PolyMatrix& mat, const PolyMatrix& rhs) {
  const std::size_t n = mat.rows();
  if (mat.cols() != n) throw AlgebraError("solve_linear: matrix not square");
  if (rhs.rows() != n) throw AlgebraError("solve_linear: right-hand side has wrong length");
  const std::size_t r = rhs.cols();
  // clear denominators row by row
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n)), b(n, std::vector<MultiPoly>(r));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly rowden({}, Rational(1));
    auto take = [&](const RatFunc& e) {
      if (!e.den().is_constant() && !exact_divide(rowden, e.den())) rowden = rowden * e.den();
    };
    for (std::size_t j = 0; j < n; ++j) take(mat(i, j));
    for (std::size_t j = 0; j < r; ++j) take(rhs(i, j));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mat(i, j).num() * *exact_divide(rowden, mat(i, j).den());
    for (std::size_t j = 0; j < r; ++j) b[i][j] = rhs(i, j).num() * *exact_divide(rowden, rhs(i, j).den());
  }
  auto [y, piv] = fraction_free_solve(std::move(a), b);
  PolyMatrix x(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r; ++c) x(i, c) = RatFunc(y[i][c], piv).reduced();
  return x;
}

std::vector<RatFunc> solve_linear(const PolyMatrix& m, const std::vector<RatFunc>& b) {
  PolyMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  PolyMatrix x = solve_linear(m, rhs);
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(x(i, 0));
  return out;
}

PolyMatrix PolyMatrix::inverse() const { return solve_linear(*this, identity(rows_)); }

MultiPoly resultant(const MultiPoly& a_in, const MultiPoly& b_in, const std::string& var) {
  auto vars = merge_vars(a_in.vars(), b_in.vars());
  const MultiPoly a = a_in.embedded(vars), b = b_in.embedded(vars);
  const int m = a.degree(var), n = b.degree(var);
  if (m <= 0 || n <= 0) throw AlgebraError("resultant: input of degree 0 in '" + var + "'");
  const auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = ca[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = cb[n - k];
  return bareiss_determinant(std::move(s));
}

MultiPoly monic_discriminant(const MultiPoly& p, const std::string& var) {
  const int n = p.degree(var);
  if (n <= 0) throw AlgebraError("discriminant of constant polynomial");
  const MultiPoly lead = p.coefficients_in(var)[n];
  if (!(lead.is_constant() && lead.constant_term() == 1)) throw AlgebraError("monic_discriminant: not monic");
  if (n == 1) return MultiPoly(p.vars(), Rational(1));
  MultiPoly r = resultant(p, p.derivative(var), var);
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace adeflat
