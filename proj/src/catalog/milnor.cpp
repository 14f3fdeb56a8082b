#include "catalog/milnor.hpp"

#include <algorithm>
#include <set>

#include "exactalg/polymatrix.hpp"

namespace adeflat {

std::vector<std::pair<int, int>> monomials_of_degree(const Rational& rho1, const Rational& rho2, const Rational& d) {
  std::vector<std::pair<int, int>> out;
  if (d < 0) return out;
  for (int i = 0; rho1 * i <= d; ++i) {
    const Rational rest = (d - rho1 * i) / rho2;
    if (is_integer(rest)) out.emplace_back(i, static_cast<int>(to_long(rest.get_num())));
  }
  return out;
}

std::map<std::pair<int, int>, MultiPoly> split_xy(const MultiPoly& p) {
  const auto& v = p.vars();
  if (v.size() < 2 || v[0] != "x" || v[1] != "y") throw AlgebraError("split_xy: variables must start with x, y");
  std::map<std::pair<int, int>, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    auto key = std::make_pair(e[0], e[1]);
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, MultiPoly(v)).first;
    Exponent rest = e;
    rest[0] = rest[1] = 0;
    it->second.add_term(rest, c);
  }
  return out;
}

namespace {

// Particular solution of A u = b (free variables zero); nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> u(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = b[i];
  return u;
}

MultiPoly xy_monomial(int i, int j) { return MultiPoly::monomial({"x", "y"}, {i, j}); }

// Rows: coefficient vectors (over monomials of degree d) of m*hx, m*hy.
std::vector<std::vector<Rational>> ideal_rows(const MultiPoly& hx, const MultiPoly& hy, const Rational& rho1,
                                              const Rational& rho2, const Rational& d,
                                              const std::vector<std::pair<int, int>>& monos) {
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  std::vector<std::vector<Rational>> rows;
  auto push = [&](const MultiPoly& p) {
    std::vector<Rational> row(monos.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) row.at(index.at({e[0], e[1]})) = c;
    rows.push_back(std::move(row));
  };
  for (auto [i, j] : monomials_of_degree(rho1, rho2, d - (1 - rho1))) push((xy_monomial(i, j) * hx).embedded({"x", "y"}));
  for (auto [i, j] : monomials_of_degree(rho1, rho2, d - (1 - rho2))) push((xy_monomial(i, j) * hy).embedded({"x", "y"}));
  return rows;
}

std::set<Rational> degrees_up_to(const Rational& rho1, const Rational& rho2, const Rational& top) {
  std::set<Rational> out;
  for (int i = 0; rho1 * i <= top; ++i)
    for (int j = 0; rho1 * i + rho2 * j <= top; ++j) out.insert(rho1 * i + rho2 * j);
  return out;
}

}  // namespace

int milnor_quotient_dim(const MultiPoly& h0_in, const Rational& rho1, const Rational& rho2) {
  const MultiPoly h0 = h0_in.embedded({"x", "y"});
  const MultiPoly hx = h0.derivative("x"), hy = h0.derivative("y");
  const Rational socle = 2 - 2 * rho1 - 2 * rho2;
  int dim = 0;
  for (const Rational& d : degrees_up_to(rho1, rho2, socle + 1)) {
    const auto monos = monomials_of_degree(rho1, rho2, d);
    const int piece = static_cast<int>(monos.size() - rational_rank(ideal_rows(hx, hy, rho1, rho2, d, monos)));
    if (d > socle && piece > 0) throw AlgebraError("Milnor algebra is not finite dimensional (non-isolated singularity)");
    dim += piece;
  }
  return dim;
}

int milnor_quotient_dim(const SingularitySpec& spec) { return milnor_quotient_dim(spec.H0, spec.rho1, spec.rho2); }

bool basis_is_milnor_basis(const SingularitySpec& spec) {
  const MultiPoly hx = spec.H0.derivative("x"), hy = spec.H0.derivative("y");
  const Rational socle = 2 - 2 * spec.rho1 - 2 * spec.rho2;
  int seen = 0;
  for (const Rational& d : degrees_up_to(spec.rho1, spec.rho2, socle)) {
    const auto monos = monomials_of_degree(spec.rho1, spec.rho2, d);
    auto rows = ideal_rows(hx, hy, spec.rho1, spec.rho2, d, monos);
    const std::size_t ideal_rank = rational_rank(rows);
    std::size_t nb = 0;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (spec.index_of({monos[k].first, monos[k].second}) >= 0) {
        std::vector<Rational> row(monos.size(), Rational(0));
        row[k] = 1;
        rows.push_back(std::move(row));
        ++nb;
      }
    if (rational_rank(rows) != monos.size() || ideal_rank + nb != monos.size()) return false;
    seen += static_cast<int>(nb);
  }
  return seen == spec.mu();
}

JacobianDivider::JacobianDivider(const SingularitySpec& spec)
    : spec_(spec), hx_(spec.H0.derivative("x").embedded({"x", "y"})), hy_(spec.H0.derivative("y").embedded({"x", "y"})) {}

const JacobianDivider::Piece& JacobianDivider::decompose(int i, int j) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find({i, j});
  if (it != cache_.end()) return it->second;
  const Rational& r1 = spec_.rho1;
  const Rational& r2 = spec_.rho2;
  Piece piece{MultiPoly({"x", "y"}), MultiPoly({"x", "y"}), std::vector<Rational>(spec_.basis.size(), Rational(0))};
  const int k0 = spec_.index_of({i, j});
  if (k0 >= 0) {
    piece.r[k0] = 1;
    return cache_.emplace(std::make_pair(i, j), std::move(piece)).first->second;
  }
  const Rational d = spec_.xy_weight(i, j);
  const auto monos = monomials_of_degree(r1, r2, d);
  const auto am = monomials_of_degree(r1, r2, d - (1 - r1));
  const auto bm = monomials_of_degree(r1, r2, d - (1 - r2));
  std::vector<int> rm;
  for (std::size_t k = 0; k < spec_.basis.size(); ++k)
    if (spec_.xy_weight(spec_.basis[k][0], spec_.basis[k][1]) == d) rm.push_back(static_cast<int>(k));
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  const std::size_t ncols = am.size() + bm.size() + rm.size();
  std::vector<std::vector<Rational>> a(monos.size(), std::vector<Rational>(ncols, Rational(0)));
  std::size_t col = 0;
  auto put = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) a[index.at({e[0], e[1]})][col] = c;
    ++col;
  };
  for (auto [p, q] : am) put((xy_monomial(p, q) * hx_).embedded({"x", "y"}));
  for (auto [p, q] : bm) put((xy_monomial(p, q) * hy_).embedded({"x", "y"}));
  for (int k : rm) put(xy_monomial(spec_.basis[k][0], spec_.basis[k][1]));
  std::vector<Rational> b(monos.size(), Rational(0));
  b[index.at({i, j})] = 1;
  auto u = solve_rational(std::move(a), std::move(b));
  if (!u)
    throw AlgebraError("division stall: monomial x^" + std::to_string(i) + "*y^" + std::to_string(j) +
                       " not reducible against the Jacobian ideal and basis");
  col = 0;
  for (auto [p, q] : am) piece.a.add_term({p, q}, (*u)[col++]);
  for (auto [p, q] : bm) piece.b.add_term({p, q}, (*u)[col++]);
  for (int k : rm) piece.r[k] = (*u)[col++];
  return cache_.emplace(std::make_pair(i, j), std::move(piece)).first->second;
}

Division JacobianDivider::divide(const MultiPoly& g_in, const MultiPoly& fx_in, const MultiPoly& fy_in) const {
  std::vector<std::string> vars = merge_vars({"x", "y"}, g_in.vars());
  vars = merge_vars(vars, fx_in.vars());
  vars = merge_vars(vars, fy_in.vars());
  MultiPoly g = g_in.embedded(vars);
  const MultiPoly fx = fx_in.embedded(vars), fy = fy_in.embedded(vars);
  Division out{MultiPoly(vars), MultiPoly(vars), std::vector<MultiPoly>(spec_.basis.size(), MultiPoly(vars))};
  std::optional<Rational> last;
  while (!g.is_zero()) {
    const auto parts = split_xy(g);
    Rational dmax = -1;
    for (const auto& [ij, c] : parts) dmax = std::max(dmax, spec_.xy_weight(ij.first, ij.second));
    if (last && dmax >= *last) throw AlgebraError("division stall: x,y-weight did not decrease");
    last = dmax;
    for (const auto& [ij, c] : parts) {
      if (spec_.xy_weight(ij.first, ij.second) != dmax) continue;
      const Piece& piece = decompose(ij.first, ij.second);
      if (!piece.a.is_zero()) {
        const MultiPoly ca = c * piece.a.embedded(vars);
        out.a += ca;
        g -= ca * fx;
      }
      if (!piece.b.is_zero()) {
        const MultiPoly cb = c * piece.b.embedded(vars);
        out.b += cb;
        g -= cb * fy;
      }
      for (std::size_t k = 0; k < piece.r.size(); ++k) {
        if (piece.r[k] == 0) continue;
        const MultiPoly ck = c * piece.r[k];
        out.rem[k] += ck;
        Exponent e(vars.size(), 0);
        e[0] = spec_.basis[k][0];
        e[1] = spec_.basis[k][1];
        g -= ck * MultiPoly::monomial(vars, e);
      }
    }
  }
  return out;
}

}  // namespace adeflat
