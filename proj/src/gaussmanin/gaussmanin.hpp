#pragma once

#include <optional>

#include "catalog/milnor.hpp"
#include "exactalg/polymatrix.hpp"
#include "flatcoords/flatcoords.hpp"

namespace adeflat {

using PolyGrid = std::vector<std::vector<MultiPoly>>;

/// G dx^dy / H^p reduced to pole order 1 where possible.
struct PoleReduction {
  /// by_order[p-1][k]: coefficient of m_k at pole order p.
  std::vector<std::vector<MultiPoly>> by_order;
  /// Division certificate at each order, highest first.
  std::vector<Division> chain;
  const std::vector<MultiPoly>& coeffs() const { return by_order.front(); }
};

PoleReduction reduce_pole_order(const SingularitySpec& spec, const MultiPoly& G, int pole_order = 1);

/// a*H_x + b*H_y + sum rem_k m_k == G exactly.
bool check_certificate(const SingularitySpec& spec, const MultiPoly& G, const Division& d);

/// Level chain of g for the deformation f: rows r_k over the monomial basis.
/// g_0 = g, g_k = a_k f_x + b_k f_y + r_k.m, g_{k+1} = d(a_k)/dx + d(b_k)/dy.
std::vector<std::vector<MultiPoly>> level_chain(const SingularitySpec& spec, const JacobianDivider& div,
                                                const MultiPoly& g, const MultiPoly& fx, const MultiPoly& fy);

struct DeriveOptions {
  bool connection = true;     // symbolic A = S^-1 Lambda
  bool discriminant = true;   // compare det S with the catalog discriminant
  bool dubrovin = true;       // coefficients of det(S + lambda)
};

struct GMStructure {
  SingularitySpec spec;
  FlatMap flat;
  MultiPoly F;                   // H(x, y; s(t)) over x, y, t
  std::vector<Rational> Lambda;  // diagonal
  std::vector<Rational> residue;  // diagonal of the first-level residue minus 1 (must equal Lambda)
  PolyGrid R0;                   // S_tilde - t0 id, free of t0
  PolyMatrix S_tilde;
  PolyMatrix P;                  // K = P J, entries in t'
  std::optional<PolyMatrix> A;   // dJ/dt0 = A J
  MultiPoly det_S;               // det S_tilde over t
  std::optional<MultiPoly> Delta_s;  // normalized discriminant in s
  std::optional<MultiPoly> Delta_t;  // Delta(s(t))
  Rational constant_c = 0;       // det S_tilde = c * Delta_t
  std::vector<MultiPoly> g;      // det(S + z) = sum_i z^{mu-i} g_i, g_0 = 1, g_mu = det S

  const std::string& t0() const { return flat.t_names.front(); }
  int mu() const { return spec.mu(); }
  /// S_tilde at a rational point given in basis order of t.
  std::vector<std::vector<Rational>> S_at(const std::vector<Rational>& t) const;
  std::map<std::string, Rational> t_point(const std::vector<Rational>& t) const;
};

/// Builds the Gauss-Manin data and checks the structural identities; throws
/// AlgebraError carrying the offending matrix on failure.
GMStructure derive_connection(const SingularitySpec& spec, const FlatMap& flat, const DeriveOptions& opt = {});

struct IdentityReport {
  bool dS_dt0_is_identity = false;
  bool det_matches_discriminant = false;
  bool S_times_A_is_Lambda = false;
  bool P_polynomial_t0_free = false;
  bool S_weighted_homogeneous = false;
  bool residue_is_Lambda = false;
  bool dubrovin_degrees = false;
};
IdentityReport check_identities(const GMStructure& gm);

/// Exact check of the scalar operator O = sum_k (-1)^k g_k prod_{b=k}^{mu-1}(L-b) d^k
/// on the eigen-frame formal solutions (t0-tau)^L: applying O to (t0-tau)^L gives
/// L^(mu) (t0-tau)^(L-mu) det((t0-tau) id - S) (times (-1)^mu), a polynomial in tau
/// free of t0 and vanishing at every eigen-shift.
struct DubrovinCheck {
  bool exact = false;
  bool t0_free = false;
  std::string residual;  // canonical text of the reduced residual
};
DubrovinCheck dubrovin_check(const GMStructure& gm, int component);

/// Coefficients of the scalar operator: (Delta-normalized) g_mu, ..., g_1 and the shift factors.
struct DubrovinOperator {
  std::vector<MultiPoly> g;                 // g_0..g_mu
  std::vector<std::vector<Rational>> shift;  // shift[k][nu] = prod_{b=k}^{mu-1}(lambda_nu - b)
};
DubrovinOperator dubrovin_ode(const GMStructure& gm);

/// Coefficients c_nu(t) with I[x^k1 y^k2] = sum_nu c_nu J_nu; throws if the
/// t0-degree exceeds floor((rho1+rho2)(k1+k2)).
std::vector<MultiPoly> reduce_monomial_to_basis(const GMStructure& gm, int k1, int k2);
int degree_bound_v0(const SingularitySpec& spec, int k1_plus_k2);

/// Helpers on polynomial grids.
PolyGrid grid_mul(const PolyGrid& a, const PolyGrid& b);
PolyMatrix grid_to_matrix(const PolyGrid& g);

}  // namespace adeflat
