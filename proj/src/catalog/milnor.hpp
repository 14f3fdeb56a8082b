#pragma once

#include <map>
#include <mutex>

#include "catalog/catalog.hpp"

namespace adeflat {

/// Result of one division g = a*f_x + b*f_y + sum_k rem[k] * m_k.
struct Division {
  MultiPoly a, b;
  std::vector<MultiPoly> rem;  // coefficient of each basis monomial, free of x and y
};

/// Division modulo the Jacobian ideal of a deformation f of the
/// quasihomogeneous H0, driven by the leading forms of H0.
///
/// All polynomials live over a common variable list whose first two
/// entries are x and y.
class JacobianDivider {
 public:
  explicit JacobianDivider(const SingularitySpec& spec);

  /// Reduces g against (fx, fy); fx, fy must have top x,y-weight part equal to H0_x, H0_y.
  Division divide(const MultiPoly& g, const MultiPoly& fx, const MultiPoly& fy) const;

  /// Homogeneous decomposition x^i y^j = a*H0_x + b*H0_y + sum r_k m_k (a, b over {x,y}).
  struct Piece {
    MultiPoly a, b;
    std::vector<Rational> r;
  };
  const Piece& decompose(int i, int j) const;

 private:
  const SingularitySpec& spec_;
  MultiPoly hx_, hy_;
  mutable std::map<std::pair<int, int>, Piece> cache_;
  mutable std::mutex mutex_;
};

/// Splits p (variables x, y first) into its x,y-monomials with coefficient polynomials.
std::map<std::pair<int, int>, MultiPoly> split_xy(const MultiPoly& p);

/// Monomials x^i y^j with rho1*i + rho2*j == d.
std::vector<std::pair<int, int>> monomials_of_degree(const Rational& rho1, const Rational& rho2, const Rational& d);

}  // namespace adeflat
