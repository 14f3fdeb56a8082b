#pragma once

#include <vector>

#include "exactalg/ratfunc.hpp"

namespace adeflat {

/// Dense matrix of rational functions.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, RatFunc(Rational(0))) {}
  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const std::vector<Rational>& d);
  static PolyMatrix from_polys(const std::vector<std::vector<MultiPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const RatFunc& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix transpose() const;
  PolyMatrix derivative(const std::string& var) const;
  PolyMatrix evaluate(const std::map<std::string, Rational>& values) const;
  PolyMatrix reduced() const;
  bool is_zero() const;
  bool is_polynomial() const;
  /// Polynomial entries; throws if some entry is not a polynomial.
  std::vector<std::vector<MultiPoly>> polys() const;

  RatFunc determinant() const;
  /// Inverse via fraction-free elimination; throws if identically singular.
  PolyMatrix inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

/// Determinant by Bareiss fraction-free elimination with exact multivariate division.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// c_0..c_n with det(z id - a) = sum_k c_k z^k (c_n = 1), division-free apart from 1/k.
std::vector<MultiPoly> charpoly_coefficients(const std::vector<std::vector<MultiPoly>>& a);
/// Determinant of a rational matrix.
Rational rational_determinant(std::vector<std::vector<Rational>> m);

/// Fraction-free elimination: returns (Y, p) with M Y = p B, p a nonzero
/// polynomial (the last Bareiss pivot, +-det M). Throws if M is singular.
std::pair<std::vector<std::vector<MultiPoly>>, MultiPoly> fraction_free_solve(std::vector<std::vector<MultiPoly>> m,
                                                                              const std::vector<std::vector<MultiPoly>>& b);

/// Exact solution of M x = b (several right-hand sides as columns of B).
PolyMatrix solve_linear(const PolyMatrix& m, const PolyMatrix& b);
std::vector<RatFunc> solve_linear(const PolyMatrix& m, const std::vector<RatFunc>& b);

/// Sylvester resultant with respect to var; throws if either input has degree 0 in var.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var);

/// prod_{i<j}(r_i - r_j)^2 for a polynomial monic in var.
MultiPoly monic_discriminant(const MultiPoly& p, const std::string& var);

/// Rank of a rational matrix.
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

/// Basis of the right null space of a rational matrix (reduced row echelon form).
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> m, std::size_t cols);

}  // namespace adeflat
