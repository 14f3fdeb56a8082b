#pragma once

#include "catalog/catalog.hpp"

namespace adeflat {

struct BoundReport {
  SingularityClass cls;
  int mu = 0;
  Rational rho1, rho2;
  int K = 0;
  int v0 = 0;
  int M = 0;
  int N_bound = 0;
  int derivative_bound = 0;
  BigInt quartic_reference;  // (n^4 + n^2 - 2)/2 at n = K
};

/// R = -P_y + Q_x, the integrand of the t0-derivative of the integral of P dx + Q dy.
MultiPoly curl_reduce(const MultiPoly& P, const MultiPoly& Q);

/// Zero-multiplicity bound mu(1 + floor((rho1+rho2)(K-1))) - 1; throws std::invalid_argument for K < 1.
BoundReport bound(const SingularityClass& cls, int K);
BigInt quartic_reference(int n);

struct ComparisonRow {
  int n = 0;
  int worst_bound = 0;            // max over ADE classes with mu <= n, at K = n
  std::string worst_class;
  int envelope = 0;               // n(1 + floor(5/6 (n-1))) - 1
  int quadratic = 0;              // n^2 - 1
  BigInt quartic;
};
/// Rows n = 1..n_max; classes up to mu = n.
std::vector<ComparisonRow> comparison_table(int n_max);

/// True if N_bound is nondecreasing in K = 1..K_max for every class with mu <= max_mu.
bool bound_monotone(int max_mu, int K_max, std::string* failure = nullptr);

}  // namespace adeflat
