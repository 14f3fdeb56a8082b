#pragma once

#include <complex>
#include <random>

#include "gaussmanin/gaussmanin.hpp"

namespace adeflat {

using RMatrix = std::vector<std::vector<Rational>>;
using Complex = std::complex<double>;

/// d^l J / dt0^l = T_l J with T_0 = id, T_{l+1} = S^-1 (Lambda - l) T_l.
PolyMatrix taylor_matrix(const GMStructure& gm, int ell);
/// T_l at a rational point t (basis order); throws AlgebraError on the discriminant.
RMatrix taylor_matrix_at(const GMStructure& gm, int ell, const std::vector<Rational>& t);
/// The closed form S^-l (Lambda-(l-1)) ... Lambda, exact only when S and Lambda commute.
RMatrix taylor_matrix_commuting_at(const GMStructure& gm, int ell, const std::vector<Rational>& t);

/// Sigma^(l) for J~ = ((t0 - t~0)^a J), a = 0..v0: block (a, b) = C(l, a-b) a!/b! T_{l-(a-b)}.
RMatrix build_sigma_at(const GMStructure& gm, int v0, int ell, const std::vector<Rational>& t);
PolyMatrix build_sigma(const GMStructure& gm, int v0, int ell);

struct ProofContext {
  int K = 1;
  int v0 = 0;
  int M = 1;
  std::vector<Rational> t;     // (t~0, t')
  std::vector<Complex> taus;   // t~0 - eigenvalues of S
  std::vector<Rational> lambdas;
};

ProofContext make_context(const GMStructure& gm, int K, const std::vector<Rational>& t);

struct EigenShifts {
  std::vector<Complex> eigenvalues;  // of S(t~0, t')
  std::vector<Complex> taus;
  double min_gap = 0;                 // min |tau_i - tau_j|
  double product_rel_error = 0;       // |prod eig - c Delta| / |c Delta|
};
/// Throws AlgebraError("on or near discriminant/bifurcation set") if two taus coincide within gap_tol.
EigenShifts eigen_shifts(const GMStructure& gm, const std::vector<Rational>& t, double gap_tol = 1e-9);

/// Sigma~^(i): M rows (block a, component nu), M+1 columns for d_M, ..., d_0;
/// entry [k >= a] Z_nu^(M-k) prod_{b=i}^{k-a+i-1}(lambda_nu - b) / (k-a+i)!, Z = t~0 - tau.
template <class T>
std::vector<std::vector<T>> sigma_tilde(const std::vector<T>& Z, const std::vector<Rational>& lambda, int v0, int i);

template <class T>
T determinant_generic(std::vector<std::vector<T>> m);

/// Normal vector d_j = (-1)^j det(Sigma~ without column j), j = 0..M (d_M first).
template <class T>
std::vector<T> normal_vector(const std::vector<std::vector<T>>& sigma);

template <class T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& m, const std::vector<T>& v);

/// Rows of the eigen-frame relation sum_l d_l Z^-l prod_{b=i}^{l+i-1}(lambda-b)/(l+i)! shifted by block a.
template <class T>
std::vector<T> recurrence_residual(const std::vector<T>& Z, const std::vector<Rational>& lambda, int v0, int i,
                                   const std::vector<T>& d);

struct MinorResult {
  RMatrix sigma;
  std::vector<Rational> d;
  Rational d_M;
  bool orthogonal = false;  // Sigma~ d == 0 exactly
};
MinorResult sigma_tilde_and_minor(const std::vector<Rational>& Z, const std::vector<Rational>& lambda, int v0, int i);

/// Sigma^(l) against repeated product-rule differentiation of (t0 - t~0)^a J using dJ = A J.
bool sigma_matches_product_rule(const GMStructure& gm, int v0, int ell);

/// Pi_{i<j}(tau_i - tau_j)^2 = discriminant of det S in t0.
MultiPoly bifurcation_poly(const GMStructure& gm);

/// Random rational in [lo, hi] with denominator up to den.
Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den);

}  // namespace adeflat
