#pragma once

#include <optional>

#include "gaussmanin/gaussmanin.hpp"
#include "periods/oval.hpp"

namespace adeflat {

/// Decimal or p/q text to an exact rational ("-0.25" -> -1/4).
Rational parse_decimal(const std::string& text);
/// Exact rational value of a double.
Rational exact_rational(double v);

struct PeriodSample {
  std::vector<Rational> s, t;
  OvalTrace trace;
  std::vector<double> K, J;  // basis order
  double K_err = 0, J_err = 0;
};

struct PeriodOptions {
  QuadOptions quad;
  TraceOptions trace;
  int oval = 0;                   // index into find_ovals
  std::optional<Point2> center;   // overrides the oval index
};

/// Periods of the basis monomials (K) and of dF/dt_nu (J) over one real oval.
class PeriodEvaluator {
 public:
  explicit PeriodEvaluator(const GMStructure& gm);

  /// Interior points of the real ovals at s.
  std::vector<Point2> oval_centers(const std::vector<Rational>& s) const;
  PeriodSample at_s(const std::vector<Rational>& s, const PeriodOptions& opt = {}) const;
  PeriodSample at_t(const std::vector<Rational>& t, const PeriodOptions& opt = {}) const;
  /// Periods of arbitrary numerators (over x, y and the s-variables) on the sample's oval.
  std::vector<double> integrate(const PeriodSample& ps, const std::vector<MultiPoly>& numerators,
                                const QuadOptions& q = {}) const;
  std::vector<double> t_of_s(const std::vector<Rational>& s) const;
  const GMStructure& gm() const { return gm_; }

 private:
  Point2 pick_center(const std::vector<Rational>& s, const PeriodOptions& opt) const;
  const GMStructure& gm_;
  std::vector<MultiPoly> phi_;  // dF/dt_nu over x, y, t
};

struct VerifyOptions {
  PeriodOptions periods;
  double gate = 1e-5;
  double taylor_gate = 1e-4;
  double dubrovin_gate = 1e-4;
  double h_factor = 1e-3;  // h = h_factor * distance to the nearest root of det S in t0
  bool dubrovin = true;
};

struct VerifyReport {
  std::vector<Rational> s, t;
  Point2 center{};
  double distance = 0;   // to the nearest root of det S in t0
  double h = 0;
  std::vector<double> K, J, dJ, d2J;
  double gm_residual = 0;         // |S dJ - Lambda J| / |Lambda J|
  double gm_residual_w = 0;       // same with diag(w)
  double basis_residual = 0;      // |K - P J| / |K|
  double taylor2_residual = 0;    // |J'' - T_2 J| / |T_2 J|
  std::vector<double> dubrovin_residual;  // per component
  std::vector<std::vector<Rational>> annihilators;  // per component, coefficients of d^0..d^mu
  double richardson_error = 0;
  bool passed = false;
  std::vector<Point2> polyline;
};

/// Finite-difference check of the period identities at a real sample s.
/// Throws PeriodError("stencil crosses discriminant") if the oval is lost inside the stencil.
VerifyReport verify_gm(const PeriodEvaluator& ev, const std::vector<Rational>& s, const VerifyOptions& opt = {});

/// Weights for the derivatives 0..kmax at 0 from samples at the given offsets.
std::vector<std::vector<double>> fornberg_weights(const std::vector<double>& offsets, int kmax);

}  // namespace adeflat
