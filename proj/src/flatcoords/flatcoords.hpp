#pragma once

#include "catalog/catalog.hpp"

namespace adeflat {

/// Which lattice/coefficient convention to use.
///   Corrected: A/E6/E8 lattice Z(1/rho1,0)+Z(0,1/rho2); D/E7 with
///              kappa = rho2/(1-rho1) in place of rho2.
///   Printed:   A/E6/E8 lattice Z(1/rho1,0)+Z(0,1/rho1); D/E7 with rho2.
enum class LatticeConvention { Corrected, Printed };

/// Gamma(top)/Gamma(bottom) for top - bottom a nonnegative integer (rising factorial).
Rational gamma_ratio(const Rational& top, const Rational& bottom);

bool lattice_member(const SingularitySpec& spec, const Nu& nu, const Nu& beta,
                    LatticeConvention conv = LatticeConvention::Corrected);

/// C_nu(beta): zero off the lattice; throws AlgebraError("lattice inconsistency ...")
/// if the sign exponent is not an integer on a lattice member.
Rational coeff_C(const SingularitySpec& spec, const Nu& nu, const Nu& beta,
                 LatticeConvention conv = LatticeConvention::Corrected);

/// All alpha in N^mu (basis order) with <w, alpha> = target.
std::vector<std::vector<int>> enumerate_alpha(const SingularitySpec& spec, const Rational& target);

/// The linear function ell(alpha).
Nu ell(const SingularitySpec& spec, const std::vector<int>& alpha);

struct FlatMap {
  std::vector<std::string> s_names, t_names;
  std::vector<MultiPoly> forward;  // t_nu(s), basis order, over s_names
  std::vector<MultiPoly> inverse;  // s_nu(t), basis order, over t_names
  LatticeConvention convention = LatticeConvention::Corrected;

  /// p(s) rewritten in t (s -> s(t)); other variables untouched.
  MultiPoly to_t(const MultiPoly& p) const;
  /// p(t) rewritten in s.
  MultiPoly to_s(const MultiPoly& p) const;
};

/// Builds forward and inverse maps; throws AlgebraError if inversion fails.
FlatMap build_flat_map(const SingularitySpec& spec, LatticeConvention conv = LatticeConvention::Corrected);

/// Checks weighted homogeneity of every t_nu and unitriangularity.
bool flat_map_is_graded(const SingularitySpec& spec, const FlatMap& fm);

/// forward(inverse(t)) == t and inverse(forward(s)) == s exactly.
bool flat_map_round_trip(const FlatMap& fm);

}  // namespace adeflat
