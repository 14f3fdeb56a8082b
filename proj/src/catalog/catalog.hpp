#pragma once

#include <array>
#include <string>
#include <vector>

#include "exactalg/multipoly.hpp"

namespace adeflat {

enum class Family { A, D, E6, E7, E8 };

/// Lattice convention family: A_mu, E6, E8 versus D_mu, E7.
enum class LatticeKind { AE, DE7 };

struct SingularityClass {
  Family family = Family::A;
  int mu = 1;

  /// Parses "A2", "A(2)", "D4", "E6", ...; throws std::invalid_argument.
  static SingularityClass parse(const std::string& text);
  std::string name() const;
};

using Nu = std::array<int, 2>;

struct SingularitySpec {
  SingularityClass cls;
  LatticeKind kind = LatticeKind::AE;
  Rational rho1, rho2;
  std::vector<Nu> basis;
  std::vector<Rational> w;       // parameter weights, basis order
  std::vector<Rational> lambda;  // form weights, basis order
  std::vector<std::string> s_names;
  std::vector<std::string> vars;  // x, y, then s_names
  MultiPoly H;                    // over vars
  MultiPoly H0;                   // H(x,y;0) over {x,y}

  int mu() const { return static_cast<int>(basis.size()); }
  int index_of(const Nu& nu) const;  // -1 if not in the basis
  Rational xy_weight(int i, int j) const { return rho1 * i + rho2 * j; }
};

std::string nu_label(const Nu& nu);  // "00", "10", ...

/// Builds the family; throws std::invalid_argument for an invalid mu.
SingularitySpec build_spec(const SingularityClass& cls);

/// Dimension of Q[x,y]/(H0_x, H0_y) from graded ranks; throws AlgebraError
/// if the quotient is not finite dimensional.
int milnor_quotient_dim(const MultiPoly& h0, const Rational& rho1, const Rational& rho2);
int milnor_quotient_dim(const SingularitySpec& spec);

/// True if the basis monomials are a basis of the Milnor algebra (exact rank check).
bool basis_is_milnor_basis(const SingularitySpec& spec);

/// Discriminant of the deformation in the s-variables: content 1, positive leading coefficient.
MultiPoly discriminant(const SingularitySpec& spec);

/// Substitutes x -> u^{a} x, y -> u^{b} y, s_nu -> u^{c_nu} s_nu and checks
/// H(...) = u^N H with integer exponents N*rho, N*w.
bool check_quasihomogeneity(const SingularitySpec& spec);

/// All classes with mu <= max_mu (A1.., D4.., E6, E7, E8).
std::vector<SingularityClass> all_classes(int max_mu);

}  // namespace adeflat
