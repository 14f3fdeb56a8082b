#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactalg/rational.hpp"

namespace adeflat {

using Exponent = std::vector<int>;

/// Graded lexicographic order, descending: larger total degree first, then
/// lexicographic with the first variable highest.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Each polynomial carries its own ordered list of variable names; binary
/// operations embed both operands into the union of their variables (left
/// operand's order first). No zero coefficient is ever stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const Rational& constant);

  static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {});
  static MultiPoly monomial(std::vector<std::string> vars, Exponent exps, const Rational& coeff = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Coefficient of an exponent vector given in this polynomial's variable order.
  Rational coefficient(const Exponent& e) const;

  int var_index(const std::string& name) const;  // -1 if absent
  bool has_var(const std::string& name) const { return var_index(name) >= 0; }
  std::vector<std::string> used_vars() const;

  /// Accumulates c·x^e (e in this polynomial's variable order).
  void add_term(const Exponent& e, const Rational& c);

  /// Same polynomial over a different variable list (must contain every used variable).
  MultiPoly embedded(const std::vector<std::string>& vars) const;
  /// Drops variables that do not occur.
  MultiPoly compacted() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly packed_product(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(const std::string& var) const;
  int degree(const std::string& var) const;  // -1 for the zero polynomial
  int total_degree() const;
  /// Coefficients c_k with p = sum_k c_k var^k; the c_k keep the full variable list.
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;

  /// Simultaneous substitution var -> polynomial; unlisted variables stay.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const;
  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  /// Partial evaluation at rational values.
  MultiPoly evaluate(const std::map<std::string, Rational>& values) const;
  /// Full evaluation; throws if a used variable has no value.
  Rational evaluate_exact(const std::map<std::string, Rational>& values) const;

  std::pair<Exponent, Rational> leading_term() const;
  /// gcd of numerators over lcm of denominators, positive; zero for the zero polynomial.
  Rational content() const;
  /// Content 1 and positive leading coefficient.
  MultiPoly normalized() const;

  /// Checks that every monomial has the same weighted degree; returns it, or nullopt.
  std::optional<Rational> weighted_degree(const std::map<std::string, Rational>& weights) const;

  /// Canonical text: monomials in descending grlex order, explicit rational coefficients.
  std::string to_string() const;
  static MultiPoly parse(const std::string& text, std::vector<std::string> vars = {});

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Union of two variable lists preserving the order of the first.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Exact quotient a/b; nullopt if b does not divide a.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Univariate gcd over Q (both must involve at most the same single variable); monic result.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// Fast floating-point evaluator for a fixed polynomial and variable order.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const MultiPoly& p, const std::vector<std::string>& order);
  double operator()(const double* values) const;
  std::complex<double> operator()(const std::complex<double>* values) const;

 private:
  std::vector<double> coeffs_;
  std::vector<std::vector<std::pair<int, int>>> factors_;  // (slot, exponent)
};

}  // namespace adeflat
