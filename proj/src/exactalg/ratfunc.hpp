#pragma once

#include "exactalg/multipoly.hpp"

namespace adeflat {

/// Quotient of two MultiPoly with nonzero denominator.
///
/// Arithmetic only cancels rational content; gcd cancellation is done by
/// reduced(), which applies a full gcd when numerator and denominator are
/// univariate in the same variable.
class RatFunc {
 public:
  RatFunc() : num_(), den_(std::vector<std::string>{}, Rational(1)) {}
  RatFunc(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly num, MultiPoly den);
  RatFunc(const Rational& c) : RatFunc(MultiPoly({}, c)) {}  // NOLINT

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  /// Numerator divided by the denominator when that division is exact.
  std::optional<MultiPoly> as_polynomial() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  /// Equality as rational functions (cross multiplication).
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(const std::string& var) const;
  RatFunc evaluate(const std::map<std::string, Rational>& values) const;
  Rational evaluate_exact(const std::map<std::string, Rational>& values) const;
  RatFunc reduced() const;
  std::string to_string() const;

 private:
  void normalize_content();
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace adeflat
