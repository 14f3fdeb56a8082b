#include "exactalg/ratfunc.hpp"

namespace adeflat {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(num_.vars(), Rational(1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("RatFunc with zero denominator");
  normalize_content();
}

void RatFunc::normalize_content() {
  if (num_.is_zero()) {
    den_ = MultiPoly(den_.vars(), Rational(1));
    return;
  }
  // make the denominator primitive with positive leading coefficient
  Rational c = den_.content();
  if (den_.leading_term().second < 0) c = -c;
  if (c != 1) {
    const Rational inv = Rational(1) / c;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.constant_term();
    den_ = MultiPoly(den_.vars(), Rational(1));
  }
}

bool RatFunc::is_polynomial() const { return den_.is_constant(); }

std::optional<MultiPoly> RatFunc::as_polynomial() const {
  if (den_.is_constant()) return num_ * (Rational(1) / den_.constant_term());
  return exact_divide(num_, den_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize_content();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize_content();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw AlgebraError("RatFunc division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize_content();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc RatFunc::derivative(const std::string& var) const {
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::evaluate(const std::map<std::string, Rational>& values) const {
  MultiPoly d = den_.evaluate(values);
  if (d.is_zero()) throw AlgebraError("RatFunc evaluation at a pole");
  return RatFunc(num_.evaluate(values), d);
}

Rational RatFunc::evaluate_exact(const std::map<std::string, Rational>& values) const {
  const Rational d = den_.evaluate_exact(values);
  if (d == 0) throw AlgebraError("RatFunc evaluation at a pole");
  return num_.evaluate_exact(values) / d;
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero() || den_.is_constant()) return *this;
  if (auto q = exact_divide(num_, den_)) return RatFunc(*q);
  auto used = merge_vars(num_.used_vars(), den_.used_vars());
  if (used.size() == 1) {
    MultiPoly g = univariate_gcd(num_, den_);
    if (!g.is_constant()) return RatFunc(*exact_divide(num_, g), *exact_divide(den_, g));
  }
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace adeflat
