#include "exactalg/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace adeflat {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace(Exponent(vars_.size(), 0), constant);
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  MultiPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponent exps, const Rational& coeff) {
  if (exps.size() != vars.size()) throw AlgebraError("monomial: exponent length mismatch");
  MultiPoly p(std::move(vars));
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.push_back(vars_[i]);
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> slot(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) slot[i] = static_cast<int>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0) throw AlgebraError("embedding drops used variable '" + vars_[i] + "'");
      ne[slot[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::compacted() const { return embedded(used_vars()); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    *this = embedded(vars);
    const MultiPoly oe = o.embedded(vars);
    for (const auto& [e, c] : oe.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

using PackedKey = unsigned __int128;

// Total degree in the top 16 bits, then 8 bits per exponent with the first
// variable highest, so descending key order is GrlexGreater.
PackedKey pack(const Exponent& e) {
  PackedKey k = 0;
  unsigned deg = 0;
  for (std::size_t i = 0; i < 13; ++i) {
    const unsigned v = i < e.size() ? static_cast<unsigned>(e[i]) : 0u;
    deg += v;
    k = (k << 8) | v;
  }
  return (static_cast<PackedKey>(deg) << 104) | k;
}

Exponent unpack(PackedKey k, std::size_t n) {
  Exponent e(n);
  for (std::size_t i = 13; i-- > 0;) {
    if (i < n) e[i] = static_cast<int>(k & 0xff);
    k >>= 8;
  }
  return e;
}

struct PackedHash {
  std::size_t operator()(PackedKey k) const {
    const auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>()(lo * 0x9e3779b97f4a7c15ULL ^ hi);
  }
};

}  // namespace

MultiPoly packed_product(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::pair<PackedKey, const Rational*>> pa, pb;
  pa.reserve(a.terms_.size());
  pb.reserve(b.terms_.size());
  for (const auto& [e, c] : a.terms_) pa.emplace_back(pack(e), &c);
  for (const auto& [e, c] : b.terms_) pb.emplace_back(pack(e), &c);
  std::unordered_map<PackedKey, Rational, PackedHash> acc;
  acc.reserve(std::min<std::size_t>(pa.size() * pb.size(), 1u << 22));
  Rational prod;
  for (const auto& [ka, ca] : pa)
    for (const auto& [kb, cb] : pb) {
      mpq_mul(prod.get_mpq_t(), ca->get_mpq_t(), cb->get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ka + kb);
      if (inserted) it->second = prod;
      else it->second += prod;
    }
  std::vector<std::pair<PackedKey, Rational*>> sorted;
  sorted.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) sorted.emplace_back(k, &c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  MultiPoly out(a.vars_);
  const std::size_t n = a.vars_.size();
  for (auto& [k, c] : sorted) out.terms_.emplace_hint(out.terms_.end(), unpack(k, n), std::move(*c));
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vars = merge_vars(a.vars_, b.vars_);
    return a.embedded(vars) * b.embedded(vars);
  }
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.vars_.size();
  if (n <= 13) {
    int max_deg = 0;
    for (const auto* p : {&a, &b}) {
      int m = 0;
      for (const auto& [e, c] : p->terms_)
        for (int v : e) m = std::max(m, v);
      max_deg += m;
    }
    if (max_deg < 256) return packed_product(a, b);
  }
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merge_vars(a.vars_, b.vars_);
  return a.embedded(vars).terms_ == b.embedded(vars).terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  MultiPoly out(vars_);
  const int k = var_index(var);
  if (k < 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent ne = e;
    ne[k] -= 1;
    out.terms_.emplace(std::move(ne), c * e[k]);
  }
  return out;
}

int MultiPoly::degree(const std::string& var) const {
  if (terms_.empty()) return -1;
  const int k = var_index(var);
  if (k < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  const int deg = degree(var);
  std::vector<MultiPoly> out(std::max(deg + 1, 0), MultiPoly(vars_));
  const int k = var_index(var);
  for (const auto& [e, c] : terms_) {
    const int p = k < 0 ? 0 : e[k];
    Exponent ne = e;
    if (k >= 0) ne[k] = 0;
    out[p].terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subs) const {
  std::vector<std::string> keep;
  std::vector<int> sub_slot(vars_.size(), -1);
  std::vector<const MultiPoly*> values;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = subs.find(vars_[i]);
    if (it == subs.end()) {
      keep.push_back(vars_[i]);
    } else {
      sub_slot[i] = static_cast<int>(values.size());
      values.push_back(&it->second);
    }
  }
  std::vector<std::string> out_vars = keep;
  for (const auto* v : values) out_vars = merge_vars(out_vars, v->vars());
  // power cache per substituted variable
  std::vector<std::vector<MultiPoly>> powers(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    powers[j].push_back(MultiPoly(out_vars, Rational(1)));
  auto power_of = [&](std::size_t j, int n) -> const MultiPoly& {
    while (static_cast<int>(powers[j].size()) <= n)
      powers[j].push_back(powers[j].back() * values[j]->embedded(out_vars));
    return powers[j][n];
  };
  MultiPoly out(out_vars);
  for (const auto& [e, c] : terms_) {
    Exponent base(out_vars.size(), 0);
    MultiPoly term(out_vars);
    for (std::size_t i = 0, kept = 0; i < e.size(); ++i) {
      if (sub_slot[i] < 0) {
        base[kept++] = e[i];
      }
    }
    term.terms_.emplace(base, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sub_slot[i] >= 0 && e[i] > 0) term = term * power_of(sub_slot[i], e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  return substitute(std::map<std::string, MultiPoly>{{var, value}});
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<int> idx;
  std::vector<Rational> val;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) {
      idx.push_back(static_cast<int>(i));
      val.push_back(it->second);
    }
  }
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    Rational v = c;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      v *= rational_pow(val[j], static_cast<unsigned>(e[idx[j]]));
      ne[idx[j]] = 0;
    }
    out.add_term(ne, v);
  }
  return out;
}

Rational MultiPoly::evaluate_exact(const std::map<std::string, Rational>& values) const {
  MultiPoly r = evaluate(values);
  if (!r.is_constant()) throw AlgebraError("evaluate_exact: unassigned variable in " + r.to_string());
  return r.constant_term();
}

std::pair<Exponent, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
  return *terms_.begin();
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  BigInt g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return abs(r);
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.begin()->second < 0) c = -c;
  MultiPoly out = *this;
  out *= Rational(1) / c;
  return out;
}

std::optional<Rational> MultiPoly::weighted_degree(const std::map<std::string, Rational>& weights) const {
  std::optional<Rational> deg;
  for (const auto& [e, c] : terms_) {
    Rational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = weights.find(vars_[i]);
      if (it == weights.end()) throw AlgebraError("weighted_degree: no weight for " + vars_[i]);
      d += it->second * e[i];
    }
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  if (!deg) return Rational(0);
  return deg;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a_in, const MultiPoly& b_in) {
  if (b_in.is_zero()) throw AlgebraError("division by zero polynomial");
  auto vars = merge_vars(a_in.vars(), b_in.vars());
  MultiPoly a = a_in.embedded(vars);
  const MultiPoly b = b_in.embedded(vars);
  const auto [lb, cb] = b.leading_term();
  MultiPoly q(vars);
  while (!a.is_zero()) {
    const auto [la, ca] = a.leading_term();
    Exponent d(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      d[i] = la[i] - lb[i];
      if (d[i] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::monomial(vars, d, ca / cb);
    q += t;
    a -= t * b;
  }
  return q;
}

MultiPoly univariate_gcd(const MultiPoly& a_in, const MultiPoly& b_in) {
  auto vars = merge_vars(a_in.vars(), b_in.vars());
  auto used = merge_vars(a_in.used_vars(), b_in.used_vars());
  if (used.size() > 1) throw AlgebraError("univariate_gcd on multivariate input");
  MultiPoly a = a_in.embedded(vars), b = b_in.embedded(vars);
  if (used.empty()) return MultiPoly(vars, Rational(a.is_zero() && b.is_zero() ? 0 : 1));
  const std::string& v = used[0];
  auto rem = [&](MultiPoly x, const MultiPoly& y) {
    const int dy = y.degree(v);
    const Rational ly = y.coefficients_in(v)[dy].constant_term();
    while (!x.is_zero() && x.degree(v) >= dy) {
      const int dx = x.degree(v);
      const Rational lx = x.coefficients_in(v)[dx].constant_term();
      Exponent e(vars.size(), 0);
      e[x.var_index(v)] = dx - dy;
      x -= MultiPoly::monomial(vars, e, lx / ly) * y;
    }
    return x;
  };
  while (!b.is_zero()) {
    MultiPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.coefficients_in(v).back().constant_term();
  a *= Rational(1) / lead;
  return a;
}

CompiledPoly::CompiledPoly(const MultiPoly& p, const std::vector<std::string>& order) {
  std::vector<int> slot(p.vars().size(), -1);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::find(order.begin(), order.end(), p.vars()[i]);
    if (it != order.end()) slot[i] = static_cast<int>(it - order.begin());
  }
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::pair<int, int>> f;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0) throw AlgebraError("CompiledPoly: variable '" + p.vars()[i] + "' not in evaluation order");
      f.emplace_back(slot[i], e[i]);
    }
    coeffs_.push_back(c.get_d());
    factors_.push_back(std::move(f));
  }
}

namespace {
template <class T>
T ipow(T x, int n) {
  T r(1);
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}
}  // namespace

double CompiledPoly::operator()(const double* values) const {
  double sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    double m = coeffs_[t];
    for (auto [s, e] : factors_[t]) m *= ipow(values[s], e);
    sum += m;
  }
  return sum;
}

std::complex<double> CompiledPoly::operator()(const std::complex<double>* values) const {
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    std::complex<double> m = coeffs_[t];
    for (auto [s, e] : factors_[t]) m *= ipow(values[s], e);
    sum += m;
  }
  return sum;
}

}  // namespace adeflat
