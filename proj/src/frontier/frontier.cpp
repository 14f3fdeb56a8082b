#include "frontier/frontier.hpp"

#include <stdexcept>

namespace adeflat {

MultiPoly curl_reduce(const MultiPoly& P, const MultiPoly& Q) {
  const std::vector<std::string> xy = {"x", "y"};
  const MultiPoly p = P.embedded(merge_vars(xy, P.vars()));
  const MultiPoly q = Q.embedded(merge_vars(xy, Q.vars()));
  return q.derivative("x") - p.derivative("y");
}

BigInt quartic_reference(int n) {
  const BigInt b(n);
  return (b * b * b * b + b * b - 2) / 2;
}

BoundReport bound(const SingularityClass& cls, int K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1 (no nonconstant form of degree " + std::to_string(K) + ")");
  const SingularitySpec spec = build_spec(cls);
  BoundReport r;
  r.cls = cls;
  r.mu = spec.mu();
  r.rho1 = spec.rho1;
  r.rho2 = spec.rho2;
  r.K = K;
  r.v0 = static_cast<int>(to_long(floor_of(Rational((spec.rho1 + spec.rho2) * (K - 1)))));
  r.M = r.mu * (r.v0 + 1);
  r.N_bound = r.M - 1;
  r.derivative_bound = r.M - 2;
  r.quartic_reference = quartic_reference(K);
  return r;
}

std::vector<ComparisonRow> comparison_table(int n_max) {
  std::vector<ComparisonRow> rows;
  const auto classes = all_classes(n_max);
  for (int n = 1; n <= n_max; ++n) {
    ComparisonRow row;
    row.n = n;
    for (const auto& c : classes) {
      if (c.mu > n) continue;
      const BoundReport b = bound(c, n);
      if (b.N_bound > row.worst_bound || row.worst_class.empty()) {
        row.worst_bound = b.N_bound;
        row.worst_class = c.name();
      }
    }
    row.envelope = n * (1 + static_cast<int>(to_long(floor_of(Rational(5 * (n - 1), 6))))) - 1;
    row.quadratic = n * n - 1;
    row.quartic = quartic_reference(n);
    rows.push_back(row);
  }
  return rows;
}

bool bound_monotone(int max_mu, int K_max, std::string* failure) {
  for (const auto& c : all_classes(max_mu)) {
    int prev = -1;
    for (int K = 1; K <= K_max; ++K) {
      const int N = bound(c, K).N_bound;
      if (N < prev) {
        if (failure) *failure = c.name() + " at K=" + std::to_string(K);
        return false;
      }
      prev = N;
    }
  }
  return true;
}

}  // namespace adeflat
