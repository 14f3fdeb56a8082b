#include "flatcoords/flatcoords.hpp"

#include <functional>

namespace adeflat {

Rational gamma_ratio(const Rational& top, const Rational& bottom) {
  const Rational diff = top - bottom;
  if (!is_integer(diff) || diff < 0)
    throw AlgebraError("gamma_ratio: argument difference " + to_string(diff) + " is not a nonnegative integer");
  const long n = to_long(diff.get_num());
  Rational out = 1;
  for (long k = 0; k < n; ++k) out *= bottom + k;
  return out;
}

namespace {

Rational kappa_of(const SingularitySpec& spec, LatticeConvention conv) {
  if (conv == LatticeConvention::Printed) return spec.rho2;
  return spec.rho2 / (1 - spec.rho1);
}

}  // namespace

bool lattice_member(const SingularitySpec& spec, const Nu& nu, const Nu& beta, LatticeConvention conv) {
  if (beta[0] < 0 || beta[1] < 0) return false;
  const Rational d1 = beta[0] - nu[0], d2 = beta[1] - nu[1];
  if (spec.kind == LatticeKind::AE) {
    const Rational g2 = conv == LatticeConvention::Corrected ? spec.rho2 : spec.rho1;
    return is_integer(Rational(d1 * spec.rho1)) && is_integer(Rational(d2 * g2));
  }
  const Rational kappa = kappa_of(spec, conv);
  const Rational b = d2 * kappa;
  const Rational a = (d1 - b) * spec.rho1;
  return is_integer(a) && is_integer(b);
}

Rational coeff_C(const SingularitySpec& spec, const Nu& nu, const Nu& beta, LatticeConvention conv) {
  if (!lattice_member(spec, nu, beta, conv)) return 0;
  const Rational& r1 = spec.rho1;
  const Rational d1 = beta[0] - nu[0], d2 = beta[1] - nu[1];
  Rational sign_exp, value;
  if (spec.kind == LatticeKind::AE) {
    sign_exp = r1 * d1 + spec.rho2 * d2;
    if (!is_integer(sign_exp)) throw AlgebraError("lattice inconsistency: sign exponent " + to_string(sign_exp));
    value = gamma_ratio(r1 * (beta[0] + 1), r1 * (nu[0] + 1)) *
            gamma_ratio(spec.rho2 * (beta[1] + 1), spec.rho2 * (nu[1] + 1));
  } else {
    const Rational k = kappa_of(spec, conv);
    sign_exp = r1 * d1 + k * (1 - r1) * d2;
    if (!is_integer(sign_exp)) throw AlgebraError("lattice inconsistency: sign exponent " + to_string(sign_exp));
    value = gamma_ratio(r1 * (beta[0] + 1 - k * (beta[1] + 1)), r1 * (nu[0] + 1 - k * (nu[1] + 1))) *
            gamma_ratio(k * (beta[1] + 1), k * (nu[1] + 1));
  }
  if (mpz_odd_p(sign_exp.get_num_mpz_t())) value = -value;
  return value;
}

std::vector<std::vector<int>> enumerate_alpha(const SingularitySpec& spec, const Rational& target) {
  std::vector<std::vector<int>> out;
  const std::size_t mu = spec.basis.size();
  std::vector<int> alpha(mu, 0);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& rest) {
    if (rest == 0) {
      out.push_back(alpha);
      return;
    }
    if (k == mu) return;
    for (int a = 0; spec.w[k] * a <= rest; ++a) {
      alpha[k] = a;
      rec(k + 1, rest - spec.w[k] * a);
    }
    alpha[k] = 0;
  };
  if (target > 0) rec(0, target);
  return out;
}

Nu ell(const SingularitySpec& spec, const std::vector<int>& alpha) {
  Nu out{0, 0};
  for (std::size_t k = 0; k < spec.basis.size(); ++k) {
    const Nu& nu = spec.basis[k];
    if (spec.cls.family == Family::A) {
      out[0] += nu[0] * alpha[k];
    } else if (nu != Nu{0, 0}) {
      out[0] += nu[0] * alpha[k];
      out[1] += nu[1] * alpha[k];
    }
  }
  return out;
}

MultiPoly FlatMap::to_t(const MultiPoly& p) const {
  std::map<std::string, MultiPoly> subs;
  for (std::size_t k = 0; k < s_names.size(); ++k) subs[s_names[k]] = inverse[k];
  return p.substitute(subs);
}

MultiPoly FlatMap::to_s(const MultiPoly& p) const {
  std::map<std::string, MultiPoly> subs;
  for (std::size_t k = 0; k < t_names.size(); ++k) subs[t_names[k]] = forward[k];
  return p.substitute(subs);
}

FlatMap build_flat_map(const SingularitySpec& spec, LatticeConvention conv) {
  FlatMap fm;
  fm.convention = conv;
  fm.s_names = spec.s_names;
  for (const Nu& nu : spec.basis) fm.t_names.push_back("t" + nu_label(nu));
  const std::size_t mu = spec.basis.size();
  for (std::size_t k = 0; k < mu; ++k) {
    const Nu& nu = spec.basis[k];
    MultiPoly t(fm.s_names);
    for (const auto& alpha : enumerate_alpha(spec, spec.w[k])) {
      Rational c;
      Rational fac = 1;
      for (int a : alpha) fac *= Rational(factorial(static_cast<unsigned>(a)));
      if (nu == Nu{0, 0} && alpha[k] == 1) {
        c = 1;  // the s00 term
      } else {
        c = coeff_C(spec, nu, ell(spec, alpha), conv);
      }
      if (c == 0) continue;
      t.add_term(alpha, c / fac);
    }
    fm.forward.push_back(std::move(t));
  }
  // graded fixed-point inversion: s = t - (forward - s)(s)
  std::vector<MultiPoly> inv;
  for (std::size_t k = 0; k < mu; ++k) inv.push_back(MultiPoly::variable(fm.t_names[k], fm.t_names));
  std::vector<MultiPoly> corr;
  for (std::size_t k = 0; k < mu; ++k)
    corr.push_back(fm.forward[k] - MultiPoly::variable(fm.s_names[k], fm.s_names));
  for (int iter = 0;; ++iter) {
    if (iter > 4 * static_cast<int>(mu) + 8) throw AlgebraError("flat map inversion did not terminate");
    std::map<std::string, MultiPoly> subs;
    for (std::size_t k = 0; k < mu; ++k) subs[fm.s_names[k]] = inv[k];
    std::vector<MultiPoly> next;
    for (std::size_t k = 0; k < mu; ++k)
      next.push_back((MultiPoly::variable(fm.t_names[k], fm.t_names) - corr[k].substitute(subs)).embedded(fm.t_names));
    if (next == inv) break;
    inv = std::move(next);
  }
  fm.inverse = std::move(inv);
  if (!flat_map_round_trip(fm)) throw AlgebraError("flat map inversion failed for " + spec.cls.name());
  return fm;
}

bool flat_map_is_graded(const SingularitySpec& spec, const FlatMap& fm) {
  std::map<std::string, Rational> weights;
  for (std::size_t k = 0; k < spec.s_names.size(); ++k) weights[spec.s_names[k]] = spec.w[k];
  for (std::size_t k = 0; k < fm.forward.size(); ++k) {
    auto wd = fm.forward[k].weighted_degree(weights);
    if (!wd || *wd != spec.w[k]) return false;
    for (const auto& [e, c] : fm.forward[k].terms()) {
      int mult = 0;
      for (int v : e) mult += v;
      if (mult == 1) {
        bool own = e[k] == 1;
        if (!own || c != 1) return false;
      }
    }
  }
  return true;
}

bool flat_map_round_trip(const FlatMap& fm) {
  for (std::size_t k = 0; k < fm.forward.size(); ++k) {
    if (fm.to_s(fm.inverse[k]).embedded(fm.s_names) != MultiPoly::variable(fm.s_names[k], fm.s_names)) return false;
    if (fm.to_t(fm.forward[k]).embedded(fm.t_names) != MultiPoly::variable(fm.t_names[k], fm.t_names)) return false;
  }
  return true;
}

}  // namespace adeflat
