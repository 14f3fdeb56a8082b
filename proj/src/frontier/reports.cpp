#include "frontier/reports.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "proofkit/proofkit.hpp"

namespace adeflat {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Json doubles_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(std::isfinite(x) ? Json(x) : Json(nullptr));
  return a;
}

Json polys_json(const std::vector<MultiPoly>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

Json header(const std::string& kind, const SingularityClass* c) {
  Json j;
  j["schema"] = "adeflat." + kind;
  j["schema_version"] = kSchemaVersion;
  if (c) j["class"] = c->name();
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

CsvTable polyline_csv(const std::string& name, const std::vector<Point2>& nodes) {
  CsvTable t{name, {"index", "x", "y"}, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i)
    t.rows.push_back({std::to_string(i), num(nodes[i][0]), num(nodes[i][1])});
  return t;
}

Json complex_json(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

}  // namespace

std::string CsvTable::text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
    os << "\n";
  }
  return os.str();
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.get_str());
  return a;
}

Json matrix_json(const PolyMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).reduced().to_string());
    a.push_back(row);
  }
  return a;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(parse_decimal(item));
  }
  return out;
}

std::vector<std::string> s_input_order(const SingularitySpec& spec) {
  return {spec.s_names.rbegin(), spec.s_names.rend()};
}

std::vector<Rational> parse_s_values(const SingularitySpec& spec, const std::string& text) {
  const std::size_t mu = spec.s_names.size();
  std::vector<Rational> out(mu);
  if (text.find('=') == std::string::npos) {
    const auto v = parse_rational_list(text);
    if (v.size() != mu) throw std::invalid_argument("expected " + std::to_string(mu) + " values for s");
    for (std::size_t i = 0; i < mu; ++i) out[mu - 1 - i] = v[i];
    return out;
  }
  std::vector<bool> seen(mu, false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("mixed plain and named s values");
    std::string name = item.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char ch) { return std::isspace(ch); }), name.end());
    const auto it = std::find(spec.s_names.begin(), spec.s_names.end(), name);
    if (it == spec.s_names.end()) throw std::invalid_argument("unknown parameter '" + name + "'");
    const std::size_t i = static_cast<std::size_t>(it - spec.s_names.begin());
    if (seen[i]) throw std::invalid_argument("parameter '" + name + "' given twice");
    seen[i] = true;
    out[i] = parse_rational_list(item.substr(eq + 1)).at(0);
  }
  for (std::size_t i = 0; i < mu; ++i)
    if (!seen[i]) throw std::invalid_argument("missing parameter '" + spec.s_names[i] + "'");
  return out;
}

Session::Entry& Session::entry(const SingularityClass& c) {
  Entry& e = cache_[c.name()];
  if (!e.spec) e.spec = std::make_unique<SingularitySpec>(build_spec(c));
  return e;
}

const SingularitySpec& Session::spec(const SingularityClass& c) { return *entry(c).spec; }

const FlatMap& Session::flat(const SingularityClass& c) {
  Entry& e = entry(c);
  if (!e.flat) e.flat = std::make_unique<FlatMap>(build_flat_map(*e.spec, opt_.convention));
  return *e.flat;
}

const GMStructure& Session::gm(const SingularityClass& c) {
  const FlatMap& f = flat(c);
  Entry& e = entry(c);
  if (!e.gm) e.gm = std::make_unique<GMStructure>(derive_connection(*e.spec, f));
  return *e.gm;
}

Report report_catalog(Session& s, const SingularityClass& c) {
  const SingularitySpec& spec = s.spec(c);
  Report r{"catalog", header("catalog", &c), {}, true};
  Json& j = r.json;
  j["H"] = spec.H.to_string();
  j["mu"] = spec.mu();
  j["rho"] = {spec.rho1.get_str(), spec.rho2.get_str()};
  Json basis = Json::array();
  for (const auto& nu : spec.basis) basis.push_back(nu_label(nu));
  j["basis"] = basis;
  j["weights"] = {{"w", rationals_json(spec.w)}, {"lambda", rationals_json(spec.lambda)}};
  j["s_names"] = spec.s_names;
  j["s_input_order"] = s_input_order(spec);
  j["discriminant"] = discriminant(spec).to_string();
  j["milnor_dimension"] = milnor_quotient_dim(spec);
  j["quasihomogeneous"] = check_quasihomogeneity(spec);
  r.passed = j["milnor_dimension"] == spec.mu() && j["quasihomogeneous"].get<bool>();
  r.json["passed"] = r.passed;
  return r;
}

Report report_flatcoords(Session& s, const SingularityClass& c) {
  const FlatMap& f = s.flat(c);
  Report r{"flatcoords", header("flatcoords", &c), {}, true};
  Json& j = r.json;
  j["convention"] = f.convention == LatticeConvention::Corrected ? "corrected" : "printed";
  j["s_names"] = f.s_names;
  j["t_names"] = f.t_names;
  j["forward"] = polys_json(f.forward);
  j["inverse"] = polys_json(f.inverse);
  const bool graded = flat_map_is_graded(s.spec(c), f);
  const bool round_trip = flat_map_round_trip(f);
  j["graded"] = graded;
  j["round_trip"] = round_trip;
  r.passed = graded && round_trip;
  r.json["passed"] = r.passed;
  return r;
}

Report report_gm_derive(Session& s, const SingularityClass& c) {
  const GMStructure& gm = s.gm(c);
  Report r{"gm_derive", header("gm_derive", &c), {}, true};
  Json& j = r.json;
  j["t_names"] = gm.flat.t_names;
  j["Lambda"] = rationals_json(gm.Lambda);
  j["S_tilde"] = matrix_json(gm.S_tilde);
  j["P"] = matrix_json(gm.P);
  j["Delta"] = gm.Delta_s ? Json(gm.Delta_s->to_string()) : Json(nullptr);
  j["Delta_t"] = gm.Delta_t ? Json(gm.Delta_t->to_string()) : Json(nullptr);
  j["det_S"] = gm.det_S.to_string();
  j["constant_c"] = gm.constant_c.get_str();
  j["dubrovin_g"] = polys_json(gm.g);
  const IdentityReport id = check_identities(gm);
  j["identities"] = {{"dS_dt0_is_identity", id.dS_dt0_is_identity},
                     {"det_matches_discriminant", id.det_matches_discriminant},
                     {"S_times_A_is_Lambda", id.S_times_A_is_Lambda},
                     {"P_polynomial_t0_free", id.P_polynomial_t0_free},
                     {"S_weighted_homogeneous", id.S_weighted_homogeneous},
                     {"residue_is_Lambda", id.residue_is_Lambda},
                     {"dubrovin_degrees", id.dubrovin_degrees}};
  bool dub = true;
  Json checks = Json::array();
  for (int k = 0; k < gm.mu(); ++k) {
    const DubrovinCheck d = dubrovin_check(gm, k);
    checks.push_back({{"component", k}, {"exact", d.exact}, {"t0_free", d.t0_free}});
    dub = dub && d.exact && d.t0_free;
  }
  j["dubrovin_check"] = checks;
  r.passed = id.dS_dt0_is_identity && id.det_matches_discriminant && id.S_times_A_is_Lambda &&
             id.P_polynomial_t0_free && id.S_weighted_homogeneous && id.residue_is_Lambda && id.dubrovin_degrees && dub;
  r.json["passed"] = r.passed;
  return r;
}

Report report_gm_reduce(Session& s, const SingularityClass& c, int k1, int k2) {
  if (k1 < 0 || k2 < 0) throw std::invalid_argument("exponents must be nonnegative");
  const GMStructure& gm = s.gm(c);
  Report r{"gm_reduce", header("gm_reduce", &c), {}, true};
  Json& j = r.json;
  j["monomial"] = {k1, k2};
  const auto coeffs = reduce_monomial_to_basis(gm, k1, k2);
  const int bound = degree_bound_v0(gm.spec, k1 + k2);
  Json items = Json::array();
  int max_deg = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int d = coeffs[i].degree(gm.t0());
    max_deg = std::max(max_deg, d);
    items.push_back({{"nu", nu_label(gm.spec.basis[i])}, {"c", coeffs[i].to_string()}, {"t0_degree", d}});
  }
  j["coefficients"] = items;
  j["t0_degree"] = max_deg;
  j["t0_degree_bound"] = bound;
  r.passed = max_deg <= bound;
  r.json["passed"] = r.passed;
  return r;
}

Report report_proof_check(Session& s, const SingularityClass& c, int K, int samples) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const GMStructure& gm = s.gm(c);
  const int mu = gm.mu();
  Report r{"proof_check", header("proof_check", &c), {}, true};
  Json& j = r.json;
  const int v0 = degree_bound_v0(gm.spec, K - 1);
  const int M = mu * (v0 + 1);
  j["K"] = K;
  j["v0"] = v0;
  j["M"] = M;
  j["seed"] = s.options().seed;
  j["bifurcation_B"] = bifurcation_poly(gm).to_string();

  std::mt19937_64 rng(s.options().seed);
  Json items = Json::array();
  int orthogonal = 0, nonzero = 0;
  CsvTable table{"proof_" + c.name(), {"sample", "d_M", "orthogonal", "min_gap", "numeric_residual"}, {}};
  for (int k = 0; k < samples; ++k) {
    std::vector<Rational> t(mu);
    EigenShifts es;
    for (int attempt = 0;; ++attempt) {
      for (auto& v : t) v = random_rational(rng, -3, 3, 5);
      try {
        es = eigen_shifts(gm, t);
        break;
      } catch (const AlgebraError&) {
        if (attempt > 50) throw;
      }
    }
    std::vector<Rational> Z(mu);
    // Z_i are eigenvalues of S: zero or repeated values put the point on the discriminant.
    auto degenerate = [&] {
      for (int a = 0; a < mu; ++a) {
        if (Z[a] == 0) return true;
        for (int b = a + 1; b < mu; ++b)
          if (Z[a] == Z[b]) return true;
      }
      return false;
    };
    do {
      for (auto& z : Z) z = random_rational(rng, -5, 5, 7);
    } while (degenerate());
    const MinorResult exact = sigma_tilde_and_minor(Z, gm.Lambda, v0, 0);
    Rational worst = 0;
    for (const auto& v : mat_vec(exact.sigma, exact.d)) worst = std::max<Rational>(worst, abs(v));

    std::vector<Complex> Zc;
    for (const auto& tau : es.taus) Zc.push_back(t[0].get_d() - tau);
    const auto sig_c = sigma_tilde<Complex>(Zc, gm.Lambda, v0, 0);
    const auto d_c = normal_vector(sig_c);
    double res = 0, scale = 0;
    for (const auto& v : mat_vec(sig_c, d_c)) res = std::max(res, std::abs(v));
    for (const auto& v : d_c) scale = std::max(scale, std::abs(v));
    double row_scale = 0;
    for (const auto& row : sig_c)
      for (const auto& v : row) row_scale = std::max(row_scale, std::abs(v));
    const double numeric_residual = scale > 0 ? res / (scale * std::max(row_scale, 1.0)) : 0.0;

    orthogonal += exact.orthogonal;
    nonzero += exact.d_M != 0;
    items.push_back({{"point", rationals_json(t)},
                     {"Z", rationals_json(Z)},
                     {"d_M", exact.d_M.get_str()},
                     {"orthogonality_residual", worst.get_str()},
                     {"eigen_gaps", {{"min_gap", es.min_gap}, {"product_rel_error", es.product_rel_error}}},
                     {"taus", complex_json(es.taus)},
                     {"numeric", {{"d_M_abs", std::abs(d_c.front())}, {"orthogonality_residual", numeric_residual}}}});
    table.rows.push_back({std::to_string(k), exact.d_M.get_str(), exact.orthogonal ? "1" : "0", num(es.min_gap),
                          num(numeric_residual)});
  }
  j["samples"] = items;
  j["orthogonal_count"] = orthogonal;
  j["nonzero_count"] = nonzero;

  Json oracle = Json::array();
  bool oracle_ok = true;
  if (mu <= 4 && gm.A) {
    for (int ell = 0; ell <= s.options().product_rule_ell; ++ell) {
      const bool ok = sigma_matches_product_rule(gm, v0, ell);
      oracle.push_back({{"ell", ell}, {"matches", ok}});
      oracle_ok = oracle_ok && ok;
    }
  }
  j["product_rule"] = oracle;
  r.csv.push_back(table);
  r.passed = orthogonal == samples && nonzero * 10 >= samples * 9 && oracle_ok;
  r.json["passed"] = r.passed;
  return r;
}

Report report_periods_eval(Session& s, const SingularityClass& c, const std::vector<Rational>& sv,
                           const std::vector<std::string>& monomials) {
  const GMStructure& gm = s.gm(c);
  if (static_cast<int>(sv.size()) != gm.mu())
    throw std::invalid_argument("expected " + std::to_string(gm.mu()) + " values for s");
  PeriodEvaluator ev(gm);
  PeriodOptions po;
  po.oval = s.options().oval;
  const PeriodSample ps = ev.at_s(sv, po);
  std::vector<MultiPoly> nums;
  for (const auto& m : monomials) nums.push_back(MultiPoly::parse(m).embedded(merge_vars({"x", "y"}, MultiPoly::parse(m).vars())));
  const auto values = ev.integrate(ps, nums);
  Report r{"periods_eval", header("periods_eval", &c), {}, true};
  Json& j = r.json;
  j["s_names"] = gm.spec.s_names;
  j["s"] = rationals_json(sv);
  j["t"] = doubles_json(ev.t_of_s(sv));
  j["oval"] = {{"center", {ps.trace.center[0], ps.trace.center[1]}},
               {"arclength", ps.trace.arclength},
               {"area", ps.trace.area},
               {"nodes", ps.trace.nodes.size()}};
  Json items = Json::array();
  for (std::size_t i = 0; i < monomials.size(); ++i)
    items.push_back({{"numerator", nums[i].to_string()}, {"period", values[i]}});
  j["values"] = items;
  j["K"] = doubles_json(ps.K);
  j["J"] = doubles_json(ps.J);
  j["quadrature_error"] = std::max(ps.K_err, ps.J_err);
  r.csv.push_back(polyline_csv("oval_" + c.name(), ps.trace.nodes));
  r.json["passed"] = r.passed;
  return r;
}

Report report_periods_verify(Session& s, const SingularityClass& c, const std::vector<Rational>& sv) {
  const GMStructure& gm = s.gm(c);
  if (static_cast<int>(sv.size()) != gm.mu())
    throw std::invalid_argument("expected " + std::to_string(gm.mu()) + " values for s");
  PeriodEvaluator ev(gm);
  VerifyOptions vo;
  vo.gate = s.options().tol;
  vo.periods.oval = s.options().oval;
  const VerifyReport v = verify_gm(ev, sv, vo);
  Report r{"periods_verify", header("periods_verify", &c), {}, v.passed};
  Json& j = r.json;
  j["s_names"] = gm.spec.s_names;
  j["s"] = rationals_json(v.s);
  j["t"] = rationals_json(v.t);
  j["center"] = {v.center[0], v.center[1]};
  j["distance"] = v.distance;
  j["h"] = v.h;
  j["K"] = doubles_json(v.K);
  j["J"] = doubles_json(v.J);
  j["dJ"] = doubles_json(v.dJ);
  j["d2J"] = doubles_json(v.d2J);
  j["residuals"] = {{"gm_lambda", v.gm_residual},
                    {"gm_w", v.gm_residual_w},
                    {"basis", v.basis_residual},
                    {"taylor2", v.taylor2_residual},
                    {"dubrovin", doubles_json(v.dubrovin_residual)}};
  Json ann = Json::array();
  for (const auto& q : v.annihilators) ann.push_back(rationals_json(q));
  j["annihilators"] = ann;
  j["richardson_error"] = v.richardson_error;
  j["gates"] = {{"gm", vo.gate}, {"basis", vo.gate}, {"taylor2", vo.taylor_gate}, {"dubrovin", vo.dubrovin_gate}};
  j["passed"] = v.passed;
  CsvTable res{"residuals_" + c.name(), {"quantity", "component", "residual", "gate"}, {}};
  res.rows.push_back({"gm_lambda", "all", num(v.gm_residual), num(vo.gate)});
  res.rows.push_back({"gm_w", "all", num(v.gm_residual_w), ""});
  res.rows.push_back({"basis", "all", num(v.basis_residual), num(vo.gate)});
  res.rows.push_back({"taylor2", "all", num(v.taylor2_residual), num(vo.taylor_gate)});
  for (std::size_t i = 0; i < v.dubrovin_residual.size(); ++i)
    res.rows.push_back({"dubrovin", std::to_string(i), num(v.dubrovin_residual[i]), num(vo.dubrovin_gate)});
  r.csv.push_back(res);
  r.csv.push_back(polyline_csv("oval_" + c.name(), v.polyline));
  r.json["passed"] = r.passed;
  return r;
}

Report report_bound(Session& s, const SingularityClass& c, int K) {
  const BoundReport b = bound(c, K);
  Report r{"bound", header("bound", &c), {}, true};
  Json& j = r.json;
  j["mu"] = b.mu;
  j["rho"] = {b.rho1.get_str(), b.rho2.get_str()};
  j["K"] = b.K;
  j["v0"] = b.v0;
  j["M"] = b.M;
  j["N_bound"] = b.N_bound;
  j["derivative_bound"] = b.derivative_bound;
  j["quartic_reference"] = b.quartic_reference.get_str();
  j["quartic_n"] = "n = K";

  const int k_max = std::max(s.options().k_max, K);
  CsvTable curve{"bound_" + c.name(), {"K", "v0", "N_bound", "derivative_bound", "quartic"}, {}};
  Json series = Json::array();
  for (int k = 1; k <= k_max; ++k) {
    const BoundReport bk = bound(c, k);
    curve.rows.push_back({std::to_string(k), std::to_string(bk.v0), std::to_string(bk.N_bound),
                          std::to_string(bk.derivative_bound), bk.quartic_reference.get_str()});
    series.push_back({{"K", k}, {"N_bound", bk.N_bound}});
  }
  j["curve"] = series;

  CsvTable cmp{"comparison", {"n", "worst_bound", "worst_class", "envelope", "quadratic", "quartic"}, {}};
  Json rows = Json::array();
  for (const auto& row : comparison_table(s.options().table_n)) {
    cmp.rows.push_back({std::to_string(row.n), std::to_string(row.worst_bound), row.worst_class,
                        std::to_string(row.envelope), std::to_string(row.quadratic), row.quartic.get_str()});
    rows.push_back({{"n", row.n},
                    {"worst_bound", row.worst_bound},
                    {"worst_class", row.worst_class},
                    {"envelope", row.envelope},
                    {"quadratic", row.quadratic},
                    {"quartic", row.quartic.get_str()}});
  }
  j["comparison"] = rows;
  r.csv.push_back(curve);
  r.csv.push_back(cmp);
  r.json["passed"] = r.passed;
  return r;
}

std::vector<std::string> report_kinds() {
  return {"catalog", "flatcoords", "gm_derive", "gm_reduce", "proof_check", "periods_eval", "periods_verify", "bound"};
}

namespace {

Json str_t() { return {{"type", "string"}}; }
Json int_t() { return {{"type", "integer"}}; }
Json num_t() { return {{"type", {"number", "null"}}}; }
Json bool_t() { return {{"type", "boolean"}}; }
Json arr(const Json& items) { return {{"type", "array"}, {"items", items}}; }

Json object(const std::vector<std::pair<std::string, Json>>& props) {
  Json p = Json::object();
  Json req = Json::array();
  for (const auto& [k, v] : props) {
    p[k] = v;
    req.push_back(k);
  }
  return {{"type", "object"}, {"properties", p}, {"required", req}};
}

}  // namespace

Json schema_for(const std::string& kind) {
  std::vector<std::pair<std::string, Json>> props = {
      {"schema", {{"const", "adeflat." + kind}}}, {"schema_version", {{"const", kSchemaVersion}}}, {"class", str_t()},
      {"passed", bool_t()}};
  auto add = [&](std::vector<std::pair<std::string, Json>> more) {
    props.insert(props.end(), more.begin(), more.end());
  };
  const Json poly = str_t();
  const Json rat = {{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  if (kind == "catalog") {
    add({{"H", poly},
         {"mu", int_t()},
         {"rho", arr(rat)},
         {"basis", arr(str_t())},
         {"weights", object({{"w", arr(rat)}, {"lambda", arr(rat)}})},
         {"s_names", arr(str_t())},
         {"s_input_order", arr(str_t())},
         {"discriminant", poly},
         {"milnor_dimension", int_t()},
         {"quasihomogeneous", bool_t()}});
  } else if (kind == "flatcoords") {
    add({{"convention", {{"enum", {"corrected", "printed"}}}},
         {"s_names", arr(str_t())},
         {"t_names", arr(str_t())},
         {"forward", arr(poly)},
         {"inverse", arr(poly)},
         {"graded", bool_t()},
         {"round_trip", bool_t()}});
  } else if (kind == "gm_derive") {
    add({{"t_names", arr(str_t())},
         {"Lambda", arr(rat)},
         {"S_tilde", arr(arr(str_t()))},
         {"P", arr(arr(str_t()))},
         {"Delta", {{"type", {"string", "null"}}}},
         {"Delta_t", {{"type", {"string", "null"}}}},
         {"det_S", poly},
         {"constant_c", rat},
         {"dubrovin_g", arr(poly)},
         {"identities", {{"type", "object"}, {"additionalProperties", bool_t()}}},
         {"dubrovin_check", arr(object({{"component", int_t()}, {"exact", bool_t()}, {"t0_free", bool_t()}}))}});
  } else if (kind == "gm_reduce") {
    add({{"monomial", arr(int_t())},
         {"coefficients", arr(object({{"nu", str_t()}, {"c", poly}, {"t0_degree", int_t()}}))},
         {"t0_degree", int_t()},
         {"t0_degree_bound", int_t()}});
  } else if (kind == "proof_check") {
    add({{"K", int_t()},
         {"v0", int_t()},
         {"M", int_t()},
         {"seed", int_t()},
         {"bifurcation_B", poly},
         {"samples", arr(object({{"point", arr(rat)},
                                 {"Z", arr(rat)},
                                 {"d_M", rat},
                                 {"orthogonality_residual", rat},
                                 {"eigen_gaps", object({{"min_gap", num_t()}, {"product_rel_error", num_t()}})},
                                 {"taus", arr(arr(num_t()))},
                                 {"numeric", object({{"d_M_abs", num_t()}, {"orthogonality_residual", num_t()}})}}))},
         {"orthogonal_count", int_t()},
         {"nonzero_count", int_t()},
         {"product_rule", arr(object({{"ell", int_t()}, {"matches", bool_t()}}))}});
  } else if (kind == "periods_eval") {
    add({{"s_names", arr(str_t())},
         {"s", arr(rat)},
         {"t", arr(num_t())},
         {"oval", object({{"center", arr(num_t())}, {"arclength", num_t()}, {"area", num_t()}, {"nodes", int_t()}})},
         {"values", arr(object({{"numerator", poly}, {"period", num_t()}}))},
         {"K", arr(num_t())},
         {"J", arr(num_t())},
         {"quadrature_error", num_t()}});
  } else if (kind == "periods_verify") {
    add({{"s_names", arr(str_t())},
         {"s", arr(rat)},
         {"t", arr(rat)},
         {"center", arr(num_t())},
         {"distance", num_t()},
         {"h", num_t()},
         {"K", arr(num_t())},
         {"J", arr(num_t())},
         {"dJ", arr(num_t())},
         {"d2J", arr(num_t())},
         {"residuals", object({{"gm_lambda", num_t()},
                               {"gm_w", num_t()},
                               {"basis", num_t()},
                               {"taylor2", num_t()},
                               {"dubrovin", arr(num_t())}})},
         {"annihilators", arr(arr(rat))},
         {"richardson_error", num_t()},
         {"gates", {{"type", "object"}}}});
  } else if (kind == "bound") {
    add({{"mu", int_t()},
         {"rho", arr(rat)},
         {"K", int_t()},
         {"v0", int_t()},
         {"M", int_t()},
         {"N_bound", int_t()},
         {"derivative_bound", int_t()},
         {"quartic_reference", {{"type", "string"}, {"pattern", "^[0-9]+$"}}},
         {"quartic_n", str_t()},
         {"curve", arr(object({{"K", int_t()}, {"N_bound", int_t()}}))},
         {"comparison", arr(object({{"n", int_t()},
                                    {"worst_bound", int_t()},
                                    {"worst_class", str_t()},
                                    {"envelope", int_t()},
                                    {"quadratic", int_t()},
                                    {"quartic", str_t()}}))}});
  } else {
    throw std::invalid_argument("unknown report kind '" + kind + "'");
  }
  Json out = {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
              {"$id", "adeflat." + kind + ".v" + std::to_string(kSchemaVersion)}};
  out.update(object(props));
  return out;
}

}  // namespace adeflat
