#include "periods/oval.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

namespace adeflat {

namespace {

double norm(const Point2& v) { return std::hypot(v[0], v[1]); }

std::string where(const Point2& p) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << p[0] << ", " << p[1] << ")";
  return os.str();
}

}  // namespace

PlaneCurve::PlaneCurve(const SingularitySpec& spec, const std::vector<double>& s) : vars_(spec.vars), params_(s) {
  if (s.size() != spec.s_names.size()) throw PeriodError("parameter point has wrong dimension");
  h_ = CompiledPoly(spec.H, vars_);
  hx_ = CompiledPoly(spec.H.derivative("x"), vars_);
  hy_ = CompiledPoly(spec.H.derivative("y"), vars_);
  hxx_ = CompiledPoly(spec.H.derivative("x").derivative("x"), vars_);
  hxy_ = CompiledPoly(spec.H.derivative("x").derivative("y"), vars_);
  hyy_ = CompiledPoly(spec.H.derivative("y").derivative("y"), vars_);
  scale_ = 1;
  for (double v : s) scale_ += std::abs(v);
}

PlaneCurve::PlaneCurve(const MultiPoly& h) : vars_{"x", "y"} {
  const MultiPoly hh = h.embedded(merge_vars(vars_, h.vars()));
  for (const auto& v : hh.used_vars())
    if (v != "x" && v != "y") throw PeriodError("plane curve polynomial uses variable '" + v + "'");
  h_ = CompiledPoly(hh, vars_);
  hx_ = CompiledPoly(hh.derivative("x"), vars_);
  hy_ = CompiledPoly(hh.derivative("y"), vars_);
  hxx_ = CompiledPoly(hh.derivative("x").derivative("x"), vars_);
  hxy_ = CompiledPoly(hh.derivative("x").derivative("y"), vars_);
  hyy_ = CompiledPoly(hh.derivative("y").derivative("y"), vars_);
  scale_ = 1;
  for (const auto& [e, c] : hh.terms())
    if (c.get_d() != 0) scale_ = std::max(scale_, std::abs(c.get_d()));
}

double PlaneCurve::eval(const CompiledPoly& c, const Point2& p) const {
  double buf[64];
  std::vector<double> big;
  double* v = buf;
  const std::size_t n = 2 + params_.size();
  if (n > 64) {
    big.resize(n);
    v = big.data();
  }
  v[0] = p[0];
  v[1] = p[1];
  for (std::size_t i = 0; i < params_.size(); ++i) v[2 + i] = params_[i];
  return c(v);
}

double PlaneCurve::value(const Point2& p) const { return eval(h_, p); }

Point2 PlaneCurve::gradient(const Point2& p) const { return {eval(hx_, p), eval(hy_, p)}; }

std::array<double, 3> PlaneCurve::hessian(const Point2& p) const { return {eval(hxx_, p), eval(hxy_, p), eval(hyy_, p)}; }

CompiledPoly PlaneCurve::compile(const MultiPoly& numerator) const { return CompiledPoly(numerator, vars_); }

std::vector<CriticalPoint> real_critical_points(const PlaneCurve& c, double R, int grid) {
  auto hessian = [&](const Point2& p, double out[4]) {
    const auto h = c.hessian(p);
    out[0] = h[0];
    out[1] = out[2] = h[1];
    out[3] = h[2];
  };
  std::vector<CriticalPoint> out;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j) {
      Point2 p{-R + 2 * R * i / grid, -R + 2 * R * j / grid};
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const Point2 g = c.gradient(p);
        double H[4];
        hessian(p, H);
        const double det = H[0] * H[3] - H[1] * H[2];
        if (std::abs(det) < 1e-300) break;
        const Point2 d{(H[3] * g[0] - H[1] * g[1]) / det, (-H[2] * g[0] + H[0] * g[1]) / det};
        p = {p[0] - d[0], p[1] - d[1]};
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || norm(p) > 10 * R) break;
        if (norm(d) < 1e-13 * (1 + norm(p))) {
          ok = true;
          break;
        }
      }
      if (!ok || norm(c.gradient(p)) > 1e-9 * c.scale()) continue;
      bool dup = false;
      for (const auto& q : out)
        if (std::hypot(q.p[0] - p[0], q.p[1] - p[1]) < 1e-7 * (1 + norm(p))) dup = true;
      if (dup) continue;
      double H[4];
      hessian(p, H);
      const double det = H[0] * H[3] - H[1] * H[2];
      CriticalPoint cp;
      cp.p = p;
      cp.value = c.value(p);
      cp.kind = det > 1e-10 ? (H[0] > 0 ? 1 : -1) : 0;
      out.push_back(cp);
    }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.p[0] != b.p[0] ? a.p[0] < b.p[0] : a.p[1] < b.p[1];
  });
  return out;
}

namespace {

bool project(const PlaneCurve& c, Point2& q, double tol) {
  for (int it = 0; it < 12; ++it) {
    const double h = c.value(q);
    const Point2 g = c.gradient(q);
    const double gg = g[0] * g[0] + g[1] * g[1];
    if (gg == 0) return false;
    q = {q[0] - h * g[0] / gg, q[1] - h * g[1] / gg};
    if (std::abs(c.value(q)) < tol) return true;
  }
  return false;
}

}  // namespace

namespace {

struct Segment {
  Point2 a, b;
  bool xchart;
};

// Point of the curve over the chart coordinate u, starting from the chord.
Point2 chart_point(const PlaneCurve& c, const Segment& s, double u) {
  Point2 p;
  if (s.xchart) {
    const double w = s.b[0] == s.a[0] ? 0.5 : (u - s.a[0]) / (s.b[0] - s.a[0]);
    p = {u, s.a[1] + w * (s.b[1] - s.a[1])};
    double last = INFINITY;
    for (int it = 0; it < 30; ++it) {
      const double d = c.value(p) / c.gradient(p)[1];
      p[1] -= d;
      if (std::abs(d) < 1e-15 * (1 + std::abs(p[1])) || std::abs(d) >= 0.5 * last) break;
      last = std::abs(d);
    }
  } else {
    const double w = s.b[1] == s.a[1] ? 0.5 : (u - s.a[1]) / (s.b[1] - s.a[1]);
    p = {s.a[0] + w * (s.b[0] - s.a[0]), u};
    double last = INFINITY;
    for (int it = 0; it < 30; ++it) {
      const double d = c.value(p) / c.gradient(p)[0];
      p[0] -= d;
      if (std::abs(d) < 1e-15 * (1 + std::abs(p[0])) || std::abs(d) >= 0.5 * last) break;
      last = std::abs(d);
    }
  }
  return p;
}

double chart_integrand(const PlaneCurve& c, const CompiledPoly& g, const Segment& s, double u) {
  const Point2 p = chart_point(c, s, u);
  const Point2 gr = c.gradient(p);
  if (norm(gr) < 1e-8) throw PeriodError("both partials vanish on the trace at " + where(p));
  return s.xchart ? c.eval(g, p) / gr[1] : -c.eval(g, p) / gr[0];
}

// |d(arclength)/du| in the segment's chart.
double chart_speed(const PlaneCurve& c, const Segment& s, double u) {
  const Point2 gr = c.gradient(chart_point(c, s, u));
  return norm(gr) / std::abs(s.xchart ? gr[1] : gr[0]);
}

Segment make_segment(const PlaneCurve& c, const Point2& a, const Point2& b, Chart chart) {
  Segment s{a, b, true};
  if (chart == Chart::Auto) {
    const Point2 g = c.gradient({0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])});
    s.xchart = std::abs(g[1]) >= std::abs(g[0]);
  } else {
    s.xchart = chart == Chart::X;
  }
  return s;
}

}  // namespace

OvalTrace find_oval(const PlaneCurve& c, const Point2& center, const TraceOptions& opt) {
  const double tol = opt.newton_tol * c.scale();
  const double hc = c.value(center);
  if (std::abs(hc) < 1e-10 * c.scale())
    throw PeriodError("parameter point on the discriminant: the curve passes through " + where(center));

  // seed: first sign change along a ray from the center
  Point2 seed{};
  double rseed = 0;
  bool found = false;
  for (int dir = 0; dir < 8 && !found; ++dir) {
    const double a = dir * M_PI / 4;
    const Point2 u{std::cos(a), std::sin(a)};
    double r0 = 0, r = 1e-4;
    while (r < 1e4) {
      const Point2 q{center[0] + r * u[0], center[1] + r * u[1]};
      if ((c.value(q) > 0) != (hc > 0)) {
        found = true;
        break;
      }
      r0 = r;
      r *= 1.1;
    }
    if (!found) continue;
    double lo = r0, hi = r;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      const double m = 0.5 * (lo + hi);
      const Point2 q{center[0] + m * u[0], center[1] + m * u[1]};
      if ((c.value(q) > 0) == (hc > 0)) lo = m;
      else hi = m;
    }
    seed = {center[0] + hi * u[0], center[1] + hi * u[1]};
    rseed = hi;
    if (!project(c, seed, tol)) found = false;
  }
  if (!found) throw PeriodError("no seed found: the curve is empty around " + where(center));

  auto tangent = [&](const Point2& p) {
    const Point2 g = c.gradient(p);
    const double n = norm(g);
    if (n < 1e-8) throw PeriodError("trace passes near a critical point at " + where(p));
    return Point2{-g[1] / n, g[0] / n};
  };

  const double ds_max = std::min(opt.max_step, 0.2 * rseed);
  double ds = ds_max;
  OvalTrace tr;
  tr.center = center;
  tr.seed = seed;
  tr.nodes.push_back(seed);
  Point2 p = seed, T = tangent(seed);
  bool left = false;
  while (true) {
    if ((int)tr.nodes.size() > opt.max_nodes) throw PeriodError("oval trace did not close");
    const double dist = std::hypot(p[0] - seed[0], p[1] - seed[1]);
    if (dist > 4 * ds_max) left = true;
    if (left && (dist <= 1.2 * ds || (dist < 3 * ds_max && (seed[0] - p[0]) * T[0] + (seed[1] - p[1]) * T[1] < 0))) {
      tr.nodes.push_back(seed);
      break;
    }
    Point2 q{p[0] + ds * T[0], p[1] + ds * T[1]};
    bool ok = project(c, q, tol);
    Point2 Tq{};
    if (ok) {
      const Point2 g = c.gradient(q);
      if (norm(g) < 1e-8) ok = false;
      else Tq = {-g[1] / norm(g), g[0] / norm(g)};
    }
    const double step = std::hypot(q[0] - p[0], q[1] - p[1]);
    if (ok) {
      const double cosang = std::clamp(T[0] * Tq[0] + T[1] * Tq[1], -1.0, 1.0);
      ok = std::acos(cosang) < opt.max_angle && step > 0.5 * ds && step < 1.5 * ds;
    }
    if (!ok) {
      ds *= 0.5;
      if (ds < 1e-12 * (1 + rseed)) throw PeriodError("step rejected repeatedly near " + where(p) + ": passage near a critical point");
      continue;
    }
    tr.nodes.push_back(q);
    tr.arclength += step;
    const double cosang = std::clamp(T[0] * Tq[0] + T[1] * Tq[1], -1.0, 1.0);
    p = q;
    T = Tq;
    if (std::acos(cosang) < 0.25 * opt.max_angle) ds = std::min(ds_max, 1.5 * ds);
  }
  tr.arclength = 0;
  for (std::size_t i = 0; i + 1 < tr.nodes.size(); ++i) {
    const Segment s = make_segment(c, tr.nodes[i], tr.nodes[i + 1], Chart::Auto);
    const double lo = s.xchart ? s.a[0] : s.a[1];
    const double hi = s.xchart ? s.b[0] : s.b[1];
    if (lo != hi)
      tr.arclength += std::abs(boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          [&](double u) { return chart_speed(c, s, u); }, lo, hi, 4, 1e-12));
  }

  double area = 0, wind = 0;
  for (std::size_t i = 0; i + 1 < tr.nodes.size(); ++i) {
    const auto& u = tr.nodes[i];
    const auto& v = tr.nodes[i + 1];
    area += u[0] * v[1] - v[0] * u[1];
    wind += std::atan2((u[0] - center[0]) * (v[1] - center[1]) - (u[1] - center[1]) * (v[0] - center[0]),
                       (u[0] - center[0]) * (v[0] - center[0]) + (u[1] - center[1]) * (v[1] - center[1]));
  }
  if (std::abs(std::abs(wind) - 2 * M_PI) > 1e-6) throw PeriodError("traced curve does not enclose " + where(center));
  if (area < 0) std::reverse(tr.nodes.begin(), tr.nodes.end());
  tr.area = std::abs(area) / 2;
  int lev = 0;
  for (double st = 0.05; st > opt.max_step * 1.0000001; st /= 2) ++lev;
  tr.refinement = lev;
  return tr;
}

std::vector<OvalTrace> find_ovals(const SingularitySpec& spec, const std::vector<double>& s, double R,
                                  const TraceOptions& opt) {
  const PlaneCurve c(spec, s);
  if (R <= 0) {
    R = 2;
    for (double v : s) R += std::abs(v);
  }
  std::vector<OvalTrace> out;
  for (const auto& cp : real_critical_points(c, R)) {
    if (cp.kind == 0) continue;
    if ((cp.kind > 0) != (cp.value < 0)) continue;
    try {
      OvalTrace tr = find_oval(c, cp.p, opt);
      tr.s = s;
      out.push_back(std::move(tr));
    } catch (const PeriodError&) {
    }
  }
  return out;
}


double integrate_arc(const PlaneCurve& c, const OvalTrace& tr, const CompiledPoly& g, std::size_t i0,
                     std::size_t i1, const QuadOptions& q, double* err) {
  using boost::math::quadrature::gauss_kronrod;
  double total = 0, e_total = 0;
  const double rel = std::max(1e-15, std::min(1e-10, q.abs_tol * 1e-2));
  for (std::size_t i = i0; i < i1; ++i) {
    const Segment s = make_segment(c, tr.nodes[i], tr.nodes[i + 1], q.chart);
    const double lo = s.xchart ? s.a[0] : s.a[1];
    const double hi = s.xchart ? s.b[0] : s.b[1];
    if (lo == hi) continue;
    double e = 0;
    total += gauss_kronrod<double, 31>::integrate([&](double u) { return chart_integrand(c, g, s, u); }, lo, hi, 12,
                                                  rel, &e);
    e_total += e;
  }
  if (err) *err = e_total;
  return total;
}

double integrate_period(const PlaneCurve& c, const OvalTrace& tr, const MultiPoly& numerator, const QuadOptions& q,
                        double* err) {
  const CompiledPoly g = c.compile(numerator);
  double e = 0;
  const double v = integrate_arc(c, tr, g, 0, tr.nodes.size() - 1, q, &e);
  if (err) *err = e;
  if (e > q.abs_tol * (1 + std::abs(v)))
    throw PeriodError("quadrature error estimate " + std::to_string(e) + " above tolerance");
  return v;
}

double integrate_period_fixed(const PlaneCurve& c, const OvalTrace& tr, const MultiPoly& numerator, int points) {
  const CompiledPoly g = c.compile(numerator);
  std::vector<double> xs, ws;
  if (points == 1) {
    xs = {0};
    ws = {2};
  } else if (points == 2) {
    xs = {-1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};
    ws = {1, 1};
  } else {
    throw PeriodError("fixed rule supports 1 or 2 points per segment");
  }
  double total = 0;
  for (std::size_t i = 0; i + 1 < tr.nodes.size(); ++i) {
    const Segment s = make_segment(c, tr.nodes[i], tr.nodes[i + 1], Chart::Auto);
    const double lo = s.xchart ? s.a[0] : s.a[1];
    const double hi = s.xchart ? s.b[0] : s.b[1];
    const double m = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < xs.size(); ++k) total += r * ws[k] * chart_integrand(c, g, s, m + r * xs[k]);
  }
  return total;
}

OrderCheck quadrature_order_check(const PlaneCurve& c, const Point2& center, const MultiPoly& numerator,
                                  double base_step) {
  OrderCheck oc;
  TraceOptions opt;
  opt.max_angle = 1.0;
  if (base_step <= 0) base_step = find_oval(c, center).arclength / 64;
  for (int k = 0; k < 4; ++k) {
    opt.max_step = base_step / (1 << k);
    const OvalTrace tr = find_oval(c, center, opt);
    oc.steps.push_back(opt.max_step);
    oc.values.push_back(integrate_period_fixed(c, tr, numerator, 1));
  }
  const std::size_t n = oc.values.size();
  const double d1 = std::abs(oc.values[n - 3] - oc.values[n - 2]);
  const double d2 = std::abs(oc.values[n - 2] - oc.values[n - 1]);
  oc.observed_order = d2 > 0 ? std::log2(d1 / d2) : INFINITY;
  oc.passed = oc.observed_order >= 1.9;
  return oc;
}

}  // namespace adeflat
