#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "catalog/catalog.hpp"

namespace adeflat {

using Point2 = std::array<double, 2>;

class PeriodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h(x, y) = H(x, y; s) at a fixed real parameter point, with its gradient.
class PlaneCurve {
 public:
  PlaneCurve(const SingularitySpec& spec, const std::vector<double>& s);
  /// Any polynomial over x, y (other variables must not occur).
  PlaneCurve(const MultiPoly& h);

  double value(const Point2& p) const;
  Point2 gradient(const Point2& p) const;
  /// (h_xx, h_xy, h_yy)
  std::array<double, 3> hessian(const Point2& p) const;
  /// Evaluates a numerator over x, y (and the spec's s-variables, held at s).
  CompiledPoly compile(const MultiPoly& numerator) const;
  double eval(const CompiledPoly& c, const Point2& p) const;
  /// Typical size of h near the origin, for relative tolerances.
  double scale() const { return scale_; }
  const std::vector<std::string>& vars() const { return vars_; }

 private:
  std::vector<std::string> vars_;
  std::vector<double> params_;
  CompiledPoly h_, hx_, hy_, hxx_, hxy_, hyy_;
  double scale_ = 1;
};

struct CriticalPoint {
  Point2 p{};
  double value = 0;
  int kind = 0;  // +1 local minimum, -1 local maximum, 0 saddle or degenerate
};

/// Real critical points found by Newton from a grid over [-R, R]^2, deduplicated, sorted by x.
std::vector<CriticalPoint> real_critical_points(const PlaneCurve& c, double R, int grid = 24);

struct TraceOptions {
  double max_step = 0.05;
  double max_angle = 0.08;  // radians between successive tangents
  double newton_tol = 1e-14;
  int max_nodes = 200000;
};

struct OvalTrace {
  std::vector<double> s;
  Point2 center{};
  Point2 seed{};
  std::vector<Point2> nodes;  // closed, counterclockwise, nodes.front() == nodes.back()
  double arclength = 0;
  int refinement = 0;         // max_step = base / 2^refinement
  double area = 0;            // enclosed (shoelace)
};

/// Traces the oval of {h = 0} around an interior point (normally a local extremum).
OvalTrace find_oval(const PlaneCurve& c, const Point2& center, const TraceOptions& opt = {});
/// Ovals around every local extremum in [-R, R]^2 (R chosen from s if 0), sorted by the center's x.
std::vector<OvalTrace> find_ovals(const SingularitySpec& spec, const std::vector<double>& s, double R = 0,
                                  const TraceOptions& opt = {});

enum class Chart { Auto, X, Y };

struct QuadOptions {
  double abs_tol = 1e-10;
  Chart chart = Chart::Auto;
};

/// Oriented integral of numerator dx/h_y (= -numerator dy/h_x) over nodes[i0..i1].
double integrate_arc(const PlaneCurve& c, const OvalTrace& tr, const CompiledPoly& numerator, std::size_t i0,
                     std::size_t i1, const QuadOptions& q = {}, double* err = nullptr);
/// The closed-loop period.
double integrate_period(const PlaneCurve& c, const OvalTrace& tr, const MultiPoly& numerator,
                        const QuadOptions& q = {}, double* err = nullptr);
/// Composite rule with a fixed number of Gauss-Legendre nodes per segment.
double integrate_period_fixed(const PlaneCurve& c, const OvalTrace& tr, const MultiPoly& numerator, int points);

struct OrderCheck {
  std::vector<double> steps, values;
  double observed_order = 0;
  bool passed = false;
};
/// Midpoint rule on traces with steps base, base/2, base/4, base/8 (base = arclength/64 if 0).
OrderCheck quadrature_order_check(const PlaneCurve& c, const Point2& center, const MultiPoly& numerator,
                                  double base_step = 0);

}  // namespace adeflat
