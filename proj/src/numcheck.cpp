#include "supersmooth/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "supersmooth/construct.hpp"
#include "supersmooth/errors.hpp"

namespace supersmooth {

void NumericConfig::validate() const {
  if (!(base_step > 0.0)) throw std::invalid_argument("base step must be positive");
  if (richardson_levels < 1) throw std::invalid_argument("need at least one Richardson level");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (samples_per_ray < 1) throw std::invalid_argument("need at least one sample");
  if (!(sample_radius > 0.0)) throw std::invalid_argument("sample radius must be positive");
}

namespace {

double eval(const ScalarField& f, double x, double y) {
  const double v = f(x, y);
  if (!std::isfinite(v)) {
    throw EvaluationError("non-finite function value at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ")");
  }
  return v;
}

Point2 unit(Point2 v) {
  const double n = std::hypot(v.x, v.y);
  if (!(n > 0.0)) throw InvalidDirection("zero direction vector");
  return {v.x / n, v.y / n};
}

// Richardson tableau over estimates ordered from coarsest to finest step
// (each step half the previous). Column m removes the error term h^powers[m].
DerivativeEstimate extrapolate(std::vector<double> column, const std::vector<int>& powers) {
  if (column.size() == 1) {
    return {column.front(), std::numeric_limits<double>::infinity()};
  }
  double delta = 0.0;
  for (std::size_t m = 0; column.size() > 1; ++m) {
    const double factor = std::ldexp(1.0, powers[m]);
    std::vector<double> next(column.size() - 1);
    for (std::size_t i = 0; i + 1 < column.size(); ++i) {
      next[i] = (factor * column[i + 1] - column[i]) / (factor - 1.0);
    }
    delta = std::abs(next.back() - column.back());
    column = std::move(next);
  }
  return {column.back(), delta};
}

}  // namespace

DerivativeEstimate one_sided_directional_derivative(const ScalarField& f, Point2 p, Point2 v,
                                                    const NumericConfig& cfg) {
  cfg.validate();
  const Point2 u = unit(v);
  const double f0 = eval(f, p.x, p.y);
  std::vector<double> column;
  std::vector<int> powers;
  for (int l = cfg.richardson_levels - 1; l >= 0; --l) {
    const double h = std::ldexp(cfg.base_step, l);
    const double f1 = eval(f, p.x + h * u.x, p.y + h * u.y);
    const double f2 = eval(f, p.x + 2 * h * u.x, p.y + 2 * h * u.y);
    column.push_back((-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h));
  }
  // One-sided error expansion: h^2, h^3, h^4, ...
  for (int m = 0; m < cfg.richardson_levels; ++m) powers.push_back(m + 2);
  return extrapolate(std::move(column), powers);
}

DerivativeEstimate central_directional_derivative(const ScalarField& f, Point2 p, Point2 v,
                                                  const NumericConfig& cfg) {
  cfg.validate();
  const Point2 u = unit(v);
  std::vector<double> column;
  std::vector<int> powers;
  for (int l = cfg.richardson_levels - 1; l >= 0; --l) {
    const double h = std::ldexp(cfg.base_step, l);
    const double fp = eval(f, p.x + h * u.x, p.y + h * u.y);
    const double fm = eval(f, p.x - h * u.x, p.y - h * u.y);
    column.push_back((fp - fm) / (2.0 * h));
  }
  // Central error expansion: h^2, h^4, h^6, ...
  for (int m = 0; m < cfg.richardson_levels; ++m) powers.push_back(2 * (m + 1));
  return extrapolate(std::move(column), powers);
}

std::array<double, 2> central_gradient(const ScalarField& f, Point2 p, const NumericConfig& cfg) {
  return {central_directional_derivative(f, p, {1.0, 0.0}, cfg).estimate,
          central_directional_derivative(f, p, {0.0, 1.0}, cfg).estimate};
}

RayLemmaReport verify_ray_lemma(const ScalarField& f, const ScalarField& g, Point2 ray,
                                const NumericConfig& cfg) {
  cfg.validate();
  const Point2 u = unit(ray);
  RayLemmaReport report;
  for (int i = 0; i < cfg.samples_per_ray; ++i) {
    const double t = cfg.sample_radius * i / cfg.samples_per_ray;
    const Point2 q{t * u.x, t * u.y};
    report.max_value_gap = std::max(report.max_value_gap, std::abs(eval(f, q.x, q.y) - eval(g, q.x, q.y)));
    const double df = one_sided_directional_derivative(f, q, u, cfg).estimate;
    const double dg = one_sided_directional_derivative(g, q, u, cfg).estimate;
    report.max_dirderiv_gap = std::max(report.max_dirderiv_gap, std::abs(df - dg));
  }
  report.pass = report.max_value_gap <= cfg.tolerance && report.max_dirderiv_gap <= cfg.tolerance;
  return report;
}

namespace {

std::vector<double> curve_abscissae(double center, const NumericConfig& cfg) {
  std::vector<double> xs;
  const int n = cfg.samples_per_ray;
  if (n == 1) return {center};
  for (int i = 0; i < n; ++i) xs.push_back(center + cfg.sample_radius * (2.0 * i / (n - 1) - 1.0));
  return xs;
}

}  // namespace

CornerGradientReport verify_corner_gradient(const CurveGluing& cg, const NumericConfig& cfg) {
  cfg.validate();
  CornerGradientReport report;
  for (double x : curve_abscissae(cg.corner_x, cfg)) {
    const double y = cg.g(x);
    report.continuity_gap =
        std::max(report.continuity_gap, std::abs(eval(cg.f_upper, x, y) - eval(cg.f_lower, x, y)));
  }
  const Point2 p = cg.corner();
  report.grad_upper = central_gradient(cg.f_upper, p, cfg);
  report.grad_lower = central_gradient(cg.f_lower, p, cfg);
  report.grad_gap = std::hypot(report.grad_upper[0] - report.grad_lower[0],
                               report.grad_upper[1] - report.grad_lower[1]);
  report.pass = report.continuity_gap <= cfg.tolerance && report.grad_gap <= cfg.tolerance;
  return report;
}

WitnessReport corner_witness_check(const ScalarField& h, const CurveFunction& g, double corner_x,
                                   const NumericConfig& cfg) {
  cfg.validate();
  WitnessReport report;
  for (double x : curve_abscissae(corner_x, cfg)) {
    report.max_curve_value = std::max(report.max_curve_value, std::abs(eval(h, x, g(x))));
  }
  report.vanishes_on_curve = report.max_curve_value <= cfg.tolerance;
  report.invalid_candidate = !report.vanishes_on_curve;
  const auto grad = central_gradient(h, {corner_x, g(corner_x)}, cfg);
  report.grad_norm_at_p = std::hypot(grad[0], grad[1]);
  report.is_witness = report.vanishes_on_curve && report.grad_norm_at_p > std::sqrt(cfg.tolerance);
  return report;
}

PiecewiseField::PiecewiseField(FanPartition fan, std::vector<ScalarField> fields)
    : fan_(std::move(fan)), fields_(std::move(fields)) {
  if (fields_.size() != fan_.size()) {
    throw ArityError("expected " + std::to_string(fan_.size()) + " fields, got " +
                     std::to_string(fields_.size()));
  }
}

PiecewiseField PiecewiseField::from_spline(const PiecewisePoly& spline) {
  std::vector<ScalarField> fields;
  for (const auto& piece : spline.pieces()) {
    fields.emplace_back([piece](double x, double y) { return evaluate(piece, x, y); });
  }
  return {spline.fan(), std::move(fields)};
}

double PiecewiseField::operator()(double x, double y) const {
  if (x == 0.0 && y == 0.0) return fields_.front()(x, y);
  return fields_[locate_sector(fan_, Rational::from_double(x), Rational::from_double(y))](x, y);
}

std::vector<RayLemmaReport> verify_ray_gluing(const PiecewiseField& field, const NumericConfig& cfg) {
  const std::size_t k = field.fan().size();
  std::vector<RayLemmaReport> out;
  for (std::size_t j = 0; j < k; ++j) {
    const Ray& r = field.fan().ray(j);
    out.push_back(verify_ray_lemma(field.field((j + k - 1) % k), field.field(j),
                                   {r.dx().to_double(), r.dy().to_double()}, cfg));
  }
  return out;
}

namespace {

std::vector<NumericFixture> make_fixtures() {
  std::vector<NumericFixture> out;

  {
    NumericFixture fx;
    fx.name = "corner-quadratic";
    fx.description = "y^2 - x^2 above y = |x|, 0 below; corner at the origin";
    fx.gluing = CurveGluing{[](double x) { return std::abs(x); }, 0.0,
                            [](double x, double y) { return y * y - x * x; },
                            [](double, double) { return 0.0; }};
    fx.witness = [](double x, double y) { return y * y - x * x; };
    out.push_back(std::move(fx));
  }
  {
    NumericFixture fx;
    fx.name = "smooth-parabola";
    fx.description = "y - x^2 above y = x^2, 0 below; smooth curve, gradients differ";
    fx.gluing = CurveGluing{[](double x) { return x * x; }, 0.0,
                            [](double x, double y) { return y - x * x; },
                            [](double, double) { return 0.0; }};
    fx.witness = [](double x, double y) { return y - x * x; };
    out.push_back(std::move(fx));
  }
  {
    NumericFixture fx;
    fx.name = "halfplane-n1";
    fx.description = "y^2 on the upper half-plane, 0 on the lower; extra ray (0,1)";
    fx.gluing = CurveGluing{[](double) { return 0.0; }, 0.0,
                            [](double, double y) { return y * y; },
                            [](double, double) { return 0.0; }};
    fx.witness = [](double, double y) { return y; };
    const auto extra = default_halfplane_rays(1);
    const PiecewiseField field = PiecewiseField::from_spline(build_halfplane_example(1, extra));
    const std::size_t k = field.fan().size();
    for (std::size_t j = 0; j < k; ++j) {
      const Ray& r = field.fan().ray(j);
      fx.ray_cases.push_back({"ray " + r.str(), field.field((j + k - 1) % k), field.field(j),
                              {r.dx().to_double(), r.dy().to_double()}});
    }
    out.push_back(std::move(fx));
  }
  {
    NumericFixture fx;
    fx.name = "lemma-xy";
    fx.description = "x^2 against x^2 + xy and x^2 + y along the ray (1,0)";
    fx.ray_cases.push_back({"x^2 | x^2 + xy", [](double x, double) { return x * x; },
                            [](double x, double y) { return x * x + x * y; }, {1.0, 0.0}});
    fx.ray_cases.push_back({"x^2 | x^2 + y", [](double x, double) { return x * x; },
                            [](double x, double y) { return x * x + y; }, {1.0, 0.0}});
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace

const std::vector<NumericFixture>& numeric_fixtures() {
  static const std::vector<NumericFixture> fixtures = make_fixtures();
  return fixtures;
}

const NumericFixture* find_numeric_fixture(std::string_view name) {
  for (const auto& fx : numeric_fixtures()) {
    if (fx.name == name) return &fx;
  }
  return nullptr;
}

}  // namespace supersmooth
