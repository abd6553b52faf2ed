#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supersmooth/fan.hpp"
#include "supersmooth/spline.hpp"

namespace supersmooth {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using ScalarField = std::function<double(double, double)>;
using CurveFunction = std::function<double(double)>;

struct NumericConfig {
  double base_step = 1e-3;
  int richardson_levels = 3;
  double tolerance = 1e-6;
  int samples_per_ray = 9;
  // Ray samples cover t in [0, sample_radius); curve samples cover
  // corner_x +- sample_radius.
  double sample_radius = 0.5;

  /// Throws std::invalid_argument on non-positive steps, levels or tolerance.
  void validate() const;
};

struct DerivativeEstimate {
  double estimate = 0.0;
  double error_estimate = 0.0;  // magnitude of the last extrapolation change
};

/// Forward derivative along v/|v| at p: the stencil
/// (-3 f(p) + 4 f(p + h v) - f(p + 2h v)) / 2h on steps base_step * 2^l,
/// Richardson-extrapolated from the coarsest step down to base_step.
/// Throws EvaluationError if f returns a non-finite value.
DerivativeEstimate one_sided_directional_derivative(const ScalarField& f, Point2 p, Point2 v,
                                                    const NumericConfig& cfg);

/// Two-sided counterpart, for fields defined on a full neighborhood of p.
DerivativeEstimate central_directional_derivative(const ScalarField& f, Point2 p, Point2 v,
                                                  const NumericConfig& cfg);

std::array<double, 2> central_gradient(const ScalarField& f, Point2 p, const NumericConfig& cfg);

struct RayLemmaReport {
  double max_value_gap = 0.0;
  double max_dirderiv_gap = 0.0;
  bool pass = false;
};

/// Compares f and g, and their derivatives along the ray, at samples_per_ray
/// points t * ray/|ray| with t in [0, sample_radius).
RayLemmaReport verify_ray_lemma(const ScalarField& f, const ScalarField& g, Point2 ray,
                                const NumericConfig& cfg);

/// Two fields glued along the graph y = g(x): f_upper above it, f_lower
/// below. The candidate corner is P = (corner_x, g(corner_x)).
struct CurveGluing {
  CurveFunction g;
  double corner_x = 0.0;
  ScalarField f_upper;
  ScalarField f_lower;

  Point2 corner() const { return {corner_x, g(corner_x)}; }
};

struct CornerGradientReport {
  double continuity_gap = 0.0;
  std::array<double, 2> grad_upper{};
  std::array<double, 2> grad_lower{};
  double grad_gap = 0.0;
  bool pass = false;
};

CornerGradientReport verify_corner_gradient(const CurveGluing& cg, const NumericConfig& cfg);

struct WitnessReport {
  double max_curve_value = 0.0;
  bool vanishes_on_curve = false;
  double grad_norm_at_p = 0.0;
  bool is_witness = false;
  bool invalid_candidate = false;  // h does not vanish on the curve
};

/// Checks h = 0 on the curve near P and grad h(P) != 0 (norm above
/// sqrt(tolerance)); such an h certifies that the curve is smooth at P.
WitnessReport corner_witness_check(const ScalarField& h, const CurveFunction& g, double corner_x,
                                   const NumericConfig& cfg);

/// Black-box fields, one per sector of a fan.
class PiecewiseField {
 public:
  /// Throws ArityError unless fields.size() == fan.size().
  PiecewiseField(FanPartition fan, std::vector<ScalarField> fields);
  static PiecewiseField from_spline(const PiecewisePoly& spline);

  const FanPartition& fan() const { return fan_; }
  const ScalarField& field(std::size_t j) const { return fields_[j]; }
  /// Field of locate_sector(x, y); field 0 at the origin.
  double operator()(double x, double y) const;

 private:
  FanPartition fan_;
  std::vector<ScalarField> fields_;
};

/// verify_ray_lemma for every ray j with the fields on either side of it.
std::vector<RayLemmaReport> verify_ray_gluing(const PiecewiseField& field, const NumericConfig& cfg);

struct RayLemmaCase {
  std::string label;
  ScalarField f;
  ScalarField g;
  Point2 ray;
};

struct NumericFixture {
  std::string name;
  std::string description;
  std::optional<CurveGluing> gluing;
  std::optional<ScalarField> witness;  // candidate h for the gluing's curve
  std::vector<RayLemmaCase> ray_cases;
};

/// "corner-quadratic", "smooth-parabola", "halfplane-n1", "lemma-xy".
const std::vector<NumericFixture>& numeric_fixtures();

/// nullptr for an unknown name.
const NumericFixture* find_numeric_fixture(std::string_view name);

}  // namespace supersmooth
