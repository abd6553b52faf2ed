#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supersmooth/construct.hpp"
#include "supersmooth/spline.hpp"

namespace supersmooth {

/// Metadata block emitted for constructed counterexamples.
struct ConstructionInfo {
  unsigned n = 0;
  std::vector<Rational> slopes;
  std::vector<Rational> coeffs;

  friend bool operator==(const ConstructionInfo&, const ConstructionInfo&) = default;
};

struct SplineDocument {
  PiecewisePoly spline;
  std::optional<ConstructionInfo> construction;
};

/// {"rays":[{"dx":"1","dy":"0"},...],"pieces":[{"monomials":{"0,2":"1"}},...],
///  "construction":{"n":..,"slopes":[..],"coeffs":[..]}}
/// with "construction" present only when given.
std::string encode_spline(const PiecewisePoly& spline,
                          const std::optional<ConstructionInfo>& construction = std::nullopt);
std::string encode_counterexample(const CounterexampleSpec& spec);

/// Strict decoder: unknown fields, wrong types, length mismatches and rays
/// out of clockwise order raise SchemaError; malformed JSON or rationals
/// raise ParseError naming the offending line.
SplineDocument decode_spline_document(std::string_view text);
PiecewisePoly decode_spline(std::string_view text);

struct GridSample {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  int sector = -1;  // -1 only at the exact origin
};

/// grid_n x grid_n points over [-radius, radius]^2, rows with y descending,
/// x ascending within a row. Values are exact piece evaluations rounded to
/// double. Throws std::invalid_argument for grid_n < 2 or radius <= 0.
std::vector<GridSample> sample_grid(const PiecewisePoly& spline, int grid_n, double radius);

/// Header "x,y,value,sector", numbers with 17 significant digits.
std::string to_csv(const std::vector<GridSample>& samples);

}  // namespace supersmooth
