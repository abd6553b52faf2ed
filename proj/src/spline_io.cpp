#include "supersmooth/spline_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "supersmooth/errors.hpp"

namespace supersmooth {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rationals_to_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

std::string encode_spline(const PiecewisePoly& spline,
                          const std::optional<ConstructionInfo>& construction) {
  ordered_json doc;
  doc["rays"] = ordered_json::array();
  for (const auto& r : spline.fan().rays()) {
    doc["rays"].push_back({{"dx", r.dx().str()}, {"dy", r.dy().str()}});
  }
  doc["pieces"] = ordered_json::array();
  for (const auto& piece : spline.pieces()) {
    ordered_json monomials = ordered_json::object();
    for (const auto& [m, c] : piece.terms()) {
      monomials[std::to_string(m.x) + "," + std::to_string(m.y)] = c.str();
    }
    doc["pieces"].push_back({{"monomials", monomials}});
  }
  if (construction) {
    doc["construction"] = {{"n", construction->n},
                           {"slopes", rationals_to_json(construction->slopes)},
                           {"coeffs", rationals_to_json(construction->coeffs)}};
  }
  return doc.dump(2) + "\n";
}

std::string encode_counterexample(const CounterexampleSpec& spec) {
  return encode_spline(spec.spline, ConstructionInfo{spec.n, spec.slopes, spec.coeffs});
}

namespace {

class Decoder {
 public:
  explicit Decoder(std::string_view text) : text_(text) {}

  SplineDocument run() {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text_);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what());
    }
    expect_object(doc, "document");
    only_keys(doc, "document", {"rays", "pieces", "construction"});
    const auto& rays_json = require(doc, "document", "rays");
    const auto& pieces_json = require(doc, "document", "pieces");
    expect_array(rays_json, "rays");
    expect_array(pieces_json, "pieces");
    if (rays_json.size() != pieces_json.size()) {
      throw SchemaError("rays has " + std::to_string(rays_json.size()) + " entries but pieces has " +
                        std::to_string(pieces_json.size()));
    }
    if (rays_json.size() < 2) throw SchemaError("a spline needs at least 2 rays");

    std::vector<Ray> rays;
    for (std::size_t i = 0; i < rays_json.size(); ++i) {
      const std::string where = "rays[" + std::to_string(i) + "]";
      const auto& r = rays_json[i];
      expect_object(r, where);
      only_keys(r, where, {"dx", "dy"});
      rays.emplace_back(rational(require(r, where, "dx"), where + ".dx"),
                        rational(require(r, where, "dy"), where + ".dy"));
    }
    FanPartition fan = build_fan(rays);
    if (fan.rays() != rays) throw SchemaError("rays are not listed in clockwise order");

    std::vector<BiPoly> pieces;
    for (std::size_t i = 0; i < pieces_json.size(); ++i) {
      const std::string where = "pieces[" + std::to_string(i) + "]";
      const auto& p = pieces_json[i];
      expect_object(p, where);
      only_keys(p, where, {"monomials"});
      const auto& monomials = require(p, where, "monomials");
      expect_object(monomials, where + ".monomials");
      BiPoly::TermMap terms;
      for (const auto& [key, value] : monomials.items()) {
        const std::string at = where + ".monomials[\"" + key + "\"]";
        const Monomial m = exponent_key(key, at);
        if (terms.contains(m)) throw SchemaError(at + ": repeated exponent");
        terms.emplace(m, rational(value, at));
      }
      pieces.emplace_back(std::move(terms));
    }

    SplineDocument out{PiecewisePoly(std::move(fan), std::move(pieces)), std::nullopt};
    if (doc.contains("construction")) out.construction = construction(doc["construction"]);
    return out;
  }

 private:
  [[noreturn]] void schema(const std::string& where, const std::string& what) const {
    throw SchemaError(where + ": " + what);
  }

  void expect_object(const ordered_json& j, const std::string& where) const {
    if (!j.is_object()) schema(where, "expected an object");
  }
  void expect_array(const ordered_json& j, const std::string& where) const {
    if (!j.is_array()) schema(where, "expected an array");
  }

  void only_keys(const ordered_json& j, const std::string& where,
                 std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        schema(where, "unknown field \"" + key + "\"");
      }
    }
  }

  const ordered_json& require(const ordered_json& j, const std::string& where,
                              const std::string& key) const {
    if (!j.contains(key)) schema(where, "missing field \"" + key + "\"");
    return j.at(key);
  }

  // 1-based line of the first occurrence of the quoted literal, 0 if absent.
  std::size_t line_of(const std::string& literal) const {
    const std::string needle = "\"" + literal + "\"";
    const auto pos = text_.find(needle);
    if (pos == std::string_view::npos) return 0;
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + pos, '\n'));
  }

  Rational rational(const ordered_json& j, const std::string& where) const {
    if (!j.is_string()) schema(where, "expected a rational string");
    const auto& s = j.get_ref<const std::string&>();
    try {
      return Rational::parse(s);
    } catch (const ParseError& e) {
      const std::size_t line = line_of(s);
      throw ParseError((line ? "line " + std::to_string(line) + ": " : std::string()) + where + ": " +
                       e.what());
    }
  }

  Monomial exponent_key(const std::string& key, const std::string& where) const {
    const auto comma = key.find(',');
    auto parse_part = [&](std::string_view part) {
      unsigned value = 0;
      const auto* end = part.data() + part.size();
      const auto [ptr, ec] = std::from_chars(part.data(), end, value);
      if (part.empty() || ec != std::errc() || ptr != end) schema(where, "exponent key must be \"i,j\"");
      return value;
    };
    if (comma == std::string::npos) schema(where, "exponent key must be \"i,j\"");
    const std::string_view view(key);
    return {parse_part(view.substr(0, comma)), parse_part(view.substr(comma + 1))};
  }

  ConstructionInfo construction(const ordered_json& j) const {
    expect_object(j, "construction");
    only_keys(j, "construction", {"n", "slopes", "coeffs"});
    ConstructionInfo info;
    const auto& n = require(j, "construction", "n");
    if (!n.is_number_unsigned()) schema("construction.n", "expected a nonnegative integer");
    info.n = n.get<unsigned>();
    for (const char* name : {"slopes", "coeffs"}) {
      const auto& arr = require(j, "construction", name);
      const std::string where = std::string("construction.") + name;
      expect_array(arr, where);
      auto& target = std::string_view(name) == "slopes" ? info.slopes : info.coeffs;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        target.push_back(rational(arr[i], where + "[" + std::to_string(i) + "]"));
      }
    }
    return info;
  }

  std::string_view text_;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SplineDocument decode_spline_document(std::string_view text) { return Decoder(text).run(); }

PiecewisePoly decode_spline(std::string_view text) { return decode_spline_document(text).spline; }

std::vector<GridSample> sample_grid(const PiecewisePoly& spline, int grid_n, double radius) {
  if (grid_n < 2) throw std::invalid_argument("grid size must be at least 2");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  const double span = 2.0 * radius / (grid_n - 1);
  for (int row = 0; row < grid_n; ++row) {
    const double y = radius - span * row;
    for (int col = 0; col < grid_n; ++col) {
      const double x = -radius + span * col;
      const Rational rx = Rational::from_double(x);
      const Rational ry = Rational::from_double(y);
      GridSample s{x, y, 0.0, -1};
      if (rx.is_zero() && ry.is_zero()) {
        s.value = evaluate(spline.piece(0), rx, ry).to_double();
      } else {
        s.sector = static_cast<int>(locate_sector(spline.fan(), rx, ry));
        s.value = evaluate(spline.piece(static_cast<std::size_t>(s.sector)), rx, ry).to_double();
      }
      out.push_back(s);
    }
  }
  return out;
}

std::string to_csv(const std::vector<GridSample>& samples) {
  std::string out = "x,y,value,sector\n";
  for (const auto& s : samples) {
    out += format_double(s.x) + "," + format_double(s.y) + "," + format_double(s.value) + "," +
           std::to_string(s.sector) + "\n";
  }
  return out;
}

}  // namespace supersmooth
