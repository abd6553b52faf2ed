#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "supersmooth/construct.hpp"
#include "supersmooth/dimension.hpp"
#include "supersmooth/errors.hpp"
#include "supersmooth/numcheck.hpp"
#include "supersmooth/spline.hpp"
#include "supersmooth/spline_io.hpp"

namespace supersmooth::cli {

namespace {

// Raised for problems the user fixes by changing the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_slopes(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw InvalidSlopes("no slopes given");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error("cannot write " + output);
  file << text;
}

std::string render_pieces(const PiecewisePoly& f) {
  std::ostringstream s;
  for (std::size_t j = 0; j < f.size(); ++j) {
    s << "sector " << j << " [" << f.fan().ray(j) << " -> " << f.fan().ray((j + 1) % f.size())
      << "]: " << f.piece(j) << "\n";
  }
  return s.str();
}

std::string render_origin_table(const PiecewisePoly& f, unsigned max_order) {
  std::ostringstream s;
  for (const auto& row : origin_partials(f, max_order)) {
    s << "d(" << row.index.x << "," << row.index.y << "):";
    for (const auto& v : row.values) s << " " << v;
    s << (row.agrees ? "  agree" : "  differ") << "\n";
  }
  return s.str();
}

std::string render_numeric_fixture(const NumericFixture& fx, const NumericConfig& cfg) {
  std::ostringstream s;
  s.precision(12);
  s << "fixture: " << fx.name << "\n" << fx.description << "\n";
  if (fx.gluing) {
    const auto r = verify_corner_gradient(*fx.gluing, cfg);
    s << "continuity gap: " << r.continuity_gap << "\n";
    s << "grad upper: (" << r.grad_upper[0] << ", " << r.grad_upper[1] << ")\n";
    s << "grad lower: (" << r.grad_lower[0] << ", " << r.grad_lower[1] << ")\n";
    s << "gradient gap: " << r.grad_gap << "\n";
    s << "corner gradient check: " << (r.pass ? "pass" : "fail") << "\n";
  }
  if (fx.gluing && fx.witness) {
    const auto w = corner_witness_check(*fx.witness, fx.gluing->g, fx.gluing->corner_x, cfg);
    s << "witness vanishes on curve: " << (w.vanishes_on_curve ? "yes" : "no") << "\n";
    s << "witness gradient norm: " << w.grad_norm_at_p << "\n";
    s << "smoothness witness: " << (w.is_witness ? "yes" : "no") << "\n";
  }
  for (const auto& c : fx.ray_cases) {
    const auto r = verify_ray_lemma(c.f, c.g, c.ray, cfg);
    s << "ray lemma [" << c.label << "]: value gap " << r.max_value_gap << ", derivative gap "
      << r.max_dirderiv_gap << ", " << (r.pass ? "pass" : "fail") << "\n";
  }
  return s.str();
}

int run_demo(const std::string& name, unsigned n, std::uint64_t seed, std::ostream& out) {
  if (const NumericFixture* fx = find_numeric_fixture(name)) {
    out << render_numeric_fixture(*fx, NumericConfig{});
    return kExitOk;
  }
  if (name == "farin") {
    const FanPartition fan = build_fan({Ray(1, 0), Ray(-1, 2), Ray(-1, -3)});
    const SplineSpace space = spline_space(fan, 3, 1);
    std::mt19937_64 rng(seed);
    const PiecewisePoly f = sample_spline(space, rng);
    out << "C^1 cubic splines on 3 rays: dimension " << space.dimension << "\n";
    out << render_pieces(f) << supersmoothness_verdict(f).render();
    return kExitOk;
  }
  if (name == "halfplane") {
    const PiecewisePoly f = build_halfplane_example(n, default_halfplane_rays(n));
    out << render_pieces(f) << supersmoothness_verdict(f).render();
    return kExitOk;
  }
  if (name == "counterexample") {
    if (n == 0) throw UsageError("counterexample needs --n >= 1");
    std::vector<Rational> slopes;
    for (unsigned i = 1; i <= n + 1; ++i) slopes.emplace_back(i);
    const CounterexampleSpec spec = build_counterexample(slopes, n);
    out << "coefficients:";
    for (const auto& c : spec.coeffs) out << " " << c;
    out << "\n" << render_pieces(spec.spline) << supersmoothness_verdict(spec.spline).render();
    return kExitOk;
  }
  if (name == "twopiece") {
    const PiecewisePoly f(build_fan({Ray(1, 0), Ray(0, 1)}), {BiPoly(), BiPoly(Rational(1))});
    out << render_pieces(f) << supersmoothness_verdict(f).render();
    return kExitOk;
  }
  throw UsageError("unknown demo '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact supersmoothness analysis of piecewise polynomials over fans", "supersmooth"};
  app.require_subcommand(1);

  std::string output;
  unsigned n = 1;
  std::string slopes;
  std::string file;
  std::optional<unsigned> max_order;
  unsigned degree = 0;
  unsigned smoothness = 0;
  std::string demo_name;
  std::uint64_t seed = kDefaultSeed;
  int grid = 21;
  double radius = 1.0;

  auto* construct = app.add_subcommand("construct", "Build the counterexample spline for given slopes");
  construct->add_option("--n", n, "Target order n (spline is C^(n-1))")->required();
  construct->add_option("--slopes", slopes, "Comma-separated rationals a_2..a_{n+2}")->required();
  construct->add_option("-o,--output", output, "Write JSON here instead of stdout");

  auto* check = app.add_subcommand("check", "Report smoothness orders of a spline JSON file");
  check->add_option("file", file, "Spline JSON")->required();
  check->add_option("--max-order", max_order, "Also print origin partials up to this order");

  auto* dim = app.add_subcommand("dim", "Dimension of the spline space on the fan (1,0) + slope rays");
  dim->add_option("--degree", degree, "Polynomial degree")->required();
  dim->add_option("--smoothness", smoothness, "Smoothness across rays")->required();
  dim->add_option("--slopes", slopes, "Comma-separated slopes; rays lie in the lower half-plane")
      ->required();

  auto* demo = app.add_subcommand("demo", "Run a built-in example");
  demo->add_option("name", demo_name,
                   "farin | halfplane | counterexample | twopiece | corner-quadratic | "
                   "smooth-parabola | halfplane-n1 | lemma-xy")
      ->required();
  demo->add_option("--n", n, "Order parameter for halfplane/counterexample");
  demo->add_option("--seed", seed, "Random seed for sampled splines");

  auto* sample = app.add_subcommand("sample", "Sample a spline JSON file on a grid as CSV");
  sample->add_option("file", file, "Spline JSON")->required();
  sample->add_option("--grid", grid, "Points per axis (>= 2)");
  sample->add_option("--radius", radius, "Half-width of the square (> 0)");
  sample->add_option("-o,--output", output, "Write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (construct->parsed()) {
      const CounterexampleSpec spec = build_counterexample(parse_slopes(slopes), n);
      emit(encode_counterexample(spec), output, out);
    } else if (check->parsed()) {
      const PiecewisePoly f = decode_spline(read_file(file));
      out << supersmoothness_verdict(f).render();
      if (max_order) out << render_origin_table(f, *max_order);
    } else if (dim->parsed()) {
      std::vector<Ray> rays{Ray(1, 0)};
      for (const auto& a : parse_slopes(slopes)) rays.push_back(lower_ray_for_slope(a));
      out << spline_space_dimension(build_fan(rays), degree, smoothness) << "\n";
    } else if (demo->parsed()) {
      return run_demo(demo_name, n, seed, out);
    } else if (sample->parsed()) {
      if (grid < 2 || !(radius > 0.0)) throw UsageError("--grid must be >= 2 and --radius > 0");
      emit(to_csv(sample_grid(decode_spline(read_file(file)), grid, radius)), output, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace supersmooth::cli
