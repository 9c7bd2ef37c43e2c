#include "symkin/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "symkin/motion_spec.hpp"
#include "symkin/output.hpp"
#include "symkin/report.hpp"

namespace symkin::cli {

namespace {

struct Options {
  std::string spec;
  double at = 0.0;
  int order = 6;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
  std::string out;
  std::string svg;
  std::string preset;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f.flush()) throw InputError("cannot write '" + path + "'");
}

// The body point at the reported pole must be at rest.
void check_pole(const MotionSpec& spec, const KinematicReport& r) {
  if (!r.pole) return;
  const MotionState s = evaluate(spec, r.at, 1);
  const Vec2 r_ap = *r.pole - s.a_pos();
  const Vec2 v = point_derivative(s, r_ap, 1);
  const double scale = norm(s.a_jets[1]) + std::abs(s.omega[0]) * norm(r_ap);
  if (!(norm(v) <= 1e-9 * scale)) throw InvariantViolation("velocity at the pole does not vanish");
}

int analyze(const Options& o, std::ostream& out) {
  const MotionSpec spec = load_spec(o.spec);
  const KinematicReport r = analyze_instant(spec, o.at, o.order);
  check_pole(spec, r);
  out << report_json(r);
  return r.pole ? kExitOk : kExitDegenerate;
}

int sweep(const Options& o, std::ostream& out) {
  const MotionSpec spec = load_spec(o.spec);
  const auto grid = sample_grid(o.from, o.to, o.steps);
  write_file(o.out, sweep_csv(kernels::omp::analyze_sweep(spec, grid, o.order)), out);
  return kExitOk;
}

int polodes(const Options& o, bool at_given, std::ostream& out) {
  const MotionSpec spec = load_spec(o.spec);
  const auto grid = sample_grid(o.from, o.to, o.steps);
  const double reference = at_given ? o.at : o.from;
  const auto rows = kernels::omp::sample_polodes(spec, grid, reference);
  write_file(o.out, polodes_csv(rows), out);
  if (!o.svg.empty()) write_file(o.svg, polodes_svg(rows, analyze_instant(spec, reference, 3)), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Planar kinematics of rigid motions: poles, Bresse circles, polodes."};
  app.name("symkin");
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "Report the instantaneous kinematics as JSON");
  an->add_option("--spec", o.spec, "Motion file")->required();
  an->add_option("--at", o.at, "Parameter value")->required();
  an->add_option("--order", o.order, "Highest derivative order")->check(CLI::Range(1, 12));

  auto* sw = app.add_subcommand("sweep", "Tabulate poles over a parameter range as CSV");
  auto* po = app.add_subcommand("polodes", "Sample fixed and moving polodes as CSV and SVG");
  for (auto* sub : {sw, po}) {
    sub->add_option("--spec", o.spec, "Motion file")->required();
    sub->add_option("--from", o.from, "First parameter value")->required();
    sub->add_option("--to", o.to, "Last parameter value")->required();
    sub->add_option("--steps", o.steps, "Number of samples")->required()->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "CSV output path, - for standard output")->required();
  }
  sw->add_option("--order", o.order, "Highest derivative order")->check(CLI::Range(3, 12));
  po->add_option("--svg", o.svg, "SVG output path");
  auto* at_opt = po->add_option("--at", o.at, "Parameter of the drawn instant (default: --from)");

  auto* pr = app.add_subcommand("presets", "List or print the shipped motions");
  pr->require_subcommand(1);
  auto* pr_list = pr->add_subcommand("list", "Print preset names");
  auto* pr_dump = pr->add_subcommand("dump", "Print a preset motion file");
  pr_dump->add_option("name", o.preset, "Preset name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*an) return analyze(o, out);
    if (*sw) return sweep(o, out);
    if (*po) return polodes(o, at_opt->count() > 0, out);
    if (*pr_list) {
      for (const auto& name : preset_names()) out << name << '\n';
      return kExitOk;
    }
    if (*pr_dump) {
      out << preset_document(o.preset);
      return kExitOk;
    }
  } catch (const SpecError& e) {
    err << "symkin: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "symkin: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "symkin: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace symkin::cli
