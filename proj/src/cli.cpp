#include "chordal/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chordal/capacity.hpp"
#include "chordal/errors.hpp"
#include "chordal/grunsky.hpp"
#include "chordal/io.hpp"
#include "chordal/loewner.hpp"
#include "chordal/transforms.hpp"
#include "json.hpp"

namespace chordal::cli {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// Same measure with every segment integrated at twice its order; the change
// in a transform value is reported as its error estimate.
RealMeasure refined(const RealMeasure& mu) {
  std::vector<DensitySegment> segments = mu.segments();
  for (DensitySegment& s : segments) s.order *= 2;
  return RealMeasure(mu.atoms(), std::move(segments));
}

std::string snapped(double v, double tol) {
  return io::format_real(std::abs(v) < tol ? 0.0 : v);
}

struct TransformArgs {
  std::string measure;
  std::string z;
  std::string op = "cauchy";
};

struct InvertArgs {
  std::string measure;
  std::string interval;
  std::string eps_ladder = "0.1,0.05,0.025,0.0125";
};

struct EvolveArgs {
  std::string driver;
  double t = 0.0;
  std::string z;
  std::string grid;
  double tol = 1e-9;
  unsigned threads = 0;
};

struct GrunskyArgs {
  std::string moments;
  std::string measure;
  int order = 0;
  double boundary_tol = 1e-8;
  bool normalize = false;
};

struct HaymanArgs {
  std::string measure;
  int n = 64;
  int resolution = 2048;
  double eps = 0.0;
  int sweeps = 20;
  std::string curve_csv;
};

void run_transform(const TransformArgs& a, std::ostream& out) {
  const RealMeasure mu = io::load_measure(a.measure);
  const cplx z = io::parse_complex(a.z);
  json j;
  j["op"] = a.op;
  j["z"] = complex_json(z);
  if (a.op == "cauchy" || a.op == "reciprocal") {
    const bool reciprocal = a.op == "reciprocal";
    auto eval = [&](const RealMeasure& m) {
      return reciprocal ? reciprocal_cauchy(m, z) : cauchy_transform(m, z);
    };
    const cplx value = eval(mu);
    j["value"] = complex_json(value);
    j["error_estimate"] = std::abs(value - eval(refined(mu)));
  } else if (a.op == "nevanlinna") {
    const NevanlinnaTriple t =
        nevanlinna_triple([&](cplx w) { return reciprocal_cauchy(mu, w); });
    j["b"] = t.b;
    j["c"] = t.c;
    j["nu_mass"] = t.nu_mass;
    j["tolerance"] = 1e-3;
  } else {
    throw DomainError("unknown --op '" + a.op + "'");
  }
  out << j.dump(2) << "\n";
}

void run_invert(const InvertArgs& a, std::ostream& out) {
  const RealMeasure mu = io::load_measure(a.measure);
  const std::vector<double> interval = io::parse_real_list(a.interval);
  if (interval.size() != 2) throw DomainError("--interval needs a,b");
  const std::vector<double> ladder = io::parse_real_list(a.eps_ladder);
  const LimitEstimate est = stieltjes_invert_estimate(
      [&](cplx z) { return cauchy_transform(mu, z); }, {interval[0], interval[1]},
      ladder);
  json j;
  j["interval"] = interval;
  j["eps_ladder"] = ladder;
  j["value"] = est.value.real();
  j["extrapolation_error"] = est.error;
  out << j.dump(2) << "\n";
}

void run_evolve(const EvolveArgs& a, std::ostream& out) {
  const DriverFamily family = io::load_driver(a.driver);
  std::vector<cplx> zs;
  if (!a.z.empty()) zs.push_back(io::parse_complex(a.z));
  if (!a.grid.empty()) {
    const std::vector<cplx> g = io::load_grid(a.grid);
    zs.insert(zs.end(), g.begin(), g.end());
  }
  if (zs.empty()) throw DomainError("evolve needs --z or --grid");
  SolverConfig config;
  config.tol = a.tol;
  const std::vector<TransitionResult> results =
      evaluate_map_many(family, a.t, zs, config, a.threads);
  out << "t,re_z,im_z,re_f,im_f,err_bound\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const cplx f = results[i].value;
    out << io::format_real(a.t) << ',' << io::format_real(zs[i].real()) << ','
        << io::format_real(zs[i].imag()) << ',' << snapped(f.real(), a.tol) << ','
        << snapped(f.imag(), a.tol) << ',' << io::format_real(results[i].err_bound)
        << "\n";
  }
}

void run_grunsky(const GrunskyArgs& a, std::ostream& out) {
  if (a.moments.empty() == a.measure.empty()) {
    throw DomainError("grunsky needs exactly one of --moments or --measure");
  }
  std::vector<double> moments;
  if (!a.moments.empty()) {
    moments = io::parse_real_list(a.moments);
  } else {
    RealMeasure mu = io::load_measure(a.measure);
    if (a.normalize) {
      const auto [lo, hi] = mu.support_hull();
      if (hi > lo) {
        const double scale = 4.0 / (hi - lo);
        mu = affine_pushforward(mu, scale, -2.0 - scale * lo);
      }
    }
    for (int k = 0; k <= 2 * a.order; ++k) moments.push_back(moment(mu, k));
  }
  out << io::to_json(univalence_certificate(moments, a.order, a.boundary_tol))
      << "\n";
}

void run_hayman(const HaymanArgs& a, std::ostream& out) {
  const RealMeasure mu = io::load_measure(a.measure);
  double eps = a.eps;
  if (eps == 0.0) {
    const auto [lo, hi] = mu.support_hull();
    eps = 1e-3 * (hi - lo);
  }
  const CapacityReport report = hayman_report(mu, a.n, a.resolution, eps, a.sweeps);
  if (!a.curve_csv.empty()) {
    const BoundaryCurve curve = boundary_image(mu, a.resolution, eps);
    std::ofstream csv(a.curve_csv);
    if (!csv) throw DomainError("cannot write " + a.curve_csv);
    csv << "re,im\n";
    for (const cplx& p : curve.points) {
      csv << io::format_real(p.real()) << ',' << io::format_real(p.imag()) << "\n";
    }
  }
  out << io::to_json(report, a.resolution, a.sweeps) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Chordal Loewner evolution and univalence diagnostics"};
  app.name(args.empty() ? "chordal" : args.front());
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Cauchy-type transforms of a measure");
  transform->add_option("--measure", ta.measure, "measure JSON file")->required();
  transform->add_option("--z", ta.z, "point a+bi in the upper half-plane")->required();
  transform->add_option("--op", ta.op, "cauchy | reciprocal | nevanlinna")
      ->check(CLI::IsMember({"cauchy", "reciprocal", "nevanlinna"}));

  InvertArgs ia;
  auto* invert = app.add_subcommand("invert", "Stieltjes inversion over an interval");
  invert->add_option("--measure", ia.measure, "measure JSON file")->required();
  invert->add_option("--interval", ia.interval, "a,b")->required();
  invert->add_option("--eps-ladder", ia.eps_ladder, "decreasing eps values");

  EvolveArgs ea;
  auto* evolve = app.add_subcommand("evolve", "Evaluate the Loewner map f(t; z)");
  evolve->add_option("--driver", ea.driver, "driver JSON file")->required();
  evolve->add_option("--t", ea.t, "time")->required();
  evolve->add_option("--z", ea.z, "point a+bi");
  evolve->add_option("--grid", ea.grid, "file with one point per line");
  evolve->add_option("--tol", ea.tol, "absolute error target");
  evolve->add_option("--threads", ea.threads, "worker threads (0 = all cores)");

  GrunskyArgs ga;
  auto* grunsky = app.add_subcommand("grunsky", "Grunsky eigenvalue certificate");
  grunsky->add_option("--moments", ga.moments, "a0,a1,...,a2N");
  grunsky->add_option("--measure", ga.measure, "measure JSON file");
  grunsky->add_option("--order", ga.order, "truncation order N")->required();
  grunsky->add_option("--boundary-tol", ga.boundary_tol, "boundary band around 1");
  grunsky->add_flag("--normalize", ga.normalize,
                    "map the support hull of --measure onto [-2, 2] first");

  HaymanArgs ha;
  auto* hayman = app.add_subcommand("hayman", "Transfinite-diameter diagnostic");
  hayman->add_option("--measure", ha.measure, "measure JSON file")->required();
  hayman->add_option("--n", ha.n, "number of Fekete points");
  hayman->add_option("--resolution", ha.resolution, "boundary samples per trace");
  hayman->add_option("--eps", ha.eps, "offset from the support (default 1e-3 (B-A))");
  hayman->add_option("--sweeps", ha.sweeps, "exchange sweeps");
  hayman->add_option("--curve-csv", ha.curve_csv, "write the boundary curve here");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("chordal");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (transform->parsed()) run_transform(ta, out);
    if (invert->parsed()) run_invert(ia, out);
    if (evolve->parsed()) run_evolve(ea, out);
    if (grunsky->parsed()) run_grunsky(ga, out);
    if (hayman->parsed()) run_hayman(ha, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace chordal::cli
