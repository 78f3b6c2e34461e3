#include "thetabar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "thetabar/error.hpp"
#include "thetabar/formats.hpp"
#include "thetabar/verify.hpp"
#include "thetabar/wonder.hpp"

namespace thetabar {

CoefficientModel SessionConfig::model() const {
  if (tadic) {
    if (prime) throw Error(ErrorKind::Usage, "--prime and --tadic are exclusive");
    return CoefficientModel::t_adic();
  }
  try {
    return CoefficientModel::p_adic(prime.value_or(2));
  } catch (const Error& e) {
    throw Error(ErrorKind::Usage, std::string("--prime: ") + e.what());
  }
}

Rational SessionConfig::base_value() const {
  Rational b;
  if (base.empty())
    b = tadic ? Rational(2) : Rational(prime.value_or(2));
  else
    try {
      b = parse_rational(base);
    } catch (const Error&) {
      throw Error(ErrorKind::Usage, "--base must be a rational number, got '" + base + "'");
    }
  if (b <= 1) throw Error(ErrorKind::Usage, "--base must exceed 1, got " + to_string(b));
  return b;
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  return in;
}

void emit(const SessionConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::Usage, "cannot write '" + cfg.out + "'");
  file << text;
}

struct Inputs {
  ApartmentPoint x;
  std::vector<PointRecord> ys;
};

/// A record labelled `x` (or the first unlabelled record when no `x` exists
/// and there are at least two) is the apartment point; the rest are y's.
Inputs split_points(const RootSystem& rs, const std::vector<PointRecord>& records, const std::string& path) {
  Inputs in;
  in.x = ApartmentPoint::origin(rs.rank());
  auto xit = std::find_if(records.begin(), records.end(), [](const PointRecord& r) { return r.label == "x"; });
  if (xit == records.end() && records.size() >= 2 && records.front().label.empty()) xit = records.begin();
  for (auto it = records.begin(); it != records.end(); ++it) {
    if (it == xit) {
      try {
        in.x = it->as_apartment_point();
      } catch (const Error& e) {
        throw Error(ErrorKind::Parse, path + ":" + std::to_string(it->line) + ": " + e.what());
      }
    } else {
      in.ys.push_back(*it);
    }
  }
  if (in.ys.empty()) throw Error(ErrorKind::Parse, path + ": no y record");
  return in;
}

std::string decimal(const Rational& b, const Val& v, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals);
  s << (v.is_infinite() ? 0.0 : std::pow(b.get_d(), -v.value().get_d()));
  return s.str();
}

int cmd_eval(const SessionConfig& cfg, const std::string& points, const std::string& poly,
             std::optional<int> decimals, std::ostream& out) {
  const RootSystem rs = RootSystem::parse(cfg.system);
  const CoefficientModel model = cfg.model();
  const Rational b = cfg.base_value();
  auto pin = open_input(points);
  const Inputs in = split_points(rs, parse_point_file(rs, pin, points), points);
  auto fin = open_input(poly);
  const CellPolynomial f = parse_polynomial(rs, model, fin, poly);
  std::ostringstream text;
  for (const auto& y : in.ys) {
    const Val v = eval_seminorm(model, in.x, y.as_boundary_point(), f);
    text << "val=" << v.to_string();
    if (decimals) text << " abs=" << decimal(b, v, *decimals);
    text << '\n';
  }
  emit(cfg, text.str(), out);
  return 0;
}

int cmd_classify(const SessionConfig& cfg, const std::string& points, std::ostream& out) {
  const RootSystem rs = RootSystem::parse(cfg.system);
  auto pin = open_input(points);
  const Inputs in = split_points(rs, parse_point_file(rs, pin, points), points);
  std::ostringstream text;
  for (const auto& y : in.ys) text << stratum_report(rs, stratum_membership(rs, in.x, y.as_boundary_point())) << '\n';
  emit(cfg, text.str(), out);
  return 0;
}

int cmd_poset(const SessionConfig& cfg, std::ostream& out) {
  const RootSystem rs = RootSystem::parse(cfg.system);
  emit(cfg, poset_dot(rs, closure_poset(rs)), out);
  return 0;
}

int cmd_verify(const SessionConfig& cfg, const std::string& suite, const HarnessOptions& base, std::ostream& out) {
  const RootSystem rs = RootSystem::parse(cfg.system);
  HarnessOptions opts = base;
  opts.seed = cfg.seed;
  const auto reports = run_suite(rs, cfg.model(), suite, opts);
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : reports) {
    text << r.to_json(opts.timing).dump() << '\n';
    ok = ok && r.passed();
  }
  emit(cfg, text.str(), out);
  return ok ? 0 : 1;
}

int cmd_plot(const SessionConfig& cfg, bool overlay, std::ostream& out) {
  const RootSystem rs = RootSystem::parse(cfg.system);
  const PlotGeometry g = plot_geometry(rs, overlay);
  if (cfg.out.empty()) {
    out << plot_csv(rs, g);
    return 0;
  }
  for (const auto& [ext, text] : {std::pair{".csv", plot_csv(rs, g)}, std::pair{".svg", plot_svg(rs, g)}}) {
    std::ofstream file(cfg.out + ext, std::ios::binary);
    if (!file) throw Error(ErrorKind::Usage, "cannot write '" + cfg.out + ext + "'");
    file << text;
  }
  out << "wrote " << cfg.out << ".csv " << cfg.out << ".svg\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seminorms of compactified apartments and wonderful-compactification strata", "thetabar"};
  app.require_subcommand(1);
  app.fallthrough();

  SessionConfig cfg;
  long prime = 0;
  app.add_option("--system", cfg.system, "Root system, e.g. A2 or B2xA1");
  auto* prime_opt = app.add_option("--prime", prime, "p for the p-adic valuation on Q (default 2)");
  auto* tadic_opt = app.add_flag("--tadic", cfg.tadic, "Use Q(t) with the t-adic valuation");
  prime_opt->excludes(tadic_opt);
  app.add_option("--base", cfg.base, "Base b > 1 of the absolute value |.| = b^-val");
  app.add_option("--seed", cfg.seed, "Harness seed");
  app.add_option("--out", cfg.out, "Output file (plot: path prefix for .csv and .svg)");

  std::string points, poly, suite = "all";
  std::optional<int> decimals;
  HarnessOptions hopts;
  bool overlay = false;

  auto* eval = app.add_subcommand("eval", "Evaluate the seminorm of (x, y) at a polynomial");
  eval->add_option("--points", points, "Point file with x and one or more y")->required();
  eval->add_option("--poly", poly, "Polynomial file")->required();
  eval->add_option("--decimals", decimals, "Also print b^-val with this many decimals")->check(CLI::Range(0, 30));

  auto* classify = app.add_subcommand("classify", "Stratum report for each y in a point file");
  classify->add_option("--points", points, "Point file")->required();

  auto* poset = app.add_subcommand("poset", "Closure poset of the strata as DOT");

  auto* verify = app.add_subcommand("verify", "Run the property harness");
  verify->add_option("--suite", suite, "all, seminorm, injectivity, equivariance, continuity, strata or charts");
  verify->add_option("--samples", hopts.samples, "Random cases per property")->check(CLI::PositiveNumber);
  verify->add_option("--horizon", hopts.horizon, "Sequence length for continuity checks")->check(CLI::Range(4, 100000));
  verify->add_flag("--timing", hopts.timing, "Include elapsed time in the reports");

  auto* plot = app.add_subcommand("plot", "Rank-2 compactified apartment as CSV (and SVG with --out)");
  plot->add_flag("--overlay", overlay, "Mark the base points e_tau");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error[usage]: " << msg << '\n';
    return 2;
  }
  if (*prime_opt) cfg.prime = prime;

  try {
    if (*eval) return cmd_eval(cfg, points, poly, decimals, out);
    if (*classify) return cmd_classify(cfg, points, out);
    if (*poset) return cmd_poset(cfg, out);
    if (*verify) return cmd_verify(cfg, suite, hopts, out);
    if (*plot) return cmd_plot(cfg, overlay, out);
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error[" << to_string(e.kind()) << "]: " << msg << '\n';
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace thetabar
