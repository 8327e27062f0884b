#include "swell/commands.hpp"

#include "swell/classical.hpp"
#include "swell/errors.hpp"
#include "swell/output.hpp"
#include "swell/quadrature.hpp"
#include "swell/quantum.hpp"
#include "swell/specfun.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>

namespace swell::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct CommonOptions {
  std::string out;
  std::string svg;
  std::size_t grid_points = 1000;
  std::optional<double> r_max;
  std::optional<unsigned> threads;
};

unsigned thread_count(const CommonOptions& common) {
  if (common.threads) {
    return *common.threads;
  }
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string(kThreadsEnv) + " must be a non-negative integer");
    }
  }
  return 0;
}

numerics::RadialGrid make_grid(const CommonOptions& common, double default_r_max) {
  const double r_max = common.r_max.value_or(default_r_max);
  if (common.grid_points < 2) {
    throw UsageError("--grid-points must be at least 2");
  }
  if (!(r_max > 0.0 && r_max <= 1.0)) {
    throw UsageError("--r-max must lie in (0, 1]");
  }
  return numerics::RadialGrid::uniform(common.grid_points, r_max);
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_atomic(path, text);
  }
}

void add_output(CLI::App* cmd, CommonOptions& common, bool csv) {
  auto* opt = cmd->add_option("--out", common.out, csv ? "CSV output path" : "Output path");
  if (csv) {
    opt->required();
  }
}

void add_grid(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--grid-points", common.grid_points, "Number of grid points")
      ->capture_default_str();
  cmd->add_option("--r-max", common.r_max, "Upper end of the radial grid (units of a)");
}

void add_threads(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--threads", common.threads,
                  std::string("Worker threads, 0 = all cores (default from ") + kThreadsEnv + ")");
}

// ---------------------------------------------------------------------------

void cmd_classical_analytic(const CommonOptions& common) {
  // The density diverges logarithmically at r = 1.
  const auto grid = make_grid(common, 0.999);
  if (!(grid.points().back() < 1.0)) {
    throw UsageError("classical analytic density diverges at r = 1; use --r-max < 1");
  }
  const auto curve = classical::classical_total_curve(grid);
  write_atomic(common.out, curve_csv(curve));
  if (!common.svg.empty()) {
    write_atomic(common.svg, svg_plot("Classical total radial density",
                                      {to_series("r ln((1+r)/(1-r))", curve)}));
  }
}

struct McOptions {
  std::string mode = "paper";
  std::uint64_t samples = 1'000'000;
  std::size_t bins = 100;
  std::uint64_t seed = 42;
};

void cmd_classical_mc(const CommonOptions& common, const McOptions& mc) {
  classical::McConfig config;
  config.mode = mc.mode == "liouville" ? classical::Weighting::Liouville : classical::Weighting::Paper;
  config.samples = mc.samples;
  config.bins = mc.bins;
  config.seed = mc.seed;
  config.r_max = common.r_max.value_or(1.0);
  if (config.samples < 1) {
    throw UsageError("--samples must be at least 1");
  }
  if (config.bins < 1) {
    throw UsageError("--bins must be at least 1");
  }
  if (!(config.r_max > 0.0 && config.r_max <= 1.0)) {
    throw UsageError("--r-max must lie in (0, 1]");
  }

  const auto hist = classical::mc_histogram(config, thread_count(common));
  std::string csv = "r_mid,density,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double lo = hist.bin_edges[i];
    const double hi = hist.bin_edges[i + 1];
    const double density = static_cast<double>(hist.counts[i]) / (hist.total_weight * (hi - lo));
    csv += format_fixed17(0.5 * (lo + hi)) + ',' + format_fixed17(density) + ',' +
           std::to_string(hist.counts[i]) + '\n';
  }
  write_atomic(common.out, csv);

  if (!common.svg.empty() && hist.counts.size() >= 2) {
    const auto curve = numerics::histogram_density(hist);
    std::vector<double> reference(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double r = curve.grid()[i];
      reference[i] = config.mode == classical::Weighting::Paper
                         ? classical::classical_total_density(r)
                         : 3.0 * r * r;
    }
    auto ref_series = to_series(mc.mode + " closed form", curve);
    ref_series.y = reference;
    write_atomic(common.svg, svg_plot("Monte Carlo radial density (" + mc.mode + ")",
                                      {to_series("Monte Carlo", curve), ref_series}));
  }
}

void cmd_quantum_level(const CommonOptions& common, int n, std::ostream& out) {
  if (n < 1) {
    throw UsageError("--n must be at least 1");
  }
  const auto spec = quantum::level_spec(n);
  std::string text;
  text += "n: " + std::to_string(spec.n) + '\n';
  text += "energy: " + format_shortest(spec.energy) + " hbar^2/(mu a^2)\n";
  text += "l_max: " + std::to_string(spec.l_max) + '\n';
  text += "degeneracy: " + std::to_string(spec.degeneracy) + '\n';
  text += "weights: ";
  for (std::size_t l = 0; l < spec.weights.size(); ++l) {
    text += (l ? "," : "") + format_shortest(spec.weights[l]);
  }
  text += '\n';
  emit_text(text, common.out, out);
}

struct DensityOptions {
  int n = 0;
  std::optional<int> l;
  bool total = false;
  std::optional<std::string> branch;
};

quantum::Branch parse_branch(const std::string& name) {
  if (name == "B" || name == "J") {
    return quantum::Branch::J;
  }
  if (name == "N0" || name == "N") {
    return quantum::Branch::N0;
  }
  if (name == "H1") {
    return quantum::Branch::H1;
  }
  if (name == "H2") {
    return quantum::Branch::H2;
  }
  throw UsageError("unknown branch " + name);
}

void cmd_quantum_density(const CommonOptions& common, const DensityOptions& opts) {
  if (opts.n < 1) {
    throw UsageError("--n must be at least 1");
  }
  if (opts.total == opts.l.has_value()) {
    throw UsageError("give exactly one of --l or --total");
  }
  if (opts.total && opts.branch) {
    throw UsageError("--branch applies to a single l, not --total");
  }
  const auto grid = make_grid(common, 1.0);

  std::optional<numerics::DensityCurve> curve;
  std::string label;
  if (opts.total) {
    const quantum::LevelDensity density(opts.n);
    const double mass = numerics::integrate([&](double r) { return density(r); }, 0.0, 1.0, 1e-10);
    if (std::abs(mass - 1.0) > 1e-8) {
      throw NumericalError("total density of level " + std::to_string(opts.n) + " has mass " +
                           format_fixed17(mass));
    }
    curve = quantum::total_radial_density(opts.n, grid, thread_count(common));
    label = "total, n = " + std::to_string(opts.n);
  } else if (opts.branch) {
    const quantum::StateLabel state(opts.n, *opts.l, 0, parse_branch(*opts.branch));
    curve = quantum::state_radial_density(quantum::make_radial_state(state), grid);
    label = "state n = " + std::to_string(opts.n) + ", l = " + std::to_string(*opts.l) + " (" +
            *opts.branch + ")";
  } else {
    curve = quantum::mean_radial_density(opts.n, *opts.l, grid);
    label = "mean n = " + std::to_string(opts.n) + ", l = " + std::to_string(*opts.l);
  }

  write_atomic(common.out, curve_csv(*curve));
  if (!common.svg.empty()) {
    write_atomic(common.svg, svg_plot("Quantum radial density", {to_series(label, *curve)}));
  }
}

struct CompareOptions {
  std::vector<int> n_list;
  std::string metric = "l1";
};

void cmd_compare(const CommonOptions& common, const CompareOptions& opts, std::ostream& err) {
  std::vector<int> levels;
  std::set<int> seen;
  for (int n : opts.n_list) {
    if (n < 1) {
      throw UsageError("every n in --n-list must be at least 1");
    }
    if (!seen.insert(n).second) {
      err << "warning: duplicate n = " << n << " in --n-list ignored\n";
      continue;
    }
    levels.push_back(n);
  }
  if (levels.empty()) {
    throw UsageError("--n-list is empty");
  }

  const auto grid = make_grid(common, 0.99);
  if (!(grid.points().back() < 1.0)) {
    throw UsageError("compare needs --r-max < 1 (the classical density diverges at r = 1)");
  }
  const unsigned threads = thread_count(common);

  const std::filesystem::path out_path(common.out);
  const auto stem = (out_path.parent_path() / out_path.stem()).string();

  std::string report = "n,l_max,degeneracy,l1_distance,sup_distance\n";
  std::vector<Series> plot;
  std::optional<numerics::DensityCurve> classical_curve;
  std::vector<double> distances;
  for (int n : levels) {
    auto cmp = quantum::compare_to_classical(n, grid, threads);
    const auto& r = cmp.report;
    report += std::to_string(r.n) + ',' + std::to_string(r.l_max) + ',' +
              std::to_string(r.degeneracy) + ',' + format_fixed17(r.l1_distance) + ',' +
              format_fixed17(r.sup_distance) + '\n';
    distances.push_back(opts.metric == "sup" ? r.sup_distance : r.l1_distance);
    write_atomic(stem + "_n" + std::to_string(n) + ".csv", curve_csv(cmp.quantum));
    plot.push_back(to_series("n = " + std::to_string(n), cmp.quantum));
    classical_curve = std::move(cmp.classical);
  }
  write_atomic(stem + "_classical.csv", curve_csv(*classical_curve));
  write_atomic(common.out, report);

  if (!common.svg.empty()) {
    plot.push_back(to_series("classical", *classical_curve));
    write_atomic(common.svg, svg_plot("Quantum total vs classical radial density", plot));
  }

  for (std::size_t i = 1; i < distances.size(); ++i) {
    if (levels[i] > levels[i - 1] && !(distances[i] < distances[i - 1])) {
      err << "note: " << opts.metric << " distance did not decrease from n = " << levels[i - 1]
          << " to n = " << levels[i] << '\n';
    }
  }
}

struct SpecfunOptions {
  std::string fn;
  std::optional<int> l;
  std::optional<double> x;
  std::optional<int> k;
};

void cmd_specfun_eval(const CommonOptions& common, const SpecfunOptions& opts, std::ostream& out) {
  if (!opts.l) {
    throw UsageError("--l is required");
  }
  double value = 0.0;
  if (opts.fn == "zero") {
    if (!opts.k || opts.x) {
      throw UsageError("--fn zero takes --k and no --x");
    }
    value = specfun::sph_bessel_zero(*opts.l, *opts.k);
  } else {
    if (!opts.x || opts.k) {
      throw UsageError("--fn " + opts.fn + " takes --x and no --k");
    }
    value = opts.fn == "j" ? specfun::sph_bessel_j(*opts.l, *opts.x)
                           : specfun::sph_bessel_n(*opts.l, *opts.x);
  }
  emit_text(format_fixed17(value) + '\n', common.out, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical and quantum radial densities of the infinite spherical well", "swell"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* classical_cmd = app.add_subcommand("classical", "Classical radial densities");
  classical_cmd->require_subcommand(1);
  auto* analytic = classical_cmd->add_subcommand("analytic", "Closed-form r ln((1+r)/(1-r))");
  add_output(analytic, common, true);
  add_grid(analytic, common);
  analytic->add_option("--svg", common.svg, "Also write an SVG plot");

  McOptions mc;
  auto* mc_cmd = classical_cmd->add_subcommand("mc", "Monte Carlo chord sampler");
  add_output(mc_cmd, common, true);
  mc_cmd->add_option("--mode", mc.mode, "Ensemble weighting")
      ->check(CLI::IsMember({"paper", "liouville"}))
      ->capture_default_str();
  mc_cmd->add_option("--samples", mc.samples, "Number of chord samples")->capture_default_str();
  mc_cmd->add_option("--bins", mc.bins, "Histogram bins on [0, r-max]")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "RNG seed")->capture_default_str();
  mc_cmd->add_option("--r-max", common.r_max, "Upper histogram edge (default 1)");
  add_threads(mc_cmd, common);
  mc_cmd->add_option("--svg", common.svg, "Also write an SVG plot");

  auto* quantum_cmd = app.add_subcommand("quantum", "Quantum level structure and densities");
  quantum_cmd->require_subcommand(1);
  int level_n = 0;
  auto* level = quantum_cmd->add_subcommand("level", "Print the structure of level n");
  level->add_option("--n", level_n, "Level index")->required();
  add_output(level, common, false);

  DensityOptions density;
  auto* density_cmd = quantum_cmd->add_subcommand("density", "Radial density curves");
  density_cmd->add_option("--n", density.n, "Level index")->required();
  auto* l_opt = density_cmd->add_option("--l", density.l, "Angular momentum (mean density)");
  auto* total_opt = density_cmd->add_flag("--total", density.total, "Degeneracy-weighted total");
  l_opt->excludes(total_opt);
  density_cmd->add_option("--branch", density.branch, "State branch B|N0|H1|H2 (with --l)")
      ->check(CLI::IsMember({"B", "J", "N", "N0", "H1", "H2"}));
  add_output(density_cmd, common, true);
  add_grid(density_cmd, common);
  add_threads(density_cmd, common);
  density_cmd->add_option("--svg", common.svg, "Also write an SVG plot");

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "Quantum total densities vs the classical one");
  compare_cmd->add_option("--n-list", compare.n_list, "Comma-separated levels")
      ->delimiter(',')
      ->required();
  compare_cmd->add_option("--metric", compare.metric, "Metric checked for convergence")
      ->check(CLI::IsMember({"l1", "sup"}))
      ->capture_default_str();
  add_output(compare_cmd, common, true);
  add_grid(compare_cmd, common);
  add_threads(compare_cmd, common);
  compare_cmd->add_option("--svg", common.svg, "Also write an SVG plot");

  SpecfunOptions sf;
  auto* specfun_cmd = app.add_subcommand("specfun", "Special-function debugging");
  specfun_cmd->require_subcommand(1);
  auto* eval = specfun_cmd->add_subcommand("eval", "Evaluate j_l(x), n_l(x) or the k-th zero of j_l");
  eval->add_option("--fn", sf.fn, "j | n | zero")->check(CLI::IsMember({"j", "n", "zero"}))->required();
  eval->add_option("--l", sf.l, "Order");
  eval->add_option("--x", sf.x, "Argument");
  eval->add_option("--k", sf.k, "Zero index");
  add_output(eval, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analytic->parsed()) {
      cmd_classical_analytic(common);
    } else if (mc_cmd->parsed()) {
      cmd_classical_mc(common, mc);
    } else if (level->parsed()) {
      cmd_quantum_level(common, level_n, out);
    } else if (density_cmd->parsed()) {
      cmd_quantum_density(common, density);
    } else if (compare_cmd->parsed()) {
      cmd_compare(common, compare, err);
    } else if (eval->parsed()) {
      cmd_specfun_eval(common, sf, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace swell::cli
