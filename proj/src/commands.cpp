#include "iqls/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "iqls/errors.hpp"
#include "iqls/format.hpp"
#include "iqls/io.hpp"
#include "iqls/qubo.hpp"
#include "iqls/rng.hpp"
#include "iqls/splines.hpp"
#include "iqls/version.hpp"

namespace iqls::cli {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string bounds_flag_string(const BoundsSpec& b) {
  if (b.kind == BoundsSpec::Kind::File) return b.path;
  return format_double(b.lo) + ":" + format_double(b.hi);
}

nlohmann::json base_manifest(const std::string& command, std::uint64_t seed) {
  return {{"command", command},
          {"version", kLibraryVersion},
          {"created_utc", utc_timestamp()},
          {"seed", seed}};
}

void write_manifest(const std::string& path, const nlohmann::json& manifest) {
  write_text_file(path, manifest.dump(2) + "\n");
}

nlohmann::json solver_flags_json(const SolverFlags& s) {
  return {{"solver", backend_name(s.backend)},
          {"seed", s.seed},
          {"restarts", s.restarts},
          {"sweeps", s.sweeps}};
}

double gaussian(std::mt19937_64& rng, double sigma) {
  // Box-Muller; nudge u1 away from zero so the log is finite.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

}  // namespace

BoundsSpec parse_bounds(const std::string& text) {
  BoundsSpec spec;
  spec.is_default = false;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    spec.kind = BoundsSpec::Kind::File;
    spec.path = text;
    return spec;
  }
  spec.kind = BoundsSpec::Kind::Uniform;
  try {
    spec.lo = parse_double(text.substr(0, colon), "bounds lower");
    spec.hi = parse_double(text.substr(colon + 1), "bounds upper");
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("--bounds expects lo:hi or a file path: ") +
                                e.what());
  }
  if (!(spec.lo < spec.hi)) {
    throw std::invalid_argument("--bounds requires lo < hi, got " + text);
  }
  return spec;
}

SearchBox resolve_bounds(const BoundsSpec& spec, std::size_t dim) {
  if (spec.kind == BoundsSpec::Kind::Uniform) return uniform_box(dim, spec.lo, spec.hi);

  const std::string text = read_text_file(spec.path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty bounds file '" + spec.path + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "lower,upper") {
    throw ParseError("bounds file header must be lower,upper, got '" + line + "'");
  }
  std::vector<double> lo, hi;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("bounds file line " + std::to_string(line_no) + " needs lower,upper");
    }
    lo.push_back(parse_double(line.substr(0, comma),
                              "bounds line " + std::to_string(line_no) + " lower"));
    hi.push_back(parse_double(line.substr(comma + 1),
                              "bounds line " + std::to_string(line_no) + " upper"));
  }
  if (lo.size() != dim) {
    throw std::invalid_argument("bounds file has " + std::to_string(lo.size()) +
                                " rows but the problem has " + std::to_string(dim) + " weights");
  }
  return SearchBox(std::move(lo), std::move(hi));
}

AnnealConfig SolverFlags::anneal_config() const {
  AnnealConfig cfg;
  cfg.seed = seed;
  cfg.num_restarts = restarts;
  cfg.sweeps_per_restart = sweeps;
  return cfg;
}

// --- gen-data ---------------------------------------------------------

GenDataResult run_gen_data(const GenDataOptions& opt) {
  if (opt.features < 1) throw std::invalid_argument("--features must be >= 1");
  if (opt.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (!(opt.domain_lo < opt.domain_hi)) throw std::invalid_argument("--domain requires lo < hi");
  if (opt.noise_sigma < 0.0) throw std::invalid_argument("--noise must be >= 0");
  if (opt.out_path.empty()) throw std::invalid_argument("--out is required");

  const std::size_t d = static_cast<std::size_t>(opt.features);
  const std::size_t n = static_cast<std::size_t>(opt.samples);

  auto rng = seeded_engine(opt.seed, 0);
  std::vector<double> w_true(d);
  for (auto& w : w_true) w = uniform_in(rng, -5.0, 5.0);

  Matrix x(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) x(i, j) = uniform_in(rng, opt.domain_lo, opt.domain_hi);
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) y[i] += w_true[j] * x(i, j);
    if (opt.noise_sigma > 0.0) y[i] += gaussian(rng, opt.noise_sigma);
  }
  const Dataset ds(std::move(x), std::move(y));
  write_dataset_csv(opt.out_path, ds);

  auto manifest = base_manifest("gen-data", opt.seed);
  manifest["flags"] = {{"features", opt.features},
                       {"samples", opt.samples},
                       {"domain", format_double(opt.domain_lo) + ":" + format_double(opt.domain_hi)},
                       {"noise", opt.noise_sigma},
                       {"out", opt.out_path}};
  manifest["notes"] = {"true weights drawn uniformly from [-5,5]; distribution is a "
                       "library default, not a reproduced setting"};
  manifest["results"] = {{"true_weights", w_true}};
  const std::string manifest_path = opt.out_path + ".manifest.json";
  write_manifest(manifest_path, manifest);

  std::cout << "wrote " << opt.out_path << " (" << n << " samples, " << d << " features)\n";
  return {opt.out_path, manifest_path, std::move(w_true)};
}

// --- fit-linear -------------------------------------------------------

namespace {

IqlsTrace fit_dataset(const Dataset& ds, int bits, int iterations, const BoundsSpec& bounds,
                      const SolverFlags& solver, double loss_tolerance,
                      std::vector<std::string>& notes) {
  if (bounds.is_default) {
    notes.push_back("initial bounds not specified; using [-10,10] per weight");
  }
  IqlsConfig cfg{
      .bits_per_weight = bits,
      .max_iterations = iterations,
      .initial_box = resolve_bounds(bounds, ds.num_features()),
      .backend = solver.backend,
      .anneal = solver.anneal_config(),
      .loss_tolerance = loss_tolerance,
  };
  return run_iqls(ds, cfg);
}

}  // namespace

FitLinearResult run_fit_linear(const FitLinearOptions& opt) {
  if (opt.out_prefix.empty()) throw std::invalid_argument("--out prefix is required");
  const Dataset ds = read_dataset_csv(opt.data_path);

  std::vector<std::string> notes = {
      "no intercept term is added; append a constant-1 feature column to model one"};
  const IqlsTrace trace =
      fit_dataset(ds, opt.bits, opt.iterations, opt.bounds, opt.solver, opt.loss_tolerance, notes);

  FitLinearResult res{
      .trace_csv_path = opt.out_prefix + ".trace.csv",
      .trace_json_path = opt.out_prefix + ".trace.json",
      .manifest_path = opt.out_prefix + ".manifest.json",
      .trace = trace,
  };
  write_text_file(res.trace_csv_path, trace_csv(trace));
  write_text_file(res.trace_json_path, trace_json(trace).dump(2) + "\n");

  auto manifest = base_manifest("fit-linear", opt.solver.seed);
  manifest["flags"] = solver_flags_json(opt.solver);
  manifest["flags"].update({{"data", opt.data_path},
                            {"bits", opt.bits},
                            {"iterations", opt.iterations},
                            {"bounds", bounds_flag_string(opt.bounds)},
                            {"loss_tolerance", opt.loss_tolerance},
                            {"out", opt.out_prefix}});
  manifest["notes"] = notes;
  manifest["results"] = {{"final_mse", trace.records.back().mse},
                         {"final_weights", trace.final_weights},
                         {"iterations_run", trace.records.size()},
                         {"stop_reason", stop_reason_name(trace.stop_reason)}};
  write_manifest(res.manifest_path, manifest);

  std::cout << "fit-linear: " << trace.records.size() << " iterations, final mse "
            << format_double(trace.records.back().mse) << "\n";
  return res;
}

// --- fit-spline -------------------------------------------------------

FitSplineResult run_fit_spline(const FitSplineOptions& opt) {
  if (opt.out_prefix.empty()) throw std::invalid_argument("--out prefix is required");
  if (opt.grid_points < 2) throw std::invalid_argument("--grid-points must be >= 2");
  const BenchmarkFunction* target = find_benchmark(opt.target);
  if (target == nullptr) {
    std::string names;
    for (const auto& f : benchmark_functions()) names += (names.empty() ? "" : ", ") + f.name;
    throw std::invalid_argument("unknown target '" + opt.target + "' (supported: " + names + ")");
  }

  const SplineBasis basis = uniform_knots(target->x_min, target->x_max, opt.knots);
  auto [xs, ys] = sample_uniform(*target, opt.samples);
  const Dataset ds(design_matrix(basis, xs), ys);

  std::vector<std::string> notes;
  if (opt.bounds.is_default) {
    notes.push_back("coefficient bounds not specified; using [-10,10] per coefficient");
  }
  std::vector<std::string> fit_notes;
  const IqlsTrace trace = fit_dataset(ds, opt.bits, opt.iterations, opt.bounds, opt.solver,
                                      opt.loss_tolerance, fit_notes);

  double classical = 0.0;
  try {
    classical = mse(ds, classical_ls(ds));
  } catch (const RankDeficientError&) {
    classical = std::numeric_limits<double>::quiet_NaN();
    notes.push_back("classical least-squares baseline unavailable (rank-deficient basis)");
  }

  FitSplineResult res{
      .trace_csv_path = opt.out_prefix + ".trace.csv",
      .curves_csv_path = opt.out_prefix + ".curves.csv",
      .manifest_path = opt.out_prefix + ".manifest.json",
      .final_mse_vs_truth = trace.records.back().mse,
      .classical_mse = classical,
      .trace = trace,
  };
  write_text_file(res.trace_csv_path, trace_csv(trace));

  // Dense per-iteration curves; one column per iteration so intermediate
  // fits can be rendered next to the final one.
  std::ostringstream curves;
  curves << "x,target";
  for (const auto& rec : trace.records) curves << ",fit_" << rec.iteration;
  curves << "\n";
  for (int g = 0; g < opt.grid_points; ++g) {
    const double x =
        target->x_min + g * (target->x_max - target->x_min) / (opt.grid_points - 1);
    curves << format_double(x) << "," << format_double(target->fn(x));
    for (const auto& rec : trace.records) {
      curves << "," << format_double(evaluate(basis, rec.weights, x));
    }
    curves << "\n";
  }
  write_text_file(res.curves_csv_path, curves.str());

  auto manifest = base_manifest("fit-spline", opt.solver.seed);
  manifest["flags"] = solver_flags_json(opt.solver);
  manifest["flags"].update({{"target", opt.target},
                            {"knots", opt.knots},
                            {"bits", opt.bits},
                            {"iterations", opt.iterations},
                            {"samples", opt.samples},
                            {"grid_points", opt.grid_points},
                            {"bounds", bounds_flag_string(opt.bounds)},
                            {"loss_tolerance", opt.loss_tolerance},
                            {"out", opt.out_prefix}});
  manifest["notes"] = notes;
  manifest["results"] = {{"final_mse_vs_truth", res.final_mse_vs_truth},
                         {"classical_ls_mse", res.classical_mse},
                         {"coefficients", trace.final_weights},
                         {"iterations_run", trace.records.size()}};
  write_manifest(res.manifest_path, manifest);

  std::cout << "fit-spline " << opt.target << ": final mse "
            << format_double(res.final_mse_vs_truth) << " (classical baseline "
            << format_double(res.classical_mse) << ")\n";
  return res;
}

// --- sweep-bits -------------------------------------------------------

SweepBitsResult run_sweep_bits(const SweepBitsOptions& opt) {
  if (opt.out_path.empty()) throw std::invalid_argument("--out is required");
  if (opt.bits_list.empty()) throw std::invalid_argument("--bits needs at least one value");
  const Dataset ds = read_dataset_csv(opt.data_path);

  std::ostringstream csv;
  csv << "m,iteration,mse\n";
  std::vector<std::string> notes;
  for (int m : opt.bits_list) {
    std::vector<std::string> run_notes;
    const IqlsTrace trace =
        fit_dataset(ds, m, opt.iterations, opt.bounds, opt.solver, 0.0, run_notes);
    if (notes.empty()) notes = run_notes;
    for (const auto& rec : trace.records) {
      csv << m << "," << rec.iteration << "," << format_double(rec.mse) << "\n";
    }
  }
  write_text_file(opt.out_path, csv.str());

  auto manifest = base_manifest("sweep-bits", opt.solver.seed);
  manifest["flags"] = solver_flags_json(opt.solver);
  nlohmann::json bits_json = opt.bits_list;
  manifest["flags"].update({{"data", opt.data_path},
                            {"bits", bits_json},
                            {"iterations", opt.iterations},
                            {"bounds", bounds_flag_string(opt.bounds)},
                            {"out", opt.out_path}});
  manifest["notes"] = notes;
  const std::string manifest_path = opt.out_path + ".manifest.json";
  write_manifest(manifest_path, manifest);

  std::cout << "sweep-bits: " << opt.bits_list.size() << " runs x " << opt.iterations
            << " iterations -> " << opt.out_path << "\n";
  return {opt.out_path, manifest_path};
}

// --- export-qubo ------------------------------------------------------

ExportQuboResult run_export_qubo(const ExportQuboOptions& opt) {
  if (opt.out_path.empty()) throw std::invalid_argument("--out is required");
  const Dataset ds = read_dataset_csv(opt.data_path);

  std::vector<std::string> notes;
  if (opt.bounds.is_default) {
    notes.push_back("initial bounds not specified; using [-10,10] per weight");
  }
  const SearchBox box = resolve_bounds(opt.bounds, ds.num_features());
  const BitEncoding enc = make_encoding(box, opt.bits);
  const Qubo q = build_qubo(gram(ds), enc);
  write_text_file(opt.out_path, export_qubo(q));

  auto manifest = base_manifest("export-qubo", 0);
  manifest["flags"] = {{"data", opt.data_path},
                       {"bits", opt.bits},
                       {"bounds", bounds_flag_string(opt.bounds)},
                       {"out", opt.out_path}};
  manifest["notes"] = notes;
  manifest["results"] = {{"num_vars", q.num_vars},
                         {"quadratic_terms", q.quadratic.size()}};
  const std::string manifest_path = opt.out_path + ".manifest.json";
  write_manifest(manifest_path, manifest);

  std::cout << "export-qubo: " << q.num_vars << " variables -> " << opt.out_path << "\n";
  return {opt.out_path, manifest_path};
}

}  // namespace iqls::cli
