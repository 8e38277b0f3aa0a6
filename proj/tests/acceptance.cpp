// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, next to the check it gates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "iqls/commands.hpp"
#include "iqls/encoding.hpp"
#include "iqls/format.hpp"
#include "iqls/io.hpp"
#include "iqls/iqls.hpp"
#include "iqls/qubo.hpp"
#include "iqls/rng.hpp"
#include "iqls/solvers.hpp"
#include "iqls/splines.hpp"

namespace fs = std::filesystem;
using namespace iqls;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass;
  double seconds;
  std::string detail;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * (1.0 + std::max(std::abs(a), std::abs(b)));
}

BitVector assignment(std::uint64_t mask, std::size_t n) {
  BitVector bits(n);
  for (std::size_t r = 0; r < n; ++r) bits[r] = static_cast<std::uint8_t>((mask >> r) & 1u);
  return bits;
}

Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t d, double noise) {
  Matrix x(n, d);
  std::vector<double> w(d);
  for (auto& v : w) v = uniform_in(rng, -3.0, 3.0);
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      x(i, j) = uniform_in(rng, -2.0, 2.0);
      y[i] += w[j] * x(i, j);
    }
    if (noise > 0.0) y[i] += noise * (uniform01(rng) - 0.5);
  }
  return Dataset(std::move(x), std::move(y));
}

SearchBox random_box(std::mt19937_64& rng, std::size_t d) {
  std::vector<double> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = uniform_in(rng, -6.0, -0.5);
    hi[i] = uniform_in(rng, 0.5, 6.0);
  }
  return SearchBox(std::move(lo), std::move(hi));
}

// --- criterion 1: QUBO energy == SSE over every assignment --------------

Criterion criterion_qubo_sse_identity() {
  Timer timer;
  std::mt19937_64 rng(7001);
  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const std::size_t n_samples = 1 + rng() % 10;
    const std::size_t d = 1 + rng() % 3;
    const int m = 1 + static_cast<int>(rng() % 3);

    Matrix x(n_samples, d);
    std::vector<double> y(n_samples);
    for (auto& v : x.data) v = uniform_in(rng, -3.0, 3.0);
    for (auto& v : y) v = uniform_in(rng, -5.0, 5.0);
    const Dataset ds(std::move(x), std::move(y));

    const auto enc = make_encoding(random_box(rng, d), m);
    const auto q = build_qubo(gram(ds), enc);
    const std::uint64_t total = std::uint64_t{1} << enc.num_vars();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto bits = assignment(mask, enc.num_vars());
      const double e = energy(q, bits);
      const double s = sse(ds, decode(enc, bits));
      worst = std::max(worst, std::abs(e - s) / (1.0 + s));
      if (std::abs(e - s) > 1e-9 * (1.0 + s)) {
        pass = false;
        detail = "instance " + std::to_string(trial) + " mask " + std::to_string(mask) +
                 ": |energy-sse| = " + format_double(std::abs(e - s));
        break;
      }
    }
  }
  const double t = timer.seconds();
  if (pass && t >= 10.0) {
    pass = false;
    detail = "runtime budget 10 s exceeded";
  }
  if (pass) detail = "200 instances, worst rel dev " + format_double(worst);
  return {1, "QUBO==SSE identity over all assignments", pass, t, detail};
}

// --- criterion 2: shrinkage width law ------------------------------------

Criterion criterion_shrinkage_law() {
  Timer timer;
  std::mt19937_64 rng(7002);
  const auto ds = random_dataset(rng, 40, 2, 0.0);
  bool pass = true;
  std::string detail;
  for (int m : {1, 2, 3, 6}) {
    IqlsConfig cfg{.bits_per_weight = m,
                   .max_iterations = 10,
                   .initial_box = uniform_box(2, -10.0, 10.0),
                   .backend = SolverBackend::Auto};
    const auto trace = run_iqls(ds, cfg);
    const double factor = shrink_factor(m);
    for (const auto& rec : trace.records) {
      for (std::size_t i = 0; i < 2 && pass; ++i) {
        const double before = 20.0 / std::pow(factor, rec.iteration - 1);
        const double after = 20.0 / std::pow(factor, rec.iteration);
        if (!close_rel(rec.box_before.width()[i], before, 1e-12) ||
            !close_rel(rec.box_after.width()[i], after, 1e-12)) {
          pass = false;
          detail = "m=" + std::to_string(m) + " k=" + std::to_string(rec.iteration) +
                   " width " + format_double(rec.box_after.width()[i]) + " expected " +
                   format_double(after);
        }
      }
    }
  }
  const double t = timer.seconds();
  if (pass && t >= 5.0) {
    pass = false;
    detail = "runtime budget 5 s exceeded";
  }
  if (pass) detail = "m in {1,2,3,6}, K=10, rel tol 1e-12";
  return {2, "shrinkage width law on recorded traces", pass, t, detail};
}

// --- criterion 3: convergence thresholds on the two-feature setting -----

Criterion criterion_convergence(const fs::path& dir, std::string* data_csv,
                                std::string* trace_csv) {
  Timer timer;
  cli::GenDataOptions gen;
  gen.features = 2;
  gen.samples = 100;
  gen.domain_lo = -5.0;
  gen.domain_hi = 5.0;
  gen.noise_sigma = 0.0;
  gen.seed = 1;
  gen.out_path = (dir / "two_feature.csv").string();
  cli::run_gen_data(gen);
  *data_csv = read_text_file(gen.out_path);

  cli::FitLinearOptions m6;
  m6.data_path = gen.out_path;
  m6.bits = 6;
  m6.iterations = 9;
  m6.solver.backend = SolverBackend::Exhaustive;
  m6.out_prefix = (dir / "fit_m6").string();
  const auto r6 = cli::run_fit_linear(m6);
  *trace_csv = read_text_file(r6.trace_csv_path);
  const double mse6 = r6.trace.records.back().mse;

  cli::FitLinearOptions m2 = m6;
  m2.bits = 2;
  m2.iterations = 12;
  m2.out_prefix = (dir / "fit_m2").string();
  const auto r2 = cli::run_fit_linear(m2);
  const double mse2 = r2.trace.records.back().mse;

  bool pass = mse6 <= 1e-10 && mse2 <= 1e-6;
  std::string detail = "m=6 k=9 mse " + format_double(mse6) + " (<= 1e-10), m=2 k=12 mse " +
                       format_double(mse2) + " (<= 1e-6)";
  const double t = timer.seconds();
  if (pass && t >= 30.0) {
    pass = false;
    detail = "runtime budget 30 s exceeded";
  }
  return {3, "two-feature convergence thresholds", pass, t, detail};
}

// --- criterion 4: annealer matches the exhaustive oracle -----------------

struct AnnealRun {
  std::vector<double> energies;
  std::vector<BitVector> bits;
};

AnnealRun anneal_over_instances(const std::vector<Qubo>& instances) {
  AnnealRun out;
  for (const auto& q : instances) {
    const auto res = solve_anneal(q, AnnealConfig{});
    out.energies.push_back(res.energy);
    out.bits.push_back(res.bits);
  }
  return out;
}

std::vector<Qubo> regression_instances() {
  std::mt19937_64 rng(7004);
  std::vector<Qubo> instances;
  while (instances.size() < 100) {
    const std::size_t d = 2 + rng() % 7;
    const int m = 1 + static_cast<int>(rng() % 2);
    if (d * static_cast<std::size_t>(m) > 16) continue;
    const auto ds = random_dataset(rng, 5 + rng() % 26, d, 0.2);
    instances.push_back(build_qubo(gram(ds), make_encoding(random_box(rng, d), m)));
  }
  return instances;
}

Criterion criterion_anneal_oracle(AnnealRun* first_run) {
  Timer timer;
  const auto instances = regression_instances();
  int matches = 0;
  bool sound = true;
  *first_run = anneal_over_instances(instances);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const double exact = solve_exhaustive(instances[i]).energy;
    const double sa = first_run->energies[i];
    const double tol = 1e-9 * (1.0 + std::abs(exact));
    if (sa <= exact + tol) ++matches;
    if (sa < exact - tol) sound = false;
  }
  bool pass = matches >= 95 && sound;
  std::string detail = std::to_string(matches) + "/100 ground states matched (need >= 95), " +
                       (sound ? "never below the oracle" : "REPORTED BELOW ORACLE");
  const double t = timer.seconds();
  if (pass && t >= 60.0) {
    pass = false;
    detail = "runtime budget 60 s exceeded";
  }
  return {4, "annealer vs exhaustive oracle on n<=16 instances", pass, t, detail};
}

// --- criterion 5: spline fits against the classical baseline -------------

Criterion criterion_spline_fits(const fs::path& dir, std::string* sin_trace_csv,
                                std::string* sin_curves_csv) {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& fn : benchmark_functions()) {
    cli::FitSplineOptions opt;
    opt.target = fn.name;
    opt.knots = 20;
    opt.bits = 1;
    opt.iterations = 10;
    opt.samples = 200;
    opt.solver.backend = SolverBackend::Anneal;
    opt.solver.seed = 0;
    opt.out_prefix = (dir / ("spline_" + fn.name)).string();
    const auto res = cli::run_fit_spline(opt);
    if (fn.name == "sin") {
      *sin_trace_csv = read_text_file(res.trace_csv_path);
      *sin_curves_csv = read_text_file(res.curves_csv_path);
    }
    const double bound = 1.5 * res.classical_mse + 1e-4;
    const bool ok = res.final_mse_vs_truth <= bound;
    pass = pass && ok;
    detail += (detail.empty() ? "" : "; ") + fn.name + " mse " +
              format_double(res.final_mse_vs_truth) + (ok ? " <= " : " > ") +
              format_double(bound);
  }
  const double t = timer.seconds();
  if (pass && t >= 120.0) {
    pass = false;
    detail = "runtime budget 120 s exceeded";
  }
  return {5, "spline fits within 1.5x classical LS + 1e-4", pass, t, detail};
}

// --- criterion 6: 175-feature scalability smoke test ---------------------

Criterion criterion_scalability(const fs::path& dir, std::string* trace_csv) {
  Timer timer;
  cli::GenDataOptions gen;
  gen.features = 175;
  gen.samples = 500;
  gen.domain_lo = -5.0;
  gen.domain_hi = 5.0;
  gen.seed = 3;
  gen.out_path = (dir / "d175.csv").string();
  cli::run_gen_data(gen);

  const auto ds = read_dataset_csv(gen.out_path);
  const auto gc = gram(ds);
  const auto enc = make_encoding(uniform_box(175, -10.0, 10.0), 1);

  Timer build_timer;
  const auto q = build_qubo(gc, enc);
  const double build_seconds = build_timer.seconds();

  cli::FitLinearOptions fit;
  fit.data_path = gen.out_path;
  fit.bits = 1;
  fit.iterations = 3;
  fit.solver.backend = SolverBackend::Anneal;
  fit.out_prefix = (dir / "fit_d175").string();
  Timer fit_timer;
  const auto res = cli::run_fit_linear(fit);
  const double fit_seconds = fit_timer.seconds();
  *trace_csv = read_text_file(res.trace_csv_path);

  bool width_ok = true;
  for (const auto& rec : res.trace.records) {
    for (std::size_t i = 0; i < 175; ++i) {
      const double expected = 20.0 / std::pow(2.0, rec.iteration);
      if (!close_rel(rec.box_after.width()[i], expected, 1e-12)) width_ok = false;
    }
  }

  const bool export_ok = export_qubo(q).find("num_vars 175\n") != std::string::npos;

  const bool pass =
      q.num_vars == 175 && export_ok && build_seconds < 1.0 && fit_seconds < 120.0 && width_ok;
  const std::string detail = "175 vars, build " + format_double(build_seconds) +
                             " s (< 1), 3 anneal iterations " + format_double(fit_seconds) +
                             " s (< 120), width law " + (width_ok ? "holds" : "VIOLATED");
  return {6, "175-feature scalability smoke test", pass, timer.seconds(), detail};
}

// --- criterion 7: non-monotone MSE is tolerated and recorded -------------

Criterion criterion_non_monotone() {
  Timer timer;
  Matrix x(1, 1);
  x(0, 0) = 1.0;
  const Dataset ds(std::move(x), {3.0});
  IqlsConfig cfg{.bits_per_weight = 1,
                 .max_iterations = 6,
                 .initial_box = SearchBox({0.0}, {4.0}),
                 .backend = SolverBackend::Exhaustive,
                 .loss_tolerance = 0.0};
  bool pass = true;
  std::string detail;
  try {
    const auto trace = run_iqls(ds, cfg);
    bool increased = false;
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
      if (trace.records[k].mse > trace.records[k - 1].mse) increased = true;
    }
    pass = trace.records.size() == 6 && increased &&
           trace.stop_reason == StopReason::MaxIterations;
    detail = "6/6 iterations, mse sequence";
    for (const auto& rec : trace.records) detail += " " + format_double(rec.mse);
    if (!increased) detail += " (NO INCREASE OBSERVED)";
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("driver raised: ") + e.what();
  }
  return {7, "MSE increase completes without error and is recorded", pass, timer.seconds(),
          detail};
}

// --- criterion 8: byte-identical reruns -----------------------------------

Criterion criterion_determinism(const fs::path& dir, const std::string& data_csv,
                                const std::string& fit_trace_csv, const std::string& sin_trace,
                                const std::string& sin_curves, const std::string& d175_trace,
                                const AnnealRun& anneal_first) {
  Timer timer;
  std::vector<std::string> mismatches;

  {
    cli::GenDataOptions gen;
    gen.features = 2;
    gen.samples = 100;
    gen.domain_lo = -5.0;
    gen.domain_hi = 5.0;
    gen.seed = 1;
    gen.out_path = (dir / "rerun_two_feature.csv").string();
    cli::run_gen_data(gen);
    if (read_text_file(gen.out_path) != data_csv) mismatches.push_back("gen-data csv");

    cli::FitLinearOptions m6;
    m6.data_path = gen.out_path;
    m6.bits = 6;
    m6.iterations = 9;
    m6.solver.backend = SolverBackend::Exhaustive;
    m6.out_prefix = (dir / "rerun_fit_m6").string();
    const auto r6 = cli::run_fit_linear(m6);
    if (read_text_file(r6.trace_csv_path) != fit_trace_csv) {
      mismatches.push_back("fit-linear trace csv");
    }
  }
  {
    cli::FitSplineOptions opt;
    opt.target = "sin";
    opt.knots = 20;
    opt.bits = 1;
    opt.iterations = 10;
    opt.samples = 200;
    opt.solver.backend = SolverBackend::Anneal;
    opt.solver.seed = 0;
    opt.out_prefix = (dir / "rerun_spline_sin").string();
    const auto res = cli::run_fit_spline(opt);
    if (read_text_file(res.trace_csv_path) != sin_trace) mismatches.push_back("spline trace csv");
    if (read_text_file(res.curves_csv_path) != sin_curves) {
      mismatches.push_back("spline curves csv");
    }
  }
  {
    cli::FitLinearOptions fit;
    fit.data_path = (dir / "d175.csv").string();
    fit.bits = 1;
    fit.iterations = 3;
    fit.solver.backend = SolverBackend::Anneal;
    fit.out_prefix = (dir / "rerun_fit_d175").string();
    const auto res = cli::run_fit_linear(fit);
    if (read_text_file(res.trace_csv_path) != d175_trace) {
      mismatches.push_back("175-feature trace csv");
    }
  }
  {
    const auto rerun = anneal_over_instances(regression_instances());
    if (rerun.energies != anneal_first.energies || rerun.bits != anneal_first.bits) {
      mismatches.push_back("anneal solve results");
    }
  }

  bool pass = mismatches.empty();
  std::string detail =
      pass ? "all rerun CSV bodies and solver outputs byte-identical" : "mismatched: ";
  for (const auto& m : mismatches) detail += m + " ";
  return {8, "determinism of reruns with identical seeds", pass, timer.seconds(), detail};
}

}  // namespace

int main() {
  const fs::path dir =
      fs::temp_directory_path() / ("iqls_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  std::string data_csv, fit_trace_csv, sin_trace, sin_curves, d175_trace;
  AnnealRun anneal_first;

  std::vector<Criterion> results;
  results.push_back(criterion_qubo_sse_identity());
  results.push_back(criterion_shrinkage_law());
  results.push_back(criterion_convergence(dir, &data_csv, &fit_trace_csv));
  results.push_back(criterion_anneal_oracle(&anneal_first));
  results.push_back(criterion_spline_fits(dir, &sin_trace, &sin_curves));
  results.push_back(criterion_scalability(dir, &d175_trace));
  results.push_back(criterion_non_monotone());
  results.push_back(criterion_determinism(dir, data_csv, fit_trace_csv, sin_trace, sin_curves,
                                          d175_trace, anneal_first));

  int failures = 0;
  std::cout << "\n";
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << " [" << format_double(std::round(r.seconds * 100.0) / 100.0) << " s]\n"
              << "       " << r.detail << "\n";
  }
  std::cout << "\n"
            << (results.size() - static_cast<std::size_t>(failures)) << "/" << results.size()
            << " acceptance criteria passed\n";

  fs::remove_all(dir);
  return failures;
}
