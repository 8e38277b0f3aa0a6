#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iqls/commands.hpp"
#include "iqls/errors.hpp"
#include "iqls/version.hpp"

namespace {

// Exit codes: 0 success, 2 argument errors, 3 I/O or input-format errors,
// 4 solver budget exceeded, 1 anything else.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

void add_solver_flags(CLI::App* cmd, iqls::cli::SolverFlags& flags, std::string& solver_name) {
  cmd->add_option("--solver", solver_name, "Solver backend: auto, exhaustive or anneal")
      ->default_val("auto");
  cmd->add_option("--seed", flags.seed, "RNG seed")
      ->default_val("0")
      ->envname("IQLS_DEFAULT_SEED");
  cmd->add_option("--restarts", flags.restarts, "Annealer restarts")->default_val("32");
  cmd->add_option("--sweeps", flags.sweeps, "Annealer sweeps per restart")->default_val("200");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"i-QLS: iterative quantum-style least squares over binary quadratic solvers"};
  app.set_version_flag("--version", std::string("iqls ") + iqls::kLibraryVersion);
  app.require_subcommand(1);

  // gen-data
  iqls::cli::GenDataOptions gen;
  std::string gen_domain = "-5:5";
  auto* cmd_gen = app.add_subcommand("gen-data", "Write a synthetic linear-regression CSV");
  cmd_gen->add_option("-d,--features", gen.features, "Feature count")->default_val("2");
  cmd_gen->add_option("-n,--samples", gen.samples, "Sample count")->default_val("100");
  cmd_gen->add_option("--domain", gen_domain, "Feature range lo:hi")->default_val("-5:5");
  cmd_gen->add_option("--noise", gen.noise_sigma, "Gaussian noise std dev")->default_val("0");
  cmd_gen->add_option("--seed", gen.seed, "RNG seed")
      ->default_val("0")
      ->envname("IQLS_DEFAULT_SEED");
  cmd_gen->add_option("--out", gen.out_path, "Output CSV path")->required();

  // fit-linear
  iqls::cli::FitLinearOptions fl;
  std::string fl_solver = "auto", fl_bounds;
  auto* cmd_fl = app.add_subcommand("fit-linear", "Iterative fit of a linear model");
  cmd_fl->add_option("--data", fl.data_path, "Dataset CSV (header x1,...,xd,y)")->required();
  cmd_fl->add_option("-m,--bits", fl.bits, "Bits per weight")->default_val("1");
  cmd_fl->add_option("-k,--iterations", fl.iterations, "Max iterations")->default_val("10");
  cmd_fl->add_option("--bounds", fl_bounds, "Uniform lo:hi or per-weight CSV file");
  cmd_fl->add_option("--loss-tol", fl.loss_tolerance,
                     "Stop when |MSE change| falls below this (0 = run all iterations)")
      ->default_val("0");
  add_solver_flags(cmd_fl, fl.solver, fl_solver);
  cmd_fl->add_option("--out", fl.out_prefix, "Output path prefix")->required();

  // fit-spline
  iqls::cli::FitSplineOptions fs;
  std::string fs_solver = "auto", fs_bounds;
  auto* cmd_fs = app.add_subcommand("fit-spline", "Spline fit of a benchmark function");
  cmd_fs->add_option("--target", fs.target, "sin, tanh, logistic, relu or gauss")->required();
  cmd_fs->add_option("--knots", fs.knots, "Interior knot count")->default_val("20");
  cmd_fs->add_option("-m,--bits", fs.bits, "Bits per coefficient")->default_val("1");
  cmd_fs->add_option("-k,--iterations", fs.iterations, "Max iterations")->default_val("10");
  cmd_fs->add_option("-n,--samples", fs.samples, "Training sample count")->default_val("200");
  cmd_fs->add_option("--grid-points", fs.grid_points, "Dense grid size for curve output")
      ->default_val("400");
  cmd_fs->add_option("--bounds", fs_bounds, "Uniform lo:hi or per-coefficient CSV file");
  cmd_fs->add_option("--loss-tol", fs.loss_tolerance,
                     "Stop when |MSE change| falls below this (0 = run all iterations)")
      ->default_val("0");
  add_solver_flags(cmd_fs, fs.solver, fs_solver);
  cmd_fs->add_option("--out", fs.out_prefix, "Output path prefix")->required();

  // sweep-bits
  iqls::cli::SweepBitsOptions sw;
  std::string sw_solver = "auto", sw_bounds;
  auto* cmd_sw = app.add_subcommand("sweep-bits", "One run per bit width, long-format CSV");
  cmd_sw->add_option("--data", sw.data_path, "Dataset CSV")->required();
  cmd_sw->add_option("-m,--bits", sw.bits_list, "Bit widths, e.g. 1,2,3,6")
      ->required()
      ->delimiter(',');
  cmd_sw->add_option("-k,--iterations", sw.iterations, "Iterations per run")->default_val("10");
  cmd_sw->add_option("--bounds", sw_bounds, "Uniform lo:hi or per-weight CSV file");
  add_solver_flags(cmd_sw, sw.solver, sw_solver);
  cmd_sw->add_option("--out", sw.out_path, "Output CSV path")->required();

  // export-qubo
  iqls::cli::ExportQuboOptions eq;
  std::string eq_bounds;
  auto* cmd_eq = app.add_subcommand("export-qubo", "Write the iteration-1 QUBO document");
  cmd_eq->add_option("--data", eq.data_path, "Dataset CSV")->required();
  cmd_eq->add_option("-m,--bits", eq.bits, "Bits per weight")->default_val("1");
  cmd_eq->add_option("--bounds", eq_bounds, "Uniform lo:hi or per-weight CSV file");
  cmd_eq->add_option("--out", eq.out_path, "Output QUBO path")->required();

  try {
    app.parse(argc, argv);

    if (cmd_gen->parsed()) {
      const auto colon = gen_domain.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("--domain expects lo:hi, got " + gen_domain);
      }
      gen.domain_lo = std::stod(gen_domain.substr(0, colon));
      gen.domain_hi = std::stod(gen_domain.substr(colon + 1));
      iqls::cli::run_gen_data(gen);
    } else if (cmd_fl->parsed()) {
      fl.solver.backend = iqls::parse_backend(fl_solver);
      if (!fl_bounds.empty()) fl.bounds = iqls::cli::parse_bounds(fl_bounds);
      iqls::cli::run_fit_linear(fl);
    } else if (cmd_fs->parsed()) {
      fs.solver.backend = iqls::parse_backend(fs_solver);
      if (!fs_bounds.empty()) fs.bounds = iqls::cli::parse_bounds(fs_bounds);
      iqls::cli::run_fit_spline(fs);
    } else if (cmd_sw->parsed()) {
      sw.solver.backend = iqls::parse_backend(sw_solver);
      if (!sw_bounds.empty()) sw.bounds = iqls::cli::parse_bounds(sw_bounds);
      iqls::cli::run_sweep_bits(sw);
    } else if (cmd_eq->parsed()) {
      if (!eq_bounds.empty()) eq.bounds = iqls::cli::parse_bounds(eq_bounds);
      iqls::cli::run_export_qubo(eq);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const iqls::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const iqls::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const iqls::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
