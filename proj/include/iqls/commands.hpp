#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iqls/encoding.hpp"
#include "iqls/iqls.hpp"
#include "iqls/solvers.hpp"

namespace iqls::cli {

/// Either uniform `lo:hi` bounds for every weight or a CSV file
/// (header `lower,upper`, one row per weight).
struct BoundsSpec {
  enum class Kind { Uniform, File };
  Kind kind = Kind::Uniform;
  double lo = -10.0;
  double hi = 10.0;
  std::string path;
  bool is_default = true;
};

BoundsSpec parse_bounds(const std::string& text);
SearchBox resolve_bounds(const BoundsSpec& spec, std::size_t dim);

struct SolverFlags {
  SolverBackend backend = SolverBackend::Auto;
  std::uint64_t seed = 0;
  int restarts = 32;
  int sweeps = 200;

  AnnealConfig anneal_config() const;
};

// --- gen-data ---------------------------------------------------------

struct GenDataOptions {
  int features = 2;
  int samples = 100;
  double domain_lo = -5.0;
  double domain_hi = 5.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct GenDataResult {
  std::string data_path;
  std::string manifest_path;
  std::vector<double> true_weights;
};

GenDataResult run_gen_data(const GenDataOptions& opt);

// --- fit-linear -------------------------------------------------------

struct FitLinearOptions {
  std::string data_path;
  int bits = 1;
  int iterations = 10;
  BoundsSpec bounds;
  SolverFlags solver;
  double loss_tolerance = 0.0;
  std::string out_prefix;
};

struct FitLinearResult {
  std::string trace_csv_path;
  std::string trace_json_path;
  std::string manifest_path;
  IqlsTrace trace;
};

FitLinearResult run_fit_linear(const FitLinearOptions& opt);

// --- fit-spline -------------------------------------------------------

struct FitSplineOptions {
  std::string target = "sin";
  int knots = 20;
  int bits = 1;
  int iterations = 10;
  int samples = 200;
  int grid_points = 400;
  BoundsSpec bounds;
  SolverFlags solver;
  double loss_tolerance = 0.0;
  std::string out_prefix;
};

struct FitSplineResult {
  std::string trace_csv_path;
  std::string curves_csv_path;
  std::string manifest_path;
  double final_mse_vs_truth = 0.0;
  double classical_mse = 0.0;
  IqlsTrace trace;
};

FitSplineResult run_fit_spline(const FitSplineOptions& opt);

// --- sweep-bits -------------------------------------------------------

struct SweepBitsOptions {
  std::string data_path;
  std::vector<int> bits_list;
  int iterations = 10;
  BoundsSpec bounds;
  SolverFlags solver;
  std::string out_path;
};

struct SweepBitsResult {
  std::string csv_path;
  std::string manifest_path;
};

SweepBitsResult run_sweep_bits(const SweepBitsOptions& opt);

// --- export-qubo ------------------------------------------------------

struct ExportQuboOptions {
  std::string data_path;
  int bits = 1;
  BoundsSpec bounds;
  std::string out_path;
};

struct ExportQuboResult {
  std::string qubo_path;
  std::string manifest_path;
};

ExportQuboResult run_export_qubo(const ExportQuboOptions& opt);

}  // namespace iqls::cli
