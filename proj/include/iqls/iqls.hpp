#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqls/encoding.hpp"
#include "iqls/linalg.hpp"
#include "iqls/solvers.hpp"

namespace iqls {

struct IqlsConfig {
  int bits_per_weight = 1;
  int max_iterations = 10;
  SearchBox initial_box;
  SolverBackend backend = SolverBackend::Auto;
  AnnealConfig anneal;
  /// Stop once |MSE_k − MSE_{k−1}| falls below this; 0 disables and the run
  /// always executes max_iterations.
  double loss_tolerance = 0.0;
};

struct IterationRecord {
  int iteration = 0;  // 1-based
  SearchBox box_before;
  SearchBox box_after;
  BitVector bits;
  std::vector<double> weights;
  double sse = 0.0;
  double mse = 0.0;
  std::string solver_name;
  double qubo_offset = 0.0;
  /// True when the classical LS solution (if computable) lies outside
  /// box_after. Diagnostic only; the driver never acts on it.
  bool optimum_excluded = false;
};

enum class StopReason { MaxIterations, LossTolerance };

std::string stop_reason_name(StopReason reason);

struct IqlsTrace {
  IqlsConfig config;
  /// Midpoint (ℓ+u)/2 of the initial box; recorded, never used by the loop.
  std::vector<double> initial_midpoint;
  std::vector<IterationRecord> records;
  std::vector<double> final_weights;
  StopReason stop_reason = StopReason::MaxIterations;
};

/// The iterative zoom-in loop: per iteration build the encoding for the
/// current box, reduce the SSE to a QUBO, solve, decode, record, then shrink
/// the box around the decoded weights. MSE values are recorded verbatim
/// (the sequence is not monotone in general). Solver budget errors propagate
/// with the failing iteration prepended to the message.
IqlsTrace run_iqls(const Dataset& ds, const IqlsConfig& cfg);

/// Guaranteed box width after K iterations: initial_width / shrink_factor^K.
double convergence_bound(int bits_per_weight, int iterations, double initial_width);

}  // namespace iqls
