#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "iqls/qubo.hpp"

namespace iqls {

struct SolveResult {
  BitVector bits;
  double energy = 0.0;
  std::string solver_name;
  std::map<std::string, std::string> metadata;
};

/// Geometric inverse-temperature schedule for the Metropolis stand-in.
/// Defaults suit the unit-order coefficient scales the QUBO builder produces
/// on unit-order data; both ends are tunable per run.
struct AnnealConfig {
  std::uint64_t seed = 0;
  int num_restarts = 32;
  int sweeps_per_restart = 200;
  double beta_initial = 0.1;
  double beta_final = 10.0;
};

enum class SolverBackend { Auto, Exhaustive, Anneal };

/// "auto" / "exhaustive" / "anneal"; throws std::invalid_argument otherwise.
SolverBackend parse_backend(const std::string& name);
std::string backend_name(SolverBackend backend);

/// Global minimizer by depth-first enumeration in lexicographic bit order;
/// among energy ties (1e-12 absolute) the lexicographically smallest bit
/// vector wins. Requires num_vars ≤ 24, else throws BudgetExceededError.
SolveResult solve_exhaustive(const Qubo& q);

/// Single-bit-flip Metropolis annealing. Deterministic given (q, cfg.seed):
/// each restart runs on its own RNG stream derived from (seed, restart index),
/// flip deltas are computed incrementally from per-variable fields, and the
/// best assignment seen anywhere is returned with its energy recomputed
/// exactly.
SolveResult solve_anneal(const Qubo& q, const AnnealConfig& cfg);

/// Dispatch: Auto picks exhaustive for num_vars ≤ 20, annealing above.
SolveResult solve(const Qubo& q, SolverBackend backend, const AnnealConfig& cfg);

}  // namespace iqls
