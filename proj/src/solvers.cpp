#include "iqls/solvers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "iqls/errors.hpp"
#include "iqls/format.hpp"
#include "iqls/rng.hpp"

namespace iqls {

namespace {

constexpr std::size_t kExhaustiveBudgetBits = 24;
constexpr std::size_t kAutoExhaustiveLimit = 20;
constexpr double kTieTolerance = 1e-12;

void check_anneal_config(const AnnealConfig& cfg) {
  if (cfg.num_restarts < 1) throw std::invalid_argument("annealer needs at least one restart");
  if (cfg.sweeps_per_restart < 1) throw std::invalid_argument("annealer needs at least one sweep");
  if (!(cfg.beta_initial > 0.0) || !(cfg.beta_final > cfg.beta_initial)) {
    throw std::invalid_argument("annealer schedule requires beta_final > beta_initial > 0");
  }
}

// Adjacency view of the quadratic terms for O(degree) flip deltas.
std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency(const Qubo& q) {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(q.num_vars);
  for (const auto& [key, v] : q.quadratic) {
    adj[key.first].emplace_back(key.second, v);
    adj[key.second].emplace_back(key.first, v);
  }
  return adj;
}

struct ExhaustiveSearch {
  const Qubo& q;
  // couplers keyed by their larger index, so setting bit s only scans r < s
  std::vector<std::vector<std::pair<std::uint32_t, double>>> incoming;
  BitVector bits;
  BitVector best_bits;
  double best = std::numeric_limits<double>::infinity();

  explicit ExhaustiveSearch(const Qubo& qubo) : q(qubo), incoming(qubo.num_vars) {
    for (const auto& [key, v] : q.quadratic) incoming[key.second].emplace_back(key.first, v);
    bits.assign(q.num_vars, 0);
  }

  // Zero branch first, so assignments arrive in lexicographic order and the
  // first of any exact energy tie is the lexicographically smallest.
  void visit(std::size_t depth, double acc) {
    if (depth == q.num_vars) {
      if (acc < best - kTieTolerance) {
        best = acc;
        best_bits = bits;
      }
      return;
    }
    bits[depth] = 0;
    visit(depth + 1, acc);
    double add = q.linear[depth];
    for (const auto& [r, v] : incoming[depth]) {
      if (bits[r]) add += v;
    }
    bits[depth] = 1;
    visit(depth + 1, acc + add);
    bits[depth] = 0;
  }
};

}  // namespace

SolverBackend parse_backend(const std::string& name) {
  if (name == "auto") return SolverBackend::Auto;
  if (name == "exhaustive") return SolverBackend::Exhaustive;
  if (name == "anneal") return SolverBackend::Anneal;
  throw std::invalid_argument("unknown solver backend '" + name +
                              "' (expected auto, exhaustive or anneal)");
}

std::string backend_name(SolverBackend backend) {
  switch (backend) {
    case SolverBackend::Auto: return "auto";
    case SolverBackend::Exhaustive: return "exhaustive";
    case SolverBackend::Anneal: return "anneal";
  }
  return "?";
}

SolveResult solve_exhaustive(const Qubo& q) {
  if (q.num_vars > kExhaustiveBudgetBits) {
    throw BudgetExceededError("exhaustive solver limited to " +
                              std::to_string(kExhaustiveBudgetBits) + " variables, got " +
                              std::to_string(q.num_vars) + "; use the anneal solver instead");
  }
  ExhaustiveSearch search(q);
  search.visit(0, q.offset);
  SolveResult res;
  res.bits = std::move(search.best_bits);
  res.energy = energy(q, res.bits);
  res.solver_name = "exhaustive";
  res.metadata["assignments"] = std::to_string(std::size_t{1} << q.num_vars);
  return res;
}

SolveResult solve_anneal(const Qubo& q, const AnnealConfig& cfg) {
  check_anneal_config(cfg);
  const std::size_t n = q.num_vars;
  const auto adj = adjacency(q);

  BitVector best_bits;
  double best_energy = std::numeric_limits<double>::infinity();

  const int sweeps = cfg.sweeps_per_restart;
  const double ratio =
      sweeps > 1 ? std::pow(cfg.beta_final / cfg.beta_initial, 1.0 / (sweeps - 1)) : 1.0;

  for (int restart = 0; restart < cfg.num_restarts; ++restart) {
    auto rng = seeded_engine(cfg.seed, static_cast<std::uint64_t>(restart));

    BitVector bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);

    // field_r = linear_r + Σ_{s: b_s=1} Γ_{rs}; flipping r changes the
    // energy by (1 − 2 b_r) · field_r.
    std::vector<double> field(q.linear);
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& [s, v] : adj[r]) {
        if (bits[s]) field[r] += v;
      }
    }
    double e = energy(q, bits);
    BitVector restart_best_bits = bits;
    double restart_best = e;

    double beta = sweeps > 1 ? cfg.beta_initial : cfg.beta_final;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      for (std::size_t v = 0; v < n; ++v) {
        const double delta_e = (1.0 - 2.0 * bits[v]) * field[v];
        if (delta_e <= 0.0 || uniform01(rng) < std::exp(-beta * delta_e)) {
          const double sign = bits[v] ? -1.0 : 1.0;
          bits[v] ^= 1u;
          e += delta_e;
          for (const auto& [s, c] : adj[v]) field[s] += sign * c;
          if (e < restart_best) {
            restart_best = e;
            restart_best_bits = bits;
          }
        }
      }
      beta *= ratio;
    }

    // Re-evaluate exactly so the reported energy carries no incremental drift;
    // ties across restarts keep the earliest restart.
    const double exact = energy(q, restart_best_bits);
    if (exact < best_energy) {
      best_energy = exact;
      best_bits = std::move(restart_best_bits);
    }
  }

  SolveResult res;
  res.bits = std::move(best_bits);
  res.energy = best_energy;
  res.solver_name = "anneal";
  res.metadata["seed"] = std::to_string(cfg.seed);
  res.metadata["restarts"] = std::to_string(cfg.num_restarts);
  res.metadata["sweeps"] = std::to_string(cfg.sweeps_per_restart);
  res.metadata["beta_initial"] = format_double(cfg.beta_initial);
  res.metadata["beta_final"] = format_double(cfg.beta_final);
  res.metadata["schedule_note"] = "schedule and restart counts are library defaults";
  return res;
}

SolveResult solve(const Qubo& q, SolverBackend backend, const AnnealConfig& cfg) {
  switch (backend) {
    case SolverBackend::Exhaustive:
      return solve_exhaustive(q);
    case SolverBackend::Anneal:
      return solve_anneal(q, cfg);
    case SolverBackend::Auto:
      return q.num_vars <= kAutoExhaustiveLimit ? solve_exhaustive(q) : solve_anneal(q, cfg);
  }
  throw std::invalid_argument("invalid solver backend");
}

}  // namespace iqls
