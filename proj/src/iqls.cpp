#include "iqls/iqls.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "iqls/errors.hpp"
#include "iqls/qubo.hpp"

namespace iqls {

std::string stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::LossTolerance: return "loss_tolerance";
  }
  return "?";
}

IqlsTrace run_iqls(const Dataset& ds, const IqlsConfig& cfg) {
  if (cfg.bits_per_weight < 1) throw std::invalid_argument("bits per weight must be >= 1");
  if (cfg.max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
  if (cfg.loss_tolerance < 0.0) throw std::invalid_argument("loss tolerance must be >= 0");
  if (cfg.initial_box.dim() != ds.num_features()) {
    throw std::invalid_argument("initial box dimension " + std::to_string(cfg.initial_box.dim()) +
                                " does not match " + std::to_string(ds.num_features()) +
                                " features");
  }

  const GramCache gc = gram(ds);
  const double n_samples = static_cast<double>(ds.num_samples());

  // Classical solution, when the normal equations admit one; used only for
  // the optimum_excluded diagnostic.
  std::optional<std::vector<double>> w_classical;
  try {
    w_classical = classical_ls(gc);
  } catch (const RankDeficientError&) {
  }

  IqlsTrace trace;
  trace.config = cfg;
  trace.initial_midpoint.resize(cfg.initial_box.dim());
  for (std::size_t i = 0; i < cfg.initial_box.dim(); ++i) {
    trace.initial_midpoint[i] = (cfg.initial_box.lower()[i] + cfg.initial_box.upper()[i]) / 2.0;
  }

  SearchBox box = cfg.initial_box;
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    const BitEncoding enc = make_encoding(box, cfg.bits_per_weight);
    const Qubo q = build_qubo(gc, enc);

    SolveResult solved;
    try {
      solved = solve(q, cfg.backend, cfg.anneal);
    } catch (const BudgetExceededError& e) {
      throw BudgetExceededError("iteration " + std::to_string(k) + ": " + e.what());
    }

    std::vector<double> weights = decode(enc, solved.bits);
    IterationRecord rec{
        .iteration = k,
        .box_before = box,
        .box_after = shrink(enc, weights),
        .bits = solved.bits,
        .weights = std::move(weights),
        .sse = 0.0,
        .mse = 0.0,
        .solver_name = solved.solver_name,
        .qubo_offset = q.offset,
        .optimum_excluded = false,
    };
    rec.sse = sse(ds, rec.weights);
    rec.mse = rec.sse / n_samples;
    if (w_classical) rec.optimum_excluded = !rec.box_after.contains(*w_classical);
    trace.records.push_back(std::move(rec));

    box = trace.records.back().box_after;

    if (cfg.loss_tolerance > 0.0 && trace.records.size() >= 2) {
      const auto& r = trace.records;
      const double change = std::abs(r[r.size() - 1].mse - r[r.size() - 2].mse);
      if (change < cfg.loss_tolerance) {
        trace.stop_reason = StopReason::LossTolerance;
        break;
      }
    }
  }

  trace.final_weights = trace.records.back().weights;
  return trace;
}

double convergence_bound(int bits_per_weight, int iterations, double initial_width) {
  if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
  return initial_width / std::pow(shrink_factor(bits_per_weight), iterations);
}

}  // namespace iqls
