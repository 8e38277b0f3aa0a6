#include "iqls/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "iqls/errors.hpp"

namespace iqls {

namespace {

void check_weights(const Dataset& ds, const std::vector<double>& w) {
  if (w.size() != ds.num_features()) {
    throw std::invalid_argument("weight vector length " + std::to_string(w.size()) +
                                " does not match feature count " +
                                std::to_string(ds.num_features()));
  }
  for (double v : w) {
    if (!std::isfinite(v)) throw std::invalid_argument("weight vector has non-finite entry");
  }
}

}  // namespace

Dataset::Dataset(Matrix features, std::vector<double> targets)
    : X(std::move(features)), y(std::move(targets)) {
  if (X.rows == 0 || X.cols == 0) {
    throw std::invalid_argument("dataset needs at least one sample and one feature");
  }
  if (y.size() != X.rows) {
    throw std::invalid_argument("target length " + std::to_string(y.size()) +
                                " does not match sample count " + std::to_string(X.rows));
  }
  for (double v : X.data) {
    if (!std::isfinite(v)) throw std::invalid_argument("feature matrix has non-finite entry");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("target vector has non-finite entry");
  }
}

double sse(const Dataset& ds, const std::vector<double>& w) {
  check_weights(ds, w);
  const std::size_t n = ds.num_samples();
  const std::size_t d = ds.num_features();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < d; ++j) pred += w[j] * ds.X(i, j);
    const double r = ds.y[i] - pred;
    acc += r * r;
  }
  return acc;
}

double mse(const Dataset& ds, const std::vector<double>& w) {
  return sse(ds, w) / static_cast<double>(ds.num_samples());
}

GramCache gram(const Dataset& ds) {
  const std::size_t n = ds.num_samples();
  const std::size_t d = ds.num_features();
  GramCache gc;
  gc.G = Matrix(d, d);
  gc.h.assign(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < n; ++t) s += ds.X(t, i) * ds.X(t, j);
      gc.G(i, j) = s;
      gc.G(j, i) = s;  // exact symmetry by construction
    }
    double s = 0.0;
    for (std::size_t t = 0; t < n; ++t) s += ds.X(t, i) * ds.y[t];
    gc.h[i] = s;
  }
  gc.yy = 0.0;
  for (double v : ds.y) gc.yy += v * v;
  return gc;
}

std::vector<double> classical_ls(const GramCache& gc) {
  const std::size_t d = gc.dim();
  // Cholesky G = LLᵀ with the spec's relative pivot floor.
  Matrix L(d, d);
  double max_pivot = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    double pivot = gc.G(k, k);
    for (std::size_t j = 0; j < k; ++j) pivot -= L(k, j) * L(k, j);
    max_pivot = std::max(max_pivot, pivot);
    if (!(pivot > 1e-10 * max_pivot)) {
      throw RankDeficientError(
          k, "rank-deficient normal equations: pivot " + std::to_string(k) + " is " +
                 std::to_string(pivot) + " (floor 1e-10 x largest pivot " +
                 std::to_string(max_pivot) + ")");
    }
    L(k, k) = std::sqrt(pivot);
    for (std::size_t i = k + 1; i < d; ++i) {
      double s = gc.G(i, k);
      for (std::size_t j = 0; j < k; ++j) s -= L(i, j) * L(k, j);
      L(i, k) = s / L(k, k);
    }
  }
  // Solve L z = h, then Lᵀ w = z.
  std::vector<double> w(gc.h);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) w[i] -= L(i, j) * w[j];
    w[i] /= L(i, i);
  }
  for (std::size_t ii = d; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < d; ++j) w[ii] -= L(j, ii) * w[j];
    w[ii] /= L(ii, ii);
  }
  return w;
}

std::vector<double> classical_ls(const Dataset& ds) { return classical_ls(gram(ds)); }

}  // namespace iqls
