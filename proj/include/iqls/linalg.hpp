#pragma once

#include <cstddef>
#include <vector>

namespace iqls {

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const Matrix&) const = default;
};

/// Regression problem data: N samples, d features, length-N targets.
/// Construction validates shape and finiteness; an intercept is *not* added
/// implicitly (append a constant-1 column if the model needs one).
struct Dataset {
  Matrix X;
  std::vector<double> y;

  Dataset(Matrix features, std::vector<double> targets);

  std::size_t num_samples() const { return X.rows; }
  std::size_t num_features() const { return X.cols; }
};

/// Precomputed Gram factors: G = XᵀX, h = Xᵀy, yy = yᵀy.
/// Together these determine the SSE of any weight vector without touching
/// the sample rows again, so downstream costs are independent of N.
struct GramCache {
  Matrix G;
  std::vector<double> h;
  double yy = 0.0;

  std::size_t dim() const { return h.size(); }
};

/// Sum of squared residuals Σ_n (y_n − wᵀx_n)², evaluated row by row.
double sse(const Dataset& ds, const std::vector<double>& w);

/// sse / N.
double mse(const Dataset& ds, const std::vector<double>& w);

GramCache gram(const Dataset& ds);

/// Least-squares minimizer via Cholesky on the normal equations.
/// Throws RankDeficientError (naming the pivot) when a pivot falls below
/// 1e-10 times the largest pivot seen.
std::vector<double> classical_ls(const Dataset& ds);

/// Same solve starting from precomputed Gram factors.
std::vector<double> classical_ls(const GramCache& gc);

}  // namespace iqls
