#pragma once

#include <string>
#include <vector>

#include "iqls/linalg.hpp"

namespace iqls {

/// Degree-1 truncated-power basis: [1, x, (x−t_1)₊, …, (x−t_T)₊].
/// Knots are strictly increasing and strictly inside the domain; basis
/// dimension is T + 2.
class SplineBasis {
 public:
  SplineBasis(std::vector<double> knots, double x_min, double x_max);

  const std::vector<double>& knots() const { return knots_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t dim() const { return knots_.size() + 2; }

 private:
  std::vector<double> knots_;
  double x_min_;
  double x_max_;
};

/// T knots at x_min + j·(x_max−x_min)/(T+1), j = 1..T.
SplineBasis uniform_knots(double x_min, double x_max, int num_knots);

/// Row n is [1, x_n, (x_n−t_1)₊, …, (x_n−t_T)₊].
Matrix design_matrix(const SplineBasis& basis, const std::vector<double>& x);

/// The fitted piecewise-linear function at x for a coefficient vector.
double evaluate(const SplineBasis& basis, const std::vector<double>& coeffs, double x);

struct BenchmarkFunction {
  std::string name;
  double x_min;
  double x_max;
  double (*fn)(double);
};

/// The five non-linear regression targets: sin, tanh, logistic, relu, gauss.
const std::vector<BenchmarkFunction>& benchmark_functions();

/// nullptr when the name is unknown.
const BenchmarkFunction* find_benchmark(const std::string& name);

/// n uniformly spaced samples over [fn.x_min, fn.x_max], endpoints included.
std::pair<std::vector<double>, std::vector<double>> sample_uniform(
    const BenchmarkFunction& fn, int n);

}  // namespace iqls
