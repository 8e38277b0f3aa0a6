#include "iqls/splines.hpp"

#include <cmath>
#include <stdexcept>

namespace iqls {

namespace {

double logistic_fn(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double relu_fn(double x) { return x > 0.0 ? x : 0.0; }
double gauss_fn(double x) { return std::exp(-x * x); }
double sin_fn(double x) { return std::sin(x); }
double tanh_fn(double x) { return std::tanh(x); }

}  // namespace

SplineBasis::SplineBasis(std::vector<double> knots, double x_min, double x_max)
    : knots_(std::move(knots)), x_min_(x_min), x_max_(x_max) {
  if (!(x_min_ < x_max_)) throw std::invalid_argument("spline domain must have x_min < x_max");
  if (knots_.empty()) throw std::invalid_argument("spline basis needs at least one knot");
  for (std::size_t j = 0; j < knots_.size(); ++j) {
    if (!(knots_[j] > x_min_ && knots_[j] < x_max_)) {
      throw std::invalid_argument("knot " + std::to_string(j) + " lies outside the open domain");
    }
    if (j > 0 && !(knots_[j] > knots_[j - 1])) {
      throw std::invalid_argument("knots must be strictly increasing");
    }
  }
}

SplineBasis uniform_knots(double x_min, double x_max, int num_knots) {
  if (num_knots < 1) throw std::invalid_argument("need at least one knot");
  if (!(x_min < x_max)) throw std::invalid_argument("spline domain must have x_min < x_max");
  std::vector<double> knots(static_cast<std::size_t>(num_knots));
  for (int j = 1; j <= num_knots; ++j) {
    knots[static_cast<std::size_t>(j - 1)] = x_min + j * (x_max - x_min) / (num_knots + 1);
  }
  return SplineBasis(std::move(knots), x_min, x_max);
}

Matrix design_matrix(const SplineBasis& basis, const std::vector<double>& x) {
  const std::size_t n = x.size();
  const std::size_t t = basis.knots().size();
  Matrix m(n, t + 2);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = 1.0;
    m(i, 1) = x[i];
    for (std::size_t j = 0; j < t; ++j) {
      const double z = x[i] - basis.knots()[j];
      m(i, j + 2) = z > 0.0 ? z : 0.0;
    }
  }
  return m;
}

double evaluate(const SplineBasis& basis, const std::vector<double>& coeffs, double x) {
  if (coeffs.size() != basis.dim()) {
    throw std::invalid_argument("coefficient vector length does not match basis dimension");
  }
  double v = coeffs[0] + coeffs[1] * x;
  for (std::size_t j = 0; j < basis.knots().size(); ++j) {
    const double z = x - basis.knots()[j];
    if (z > 0.0) v += coeffs[j + 2] * z;
  }
  return v;
}

const std::vector<BenchmarkFunction>& benchmark_functions() {
  static const std::vector<BenchmarkFunction> fns = {
      {"sin", 0.0, 2.0 * std::acos(-1.0), sin_fn},
      {"tanh", -3.0, 3.0, tanh_fn},
      {"logistic", -6.0, 6.0, logistic_fn},
      {"relu", -1.0, 1.0, relu_fn},
      {"gauss", -3.0, 3.0, gauss_fn},
  };
  return fns;
}

const BenchmarkFunction* find_benchmark(const std::string& name) {
  for (const auto& f : benchmark_functions()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::pair<std::vector<double>, std::vector<double>> sample_uniform(const BenchmarkFunction& fn,
                                                                   int n) {
  if (n < 2) throw std::invalid_argument("need at least two sample points");
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = fn.x_min + i * (fn.x_max - fn.x_min) / (n - 1);
    xs[static_cast<std::size_t>(i)] = x;
    ys[static_cast<std::size_t>(i)] = fn.fn(x);
  }
  return {std::move(xs), std::move(ys)};
}

}  // namespace iqls
