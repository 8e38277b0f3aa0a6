#pragma once

#include <filesystem>
#include <random>
#include <unistd.h>
#include <string>
#include <vector>

#include "iqls/linalg.hpp"
#include "iqls/rng.hpp"

namespace iqls::test {

inline Matrix matrix(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline Dataset dataset(const std::vector<std::vector<double>>& rows,
                       const std::vector<double>& y) {
  return Dataset(matrix(rows), y);
}

/// Random dataset with targets from a linear model plus optional noise.
inline Dataset random_linear_dataset(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                     double noise = 0.0) {
  Matrix x(n, d);
  std::vector<double> w(d);
  for (auto& v : w) v = uniform_in(rng, -3.0, 3.0);
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      x(i, j) = uniform_in(rng, -2.0, 2.0);
      y[i] += w[j] * x(i, j);
    }
    if (noise > 0.0) y[i] += noise * (uniform01(rng) - 0.5);
  }
  return Dataset(std::move(x), std::move(y));
}

/// Unique scratch directory for file-producing tests.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto base = std::filesystem::temp_directory_path() /
              ("iqls_tests_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::create_directories(base);
  return base;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace iqls::test
