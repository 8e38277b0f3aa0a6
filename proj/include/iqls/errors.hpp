#pragma once

#include <stdexcept>
#include <string>

namespace iqls {

/// Normal-equation system is singular or too ill-conditioned to factor.
class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(std::size_t pivot_index, const std::string& what)
      : std::runtime_error(what), pivot_index_(pivot_index) {}

  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

/// Problem exceeds a solver's enumeration budget.
class BudgetExceededError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input document (QUBO file, dataset CSV, ...).
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (unreadable/unwritable path).
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace iqls
