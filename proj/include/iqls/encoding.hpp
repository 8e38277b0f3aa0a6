#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace iqls {

using BitVector = std::vector<std::uint8_t>;

/// Per-weight search interval [lower_i, upper_i].
///
/// The interval width is carried as its own vector instead of being derived
/// as upper−lower on demand: after many shrink steps the width drops below
/// one ulp of the bounds and the subtraction would cancel to zero (or to a
/// value with almost no correct digits), while the directly-propagated width
/// keeps full relative precision. The bounds may therefore round to equal
/// doubles in deep iterations; the stored width stays strictly positive.
class SearchBox {
 public:
  /// Empty (dimension-0) box; a placeholder until real bounds are assigned.
  SearchBox() = default;

  /// User-facing constructor; requires lower_i < upper_i, width = upper−lower.
  SearchBox(std::vector<double> lower, std::vector<double> upper);

  /// Internal constructor used by shrink(), where the width is known exactly.
  /// Requires lower_i ≤ upper_i and width_i > 0.
  SearchBox(std::vector<double> lower, std::vector<double> upper,
            std::vector<double> width);

  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<double>& width() const { return width_; }
  std::size_t dim() const { return lower_.size(); }

  /// lower_i ≤ w_i ≤ upper_i for all i.
  bool contains(const std::vector<double>& w) const;

  bool operator==(const SearchBox&) const = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> width_;
};

/// Uniform box [lo, hi] in every coordinate.
SearchBox uniform_box(std::size_t dim, double lo, double hi);

/// Fixed-point binary code over a SearchBox: m bits per weight, step
/// δ_i = width_i / (2^m − 1). Variable r = i·m + p addresses bit p of
/// weight i, with p = 0 the most significant bit.
class BitEncoding {
 public:
  BitEncoding(SearchBox box, int bits_per_weight);

  const SearchBox& box() const { return box_; }
  int bits_per_weight() const { return bits_per_weight_; }
  const std::vector<double>& step() const { return step_; }
  std::size_t dim() const { return box_.dim(); }
  std::size_t num_vars() const { return box_.dim() * static_cast<std::size_t>(bits_per_weight_); }

 private:
  SearchBox box_;
  int bits_per_weight_;
  std::vector<double> step_;
};

/// Requires 1 ≤ m ≤ 32 and a valid box.
BitEncoding make_encoding(const SearchBox& box, int bits_per_weight);

/// w_i = lower_i + δ_i · Σ_p 2^{m−1−p} b_{i,p}. All-zeros decodes to the
/// lower bounds, all-ones to the upper bounds (up to one ulp).
std::vector<double> decode(const BitEncoding& enc, const BitVector& bits);

/// New box centered on w_star with half-width δ_i / (2 f(m)), where
/// f(1) = 2 and f(m≥2) = 1. δ is the *current* encoding's step, so the new
/// width is exactly δ_i / f(m) = old width / shrink_factor(m).
SearchBox shrink(const BitEncoding& enc, const std::vector<double>& w_star);

/// Per-iteration width contraction f(m)·(2^m − 1); 2 for m = 1, 3 for m = 2.
double shrink_factor(int bits_per_weight);

}  // namespace iqls
