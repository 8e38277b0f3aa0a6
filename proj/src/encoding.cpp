#include "iqls/encoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iqls {

namespace {

void check_box_vectors(const std::vector<double>& lower, const std::vector<double>& upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw std::invalid_argument("search box needs matching non-empty bound vectors");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
      throw std::invalid_argument("search box bounds must be finite");
    }
  }
}

}  // namespace

SearchBox::SearchBox(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  check_box_vectors(lower_, upper_);
  width_.resize(lower_.size());
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw std::invalid_argument("search box coordinate " + std::to_string(i) +
                                  " has non-positive width");
    }
    width_[i] = upper_[i] - lower_[i];
  }
}

SearchBox::SearchBox(std::vector<double> lower, std::vector<double> upper,
                     std::vector<double> width)
    : lower_(std::move(lower)), upper_(std::move(upper)), width_(std::move(width)) {
  check_box_vectors(lower_, upper_);
  if (width_.size() != lower_.size()) {
    throw std::invalid_argument("search box width vector has wrong length");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    // Bounds may round to equal doubles at extreme widths; the stored width
    // is authoritative and must stay positive.
    if (lower_[i] > upper_[i] || !(width_[i] > 0.0) || !std::isfinite(width_[i])) {
      throw std::invalid_argument("search box coordinate " + std::to_string(i) +
                                  " has invalid bounds or width");
    }
  }
}

bool SearchBox::contains(const std::vector<double>& w) const {
  if (w.size() != dim()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < lower_[i] || w[i] > upper_[i]) return false;
  }
  return true;
}

SearchBox uniform_box(std::size_t dim, double lo, double hi) {
  return SearchBox(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

BitEncoding::BitEncoding(SearchBox box, int bits_per_weight)
    : box_(std::move(box)), bits_per_weight_(bits_per_weight) {
  if (bits_per_weight < 1 || bits_per_weight > 32) {
    throw std::invalid_argument("bits per weight must be in [1, 32], got " +
                                std::to_string(bits_per_weight));
  }
  const double levels = std::ldexp(1.0, bits_per_weight) - 1.0;  // 2^m − 1
  step_.resize(box_.dim());
  for (std::size_t i = 0; i < box_.dim(); ++i) {
    step_[i] = box_.width()[i] / levels;
  }
}

BitEncoding make_encoding(const SearchBox& box, int bits_per_weight) {
  return BitEncoding(box, bits_per_weight);
}

std::vector<double> decode(const BitEncoding& enc, const BitVector& bits) {
  const std::size_t d = enc.dim();
  const int m = enc.bits_per_weight();
  if (bits.size() != enc.num_vars()) {
    throw std::invalid_argument("bit vector length " + std::to_string(bits.size()) +
                                " does not match " + std::to_string(enc.num_vars()) +
                                " encoding variables");
  }
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
  }
  std::vector<double> w(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t code = 0;  // MSB first: bit p carries 2^{m−1−p}
    for (int p = 0; p < m; ++p) {
      code = (code << 1) | bits[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(p)];
    }
    w[i] = enc.box().lower()[i] + enc.step()[i] * static_cast<double>(code);
  }
  return w;
}

SearchBox shrink(const BitEncoding& enc, const std::vector<double>& w_star) {
  const std::size_t d = enc.dim();
  if (w_star.size() != d) {
    throw std::invalid_argument("weight vector length does not match encoding dimension");
  }
  const double f = enc.bits_per_weight() == 1 ? 2.0 : 1.0;
  std::vector<double> lower(d), upper(d), width(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double half = enc.step()[i] / (2.0 * f);
    lower[i] = w_star[i] - half;
    upper[i] = w_star[i] + half;
    width[i] = enc.step()[i] / f;  // exact: f is a power of two
  }
  return SearchBox(std::move(lower), std::move(upper), std::move(width));
}

double shrink_factor(int bits_per_weight) {
  if (bits_per_weight < 1) {
    throw std::invalid_argument("bits per weight must be >= 1, got " +
                                std::to_string(bits_per_weight));
  }
  const double f = bits_per_weight == 1 ? 2.0 : 1.0;
  return f * (std::ldexp(1.0, bits_per_weight) - 1.0);
}

}  // namespace iqls
