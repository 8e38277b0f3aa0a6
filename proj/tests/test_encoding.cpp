#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "helpers.hpp"
#include "iqls/encoding.hpp"

using namespace iqls;

namespace {

SearchBox box1(double lo, double hi) { return SearchBox({lo}, {hi}); }

BitVector bits_of_code(std::uint64_t code, int m) {
  BitVector b(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    b[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>((code >> (m - 1 - p)) & 1u);
  }
  return b;
}

}  // namespace

TEST_CASE("make_encoding step sizes") {
  CHECK(make_encoding(box1(-5, 5), 2).step()[0] == 10.0 / 3.0);
  CHECK(make_encoding(box1(0, 1), 1).step()[0] == 1.0);
  const auto enc = make_encoding(SearchBox({-5, 0}, {5, 3}), 3);
  CHECK(enc.step()[0] == 10.0 / 7.0);
  CHECK(enc.step()[1] == 3.0 / 7.0);
  CHECK(enc.num_vars() == 6);
}

TEST_CASE("encoding and box validation") {
  CHECK_THROWS_AS(make_encoding(box1(0, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_encoding(box1(0, 1), 33), std::invalid_argument);
  // widest supported code still fits the machine word
  const auto wide = make_encoding(box1(0, 1), 32);
  CHECK(wide.step()[0] == 1.0 / (std::ldexp(1.0, 32) - 1.0));
  CHECK(decode(wide, BitVector(32, 1))[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(decode(wide, BitVector(32, 0))[0] == 0.0);
  CHECK_THROWS_AS(SearchBox({0.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SearchBox({1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SearchBox({0.0, 1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SearchBox({0.0}, {std::nan("")}), std::invalid_argument);
}

TEST_CASE("decode maps codes onto the grid, most significant bit first") {
  const auto enc = make_encoding(box1(-5, 5), 2);
  CHECK(decode(enc, {0, 0})[0] == -5.0);
  CHECK(decode(enc, {1, 1})[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(decode(enc, {0, 1})[0] == -5.0 + 10.0 / 3.0);
  CHECK(decode(enc, {1, 0})[0] == -5.0 + (10.0 / 3.0) * 2.0);
}

TEST_CASE("decode rejects malformed bit vectors") {
  const auto enc = make_encoding(box1(-5, 5), 2);
  CHECK_THROWS_AS(decode(enc, {0}), std::invalid_argument);
  CHECK_THROWS_AS(decode(enc, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(decode(enc, {0, 2}), std::invalid_argument);
}

TEST_CASE("property: grid round-trip stays in bounds with uniform spacing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const double lo = uniform_in(rng, -8.0, 2.0);
    const double hi = lo + uniform_in(rng, 0.5, 9.0);
    const auto enc = make_encoding(box1(lo, hi), m);
    const std::uint64_t levels = (std::uint64_t{1} << m) - 1;

    double prev = 0.0;
    for (std::uint64_t code = 0; code <= levels; ++code) {
      const double w = decode(enc, bits_of_code(code, m))[0];
      CHECK(w >= enc.box().lower()[0] - 1e-12 * std::abs(lo));
      CHECK(w <= enc.box().upper()[0] + 1e-12 * std::abs(hi));
      if (code > 0) {
        CHECK(test::close_rel(w - prev, enc.step()[0], 1e-12));
      }
      prev = w;
    }
  }
}

TEST_CASE("shrink recenters on the selected weight") {
  SUBCASE("m=1 halves the width around an endpoint") {
    const auto enc = make_encoding(box1(-5, 5), 1);
    const auto next = shrink(enc, {5.0});
    CHECK(next.lower()[0] == 2.5);
    CHECK(next.upper()[0] == 7.5);
    CHECK(next.width()[0] == 5.0);
  }
  SUBCASE("m=2 keeps one step of width") {
    const auto enc = make_encoding(box1(-5, 5), 2);
    const auto next = shrink(enc, {0.0});
    CHECK(next.lower()[0] == -(10.0 / 3.0) / 2.0);
    CHECK(next.upper()[0] == (10.0 / 3.0) / 2.0);
    CHECK(next.width()[0] == 10.0 / 3.0);
  }
  SUBCASE("m=3 contracts any box by exactly 7") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const double lo = uniform_in(rng, -10.0, 5.0);
      const double hi = lo + uniform_in(rng, 0.1, 10.0);
      const auto enc = make_encoding(box1(lo, hi), 3);
      const auto next = shrink(enc, {uniform_in(rng, lo, hi)});
      CHECK(next.width()[0] == enc.box().width()[0] / 7.0);
    }
  }
}

TEST_CASE("shrink_factor per bit width") {
  CHECK(shrink_factor(1) == 2.0);
  CHECK(shrink_factor(2) == 3.0);
  CHECK(shrink_factor(6) == 63.0);
  CHECK_THROWS_AS(shrink_factor(0), std::invalid_argument);
}

TEST_CASE("property: repeated shrinkage follows the geometric width law") {
  std::mt19937_64 rng(21);
  for (int m : {1, 2, 3, 6}) {
    const double width0 = 20.0;
    SearchBox box = box1(-10, 10);
    const double factor = shrink_factor(m);
    for (int k = 1; k <= 10; ++k) {
      const auto enc = make_encoding(box, m);
      // decode a random grid point as the selected weight
      const std::uint64_t levels = (std::uint64_t{1} << m) - 1;
      const auto w = decode(enc, bits_of_code(rng() % (levels + 1), m));
      box = shrink(enc, w);
      CHECK(test::close_rel(box.width()[0], width0 / std::pow(factor, k), 1e-12));
    }
  }
}

TEST_CASE("property: the shrunken box is centered on the selected grid point") {
  // Centering is exact up to one rounding of each bound; the two roundings
  // cancel except when w ± half straddles a binade, so allow one ulp.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const double lo = uniform_in(rng, -9.0, 4.0);
    const double hi = lo + uniform_in(rng, 0.25, 12.0);
    const auto enc = make_encoding(box1(lo, hi), m);
    const std::uint64_t levels = (std::uint64_t{1} << m) - 1;
    const double w = decode(enc, bits_of_code(rng() % (levels + 1), m))[0];
    const auto next = shrink(enc, {w});
    const double mid = (next.lower()[0] + next.upper()[0]) / 2.0;
    const double scale = std::max({std::abs(next.lower()[0]), std::abs(next.upper()[0]), 1.0});
    CHECK(std::abs(mid - w) <= scale * 0x1.0p-52);
  }
}

TEST_CASE("property: for m >= 2 the shrunken box keeps nearby targets") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const double lo = uniform_in(rng, -9.0, 4.0);
    const double hi = lo + uniform_in(rng, 0.25, 12.0);
    const auto enc = make_encoding(box1(lo, hi), m);
    const double t = uniform_in(rng, lo, hi);

    // nearest grid value to t
    const std::uint64_t levels = (std::uint64_t{1} << m) - 1;
    const double raw = (t - lo) / enc.step()[0];
    std::uint64_t code = raw <= 0.0 ? 0 : static_cast<std::uint64_t>(std::llround(raw));
    code = std::min(code, levels);
    const double w = decode(enc, bits_of_code(code, m))[0];
    REQUIRE(std::abs(t - w) <= enc.step()[0] / 2.0 * (1.0 + 1e-12));

    CHECK(shrink(enc, {w}).contains({t}));
  }
}

TEST_CASE("m=1 shrinkage can drop a mid-box target") {
  // box [0,4]: grid {0,4}; target 1.9 rounds to 0, but the next box is
  // [-1,1], which no longer contains it. Recorded behavior, no recovery.
  const auto enc = make_encoding(box1(0, 4), 1);
  const auto next = shrink(enc, {0.0});
  CHECK(next.lower()[0] == -1.0);
  CHECK(next.upper()[0] == 1.0);
  CHECK(!next.contains({1.9}));
}

TEST_CASE("uniform_box covers every coordinate") {
  const auto box = uniform_box(3, -2, 2);
  CHECK(box.dim() == 3);
  CHECK(box.contains({0, 1.5, -1.5}));
  CHECK(!box.contains({0, 2.5, 0}));
  CHECK(!box.contains({0, 0}));
}
