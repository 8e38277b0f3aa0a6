#include "iqls/qubo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "iqls/errors.hpp"
#include "iqls/format.hpp"

namespace iqls {

Qubo build_qubo(const GramCache& gc, const BitEncoding& enc) {
  const std::size_t d = enc.dim();
  if (gc.dim() != d) {
    throw std::invalid_argument("Gram cache dimension " + std::to_string(gc.dim()) +
                                " does not match encoding dimension " + std::to_string(d));
  }
  const int m = enc.bits_per_weight();
  const std::size_t n = enc.num_vars();
  const auto& lo = enc.box().lower();

  // Gℓ and the constant term yy − 2ℓᵀh + ℓᵀGℓ (= SSE at the lower corner).
  std::vector<double> Gl(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) Gl[i] += gc.G(i, j) * lo[j];
  }
  double offset = gc.yy;
  for (std::size_t i = 0; i < d; ++i) offset += lo[i] * (Gl[i] - 2.0 * gc.h[i]);

  // Amplitude of variable r = (i, p): a_r = δ_i · 2^{m−1−p}.
  std::vector<double> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = r / static_cast<std::size_t>(m);
    const int p = static_cast<int>(r % static_cast<std::size_t>(m));
    a[r] = enc.step()[i] * std::ldexp(1.0, m - 1 - p);
  }

  Qubo q;
  q.num_vars = n;
  q.offset = offset;
  q.linear.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = r / static_cast<std::size_t>(m);
    q.linear[r] = a[r] * (2.0 * (Gl[i] - gc.h[i]) + a[r] * gc.G(i, i));
  }
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = r / static_cast<std::size_t>(m);
    for (std::size_t s = r + 1; s < n; ++s) {
      const std::size_t j = s / static_cast<std::size_t>(m);
      const double v = 2.0 * a[r] * a[s] * gc.G(i, j);
      if (v != 0.0) {
        q.quadratic.emplace(std::make_pair(static_cast<std::uint32_t>(r),
                                           static_cast<std::uint32_t>(s)),
                            v);
      }
    }
  }
  return q;
}

double energy(const Qubo& q, const BitVector& bits) {
  if (bits.size() != q.num_vars) {
    throw std::invalid_argument("bit vector length " + std::to_string(bits.size()) +
                                " does not match " + std::to_string(q.num_vars) +
                                " QUBO variables");
  }
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
  }
  double e = q.offset;
  for (std::size_t r = 0; r < q.num_vars; ++r) {
    if (bits[r]) e += q.linear[r];
  }
  for (const auto& [key, v] : q.quadratic) {
    if (bits[key.first] && bits[key.second]) e += v;
  }
  return e;
}

std::string export_qubo(const Qubo& q) {
  std::ostringstream out;
  out << "iqls-qubo v1\n";
  out << "num_vars " << q.num_vars << "\n";
  out << "offset " << format_double(q.offset) << "\n";
  std::size_t nonzero = 0;
  for (double v : q.linear) {
    if (v != 0.0) ++nonzero;
  }
  out << "linear " << nonzero << "\n";
  for (std::size_t r = 0; r < q.linear.size(); ++r) {
    if (q.linear[r] != 0.0) out << r << " " << format_double(q.linear[r]) << "\n";
  }
  out << "quadratic " << q.quadratic.size() << "\n";
  for (const auto& [key, v] : q.quadratic) {
    out << key.first << " " << key.second << " " << format_double(v) << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string next_line(std::istringstream& in, const std::string& context) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw ParseError("unexpected end of QUBO document while reading " + context);
}

}  // namespace

Qubo import_qubo(const std::string& doc) {
  std::istringstream in(doc);

  auto header = split_fields(next_line(in, "header"));
  if (header.size() != 2 || header[0] != "iqls-qubo") {
    throw ParseError("not an iqls-qubo document (bad header)");
  }
  if (header[1] != "v1") throw ParseError("unsupported version '" + header[1] + "'");

  auto nv = split_fields(next_line(in, "num_vars"));
  if (nv.size() != 2 || nv[0] != "num_vars") throw ParseError("expected num_vars line");
  const std::size_t n = parse_index(nv[1], "num_vars");
  if (n == 0) throw ParseError("num_vars must be positive");

  auto off = split_fields(next_line(in, "offset"));
  if (off.size() != 2 || off[0] != "offset") throw ParseError("expected offset line");

  Qubo q;
  q.num_vars = n;
  q.offset = parse_double(off[1], "offset");
  q.linear.assign(n, 0.0);

  auto lin = split_fields(next_line(in, "linear"));
  if (lin.size() != 2 || lin[0] != "linear") throw ParseError("expected linear section");
  const std::size_t lin_count = parse_index(lin[1], "linear count");
  std::vector<bool> seen(n, false);
  for (std::size_t e = 0; e < lin_count; ++e) {
    auto f = split_fields(next_line(in, "linear entry"));
    if (f.size() != 2) throw ParseError("linear entry needs index and coefficient");
    const std::size_t r = parse_index(f[0], "linear index");
    if (r >= n) throw ParseError("index out of range in linear entry: " + f[0]);
    if (seen[r]) throw ParseError("duplicate linear index " + f[0]);
    seen[r] = true;
    q.linear[r] = parse_double(f[1], "linear coefficient");
  }

  auto quad = split_fields(next_line(in, "quadratic"));
  if (quad.size() != 2 || quad[0] != "quadratic") throw ParseError("expected quadratic section");
  const std::size_t quad_count = parse_index(quad[1], "quadratic count");
  for (std::size_t e = 0; e < quad_count; ++e) {
    auto f = split_fields(next_line(in, "quadratic entry"));
    if (f.size() != 3) throw ParseError("quadratic entry needs two indices and a coefficient");
    const std::size_t r = parse_index(f[0], "quadratic index");
    const std::size_t s = parse_index(f[1], "quadratic index");
    if (r >= n || s >= n) {
      throw ParseError("index out of range in quadratic entry: " + f[0] + " " + f[1]);
    }
    if (r >= s) throw ParseError("unordered pair in quadratic entry: " + f[0] + " " + f[1]);
    auto key = std::make_pair(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s));
    if (q.quadratic.count(key) != 0) {
      throw ParseError("duplicate quadratic pair " + f[0] + " " + f[1]);
    }
    q.quadratic.emplace(key, parse_double(f[2], "quadratic coefficient"));
  }

  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty() && rest.back() == '\r') rest.pop_back();
    if (!rest.empty()) throw ParseError("trailing content after quadratic section: '" + rest + "'");
  }
  return q;
}

}  // namespace iqls
