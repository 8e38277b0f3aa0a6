#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iqls/encoding.hpp"
#include "iqls/linalg.hpp"

namespace iqls {

/// Binary quadratic form  E(b) = offset + Σ_r linear_r b_r + Σ_{r<s} Γ_{r,s} b_r b_s.
/// Quadratic keys are strictly ordered pairs r < s; diagonal contributions are
/// already folded into the linear terms via b² = b.
struct Qubo {
  std::size_t num_vars = 0;
  double offset = 0.0;
  std::vector<double> linear;  // dense, length num_vars
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> quadratic;

  bool operator==(const Qubo&) const = default;
};

/// Expands the discretized SSE into QUBO coefficients.
///
/// With w = ℓ + diag(δ)·B(b) and per-variable amplitude a_r = δ_i · 2^{m−1−p}
/// for r = (i,p), the SSE quadratic in w expands to
///   offset   = yy − 2 ℓᵀh + ℓᵀGℓ                (= SSE at the lower corner)
///   linear_r = 2 a_r (Gℓ − h)_i + a_r² G_{ii}     (b² = b fold-in)
///   Γ_{r,s}  = 2 a_r a_s G_{i(r), i(s)}           (r < s)
/// so that energy(build_qubo(gc, enc), b) == sse(ds, decode(enc, b)) for every
/// assignment b. Cost is O(d²m²) given the GramCache, independent of N.
Qubo build_qubo(const GramCache& gc, const BitEncoding& enc);

double energy(const Qubo& q, const BitVector& bits);

/// Versioned line-oriented text document; round-trips losslessly through
/// import_qubo (doubles serialized with shortest round-trip formatting).
std::string export_qubo(const Qubo& q);

/// Parses an export_qubo document. Throws ParseError naming the offending
/// field on malformed input, unknown version, duplicate or unordered keys,
/// or out-of-range indices.
Qubo import_qubo(const std::string& doc);

}  // namespace iqls
