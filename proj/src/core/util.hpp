#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace minsph {

// ---------------------------------------------------------------------------
// Counter-based uniforms. Every random stream in the toolkit is a pure
// function of (seed, stream, counter), so results never depend on call order
// or worker count.
// ---------------------------------------------------------------------------

inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t hash_u64(uint64_t seed, uint64_t stream, uint64_t counter) {
  uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ull);
  h = mix64(h ^ stream);
  h = mix64(h ^ counter);
  return h;
}

// Uniform in [0, 1).
inline double u01(uint64_t seed, uint64_t stream, uint64_t counter) {
  return static_cast<double>(hash_u64(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on two counter draws.
inline double gauss01(uint64_t seed, uint64_t stream, uint64_t counter) {
  double u1 = u01(seed, 2 * stream, counter);
  double u2 = u01(seed, 2 * stream + 1, counter);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// ---------------------------------------------------------------------------
// Deterministic blocked pairwise reduction. Leaves of fixed size are summed
// sequentially, leaf sums are folded in a fixed binary tree, so the result is
// a function of (n, term values) only.
// ---------------------------------------------------------------------------

inline double fold_pairwise(std::vector<double>& sums) {
  while (sums.size() > 1) {
    std::size_t h = 0;
    for (std::size_t i = 0; i + 1 < sums.size(); i += 2) sums[h++] = sums[i] + sums[i + 1];
    if (sums.size() % 2) sums[h++] = sums.back();
    sums.resize(h);
  }
  return sums.empty() ? 0.0 : sums[0];
}

template <class F>
double pairwise_sum(std::size_t n, F&& term) {
  constexpr std::size_t kLeaf = 256;
  std::vector<double> sums;
  sums.reserve(n / kLeaf + 1);
  for (std::size_t b = 0; b < n; b += kLeaf) {
    const std::size_t e = std::min(n, b + kLeaf);
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += term(i);
    sums.push_back(s);
  }
  return fold_pairwise(sums);
}

// Same reduction for k accumulators filled per index; term(i, vals) writes
// vals[0..k). Used by Monte Carlo passes that track value and variance (and
// several bands) in one sweep.
template <class F>
void pairwise_sum_multi(std::size_t n, int k, double* out, F&& term) {
  constexpr std::size_t kLeaf = 256;
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(k));
  std::vector<double> leaf(static_cast<std::size_t>(k));
  std::vector<double> vals(static_cast<std::size_t>(k));
  for (std::size_t b = 0; b < n; b += kLeaf) {
    const std::size_t e = std::min(n, b + kLeaf);
    std::fill(leaf.begin(), leaf.end(), 0.0);
    for (std::size_t i = b; i < e; ++i) {
      term(i, vals.data());
      for (int j = 0; j < k; ++j) leaf[static_cast<std::size_t>(j)] += vals[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < k; ++j) sums[static_cast<std::size_t>(j)].push_back(leaf[static_cast<std::size_t>(j)]);
  }
  for (int j = 0; j < k; ++j) out[j] = fold_pairwise(sums[static_cast<std::size_t>(j)]);
}

// ---------------------------------------------------------------------------
// FNV-1a, used for config hashes in output headers.
// ---------------------------------------------------------------------------

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string to_hex(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace minsph
