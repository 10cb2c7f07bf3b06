#pragma once

// Shared test helpers: deterministic RNG and an independent brute-force
// oracle for basis-blade products (bubble-sort transposition counting,
// deliberately a different algorithm from the library's popcount table).

#include <cstdint>
#include <vector>

#include "soliton/cl13/multivector.hpp"

namespace testsupport {

// splitmix-seeded xorshift-free uniform doubles: stable across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [-1, 1).
  double sym() { return uniform() * 2.0 - 1.0; }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

inline sol::cl13::Multivector random_multivector(Rng& rng) {
  sol::cl13::Multivector m;
  for (unsigned i = 0; i < 16; ++i) m[i] = rng.sym();
  return m;
}

struct BladeProduct {
  int sign;      // +1 or -1
  unsigned mask; // resulting blade
};

/// Oracle: multiply basis blades by concatenating generator index lists,
/// bubble-sorting into ascending order (each swap flips the sign), then
/// contracting equal adjacent generators with the metric.
inline BladeProduct brute_force_blade_product(unsigned a, unsigned b) {
  std::vector<int> gens;
  for (int mu = 0; mu < 4; ++mu)
    if (a & (1u << mu)) gens.push_back(mu);
  for (int mu = 0; mu < 4; ++mu)
    if (b & (1u << mu)) gens.push_back(mu);

  int sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        swapped = true;
      }
    }
  }
  // Contract equal neighbours: gamma_mu gamma_mu = eta_mumu.
  std::vector<int> reduced;
  for (std::size_t i = 0; i < gens.size();) {
    if (i + 1 < gens.size() && gens[i] == gens[i + 1]) {
      sign *= (gens[i] == 0) ? 1 : -1;
      i += 2;
    } else {
      reduced.push_back(gens[i]);
      ++i;
    }
  }
  unsigned mask = 0;
  for (int mu : reduced) mask |= 1u << mu;
  return {sign, mask};
}

} // namespace testsupport
