// SPDX-License-Identifier: Apache-2.0
// Seeded generators shared by the property suites. BRANCHLAB_SEED overrides the seed.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

#include "branchlab/poly.hpp"

namespace testsupport {

inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("BRANCHLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240917ULL;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(base_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline branchlab::FieldElement random_element(std::mt19937_64& rng, const branchlab::FieldSpec& f, bool nonzero = false) {
  for (;;) {
    branchlab::FieldElement e(f, uniform(rng, -5, 5));
    if (f.kind == branchlab::FieldSpec::Kind::PrimeField)
      e = branchlab::FieldElement(f, uniform(rng, 0, static_cast<long long>(f.characteristic) - 1));
    if (!nonzero || !e.is_zero()) return e;
  }
}

/// Random polynomial with support in [min_exp, max_exp], nonzero.
inline branchlab::UniPoly random_poly(std::mt19937_64& rng, const branchlab::FieldSpec& f, std::size_t min_exp,
                                      std::size_t max_exp) {
  for (;;) {
    std::vector<branchlab::FieldElement> c(max_exp + 1, branchlab::FieldElement(f));
    for (std::size_t e = min_exp; e <= max_exp; ++e)
      if (uniform(rng, 0, 2) != 0) c[e] = random_element(rng, f);
    branchlab::UniPoly p(f, std::move(c));
    if (!p.is_zero()) return p;
  }
}

}  // namespace testsupport
