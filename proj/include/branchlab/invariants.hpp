// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "branchlab/hn.hpp"

namespace branchlab {

/// Characteristic sequence (d1; q1..qh), divisor sequence d1..d_{h+1},
/// ratios n_i = d_i / d_{i+1} and semigroup sequence r0..rh.
struct CharData {
  std::vector<std::size_t> indices;  // 1-based column indices i_1 < ... < i_h
  std::size_t h = 0;
  std::vector<std::int64_t> q;  // q_1..q_h
  std::vector<std::int64_t> d;  // d_1..d_{h+1}
  std::vector<std::int64_t> n;  // n_1..n_h
  std::vector<std::int64_t> r;  // r_0..r_h
};

/// Column 1 plus every column i with c_{i+1} < c_i, taking c_{l+1} = 0.
std::vector<std::size_t> characteristic_indices(const HnTableau& t);

/// Throws InfiniteCharacteristicColumn when a p or c up to the last index is infinite.
CharData characteristic_data(const HnTableau& t);

}  // namespace branchlab
