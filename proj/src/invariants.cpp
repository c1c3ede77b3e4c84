// SPDX-License-Identifier: Apache-2.0

#include "branchlab/invariants.hpp"

#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

std::vector<std::size_t> characteristic_indices(const HnTableau& t) {
  std::vector<std::size_t> out;
  const std::size_t l = t.length();
  for (std::size_t i = 1; i <= l; ++i) {
    const bool drop = i == l || t.column(i + 1).c < t.column(i).c;
    if (i == 1 || drop) out.push_back(i);
  }
  return out;
}

CharData characteristic_data(const HnTableau& t) {
  CharData cd;
  cd.indices = characteristic_indices(t);
  cd.h = cd.indices.size();
  for (std::size_t i = 1; i <= cd.indices.back(); ++i)
    if (t.column(i).is_infinite())
      throw Error(ErrorCode::InfiniteCharacteristicColumn,
                  "column " + std::to_string(i) + " is infinite but lies before the last characteristic index");
  std::size_t prev = 0;
  for (std::size_t idx : cd.indices) {
    std::int64_t q = 0;
    for (std::size_t i = prev + 1; i <= idx; ++i) q += t.column(i).p.value();
    cd.q.push_back(q);
    cd.d.push_back(t.column(idx).c.value());
    prev = idx;
  }
  cd.d.push_back(1);
  for (std::size_t j = 0; j < cd.h; ++j) {
    if (cd.d[j] % cd.d[j + 1] != 0) throw std::logic_error("divisor sequence is not a divisor chain");
    cd.n.push_back(cd.d[j] / cd.d[j + 1]);
  }
  cd.r.push_back(cd.d[0]);
  std::int64_t weighted = 0;
  for (std::size_t j = 0; j < cd.h; ++j) {
    weighted += cd.q[j] * cd.d[j];
    if (weighted % cd.d[j] != 0) throw std::logic_error("semigroup entry is not an integer");
    cd.r.push_back(weighted / cd.d[j]);
  }
  return cd;
}

}  // namespace branchlab
