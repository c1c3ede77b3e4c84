// SPDX-License-Identifier: Apache-2.0
// Random branches and tableaux for the property suites.

#pragma once

#include <numeric>

#include "branchlab/error.hpp"
#include "branchlab/hn.hpp"
#include "support/random.hpp"

namespace testsupport {

/// Random primitive branch with coordinates of degree <= max_deg.
inline branchlab::Branch random_branch(std::mt19937_64& rng, const branchlab::FieldSpec& f, std::size_t max_deg = 6) {
  for (;;) {
    try {
      return branchlab::make_branch(random_poly(rng, f, 1, max_deg), random_poly(rng, f, 1, max_deg), f);
    } catch (const branchlab::Error&) {
    }
  }
}

/// Random tableau of minimal shape with finite columns.
inline branchlab::HnTableau random_tableau(std::mt19937_64& rng, const branchlab::FieldSpec& f,
                                           std::size_t max_columns = 4, std::int64_t max_c = 8) {
  using branchlab::ExtNat;
  std::vector<branchlab::HnColumn> cols;
  std::int64_t c = uniform(rng, 1, max_c);
  for (;;) {
    const bool last = c == 1 || cols.size() + 1 == max_columns || uniform(rng, 0, 1) == 0;
    std::int64_t p;
    do {
      p = uniform(rng, 1, 3 * max_c);
    } while ((std::gcd(p, c) == 1) != last);
    if (last) {
      cols.push_back({ExtNat(p), ExtNat(c), branchlab::HnCoef::marker(f)});
      break;
    }
    cols.push_back({ExtNat(p), ExtNat(c), branchlab::HnCoef::of(random_element(rng, f, true))});
    c = std::gcd(p, c);
  }
  return branchlab::make_tableau(f, std::move(cols));
}

}  // namespace testsupport

#include "branchlab/cluster.hpp"

namespace testsupport {

/// Grows a valid cluster point by point: uniform parent, a satellite target with
/// probability 1/2 among the parent's unused targets, degrees in {1, 2, 3}.
inline branchlab::Cluster random_cluster(std::mt19937_64& rng, std::size_t size) {
  branchlab::Cluster c;
  c.points.push_back({0, std::nullopt, {}, 1});
  for (std::size_t id = 1; id < size; ++id) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(id) - 1));
    branchlab::ClusterPoint pt{id, parent, {parent}, uniform(rng, 1, 3)};
    if (uniform(rng, 0, 1) == 1) {
      std::vector<std::size_t> options;
      for (std::size_t t : c.points[parent].prox) {
        bool used = false;
        for (const auto& other : c.points)
          if (other.parent == parent && other.prox.size() == 2 && (other.prox[1] == t || other.prox[0] == t) &&
              t != parent)
            used = true;
        if (!used) options.push_back(t);
      }
      if (!options.empty()) {
        pt.prox.push_back(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(options.size()) - 1))]);
        pt.degree = c.points[parent].degree;
      }
    }
    c.points.push_back(pt);
  }
  return c;
}

}  // namespace testsupport
