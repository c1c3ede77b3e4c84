// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branchlab/cluster.hpp"
#include "branchlab/hn.hpp"
#include "branchlab/invariants.hpp"

namespace branchlab {

struct ContactData {
  /// Number of leading columns that agree in p/c and in a; inf for identical expansions.
  ExtNat s;
  /// 1-based column of the first disagreement.
  std::optional<std::size_t> first_divergence;
};

/// Contact order of two materialized tableaux. A tableau ending in an infinite column
/// is read as repeating it. Throws InsufficientColumns when the columns run out first,
/// or when the decisive column carries the end marker with an agreeing ratio.
ContactData contact_order(const HnTableau& t1, const HnTableau& t2);

/// Contact order computed on lazily expanded columns.
ContactData contact_order(const Branch& b1, const Branch& b2);

/// Checks that p_i/c_i = p'_i/c'_i, p_i/c_1 = p'_i/c'_1 and p_i/c_{s+1} = p'_i/c'_{s+1}
/// all hold for i <= s + 1 (columns must be finite). The three conditions are equivalent.
bool proportionality_check(const HnTableau& t1, const HnTableau& t2, std::size_t s);

/// sum_{i<=s} p_i c'_i + min(p_{s+1} c'_{s+1}, p'_{s+1} c_{s+1}); both symmetric forms are
/// evaluated and must agree. Throws SameBranch when s is infinite.
ExtNat intersection_number(const HnTableau& t1, const HnTableau& t2);
ExtNat intersection_number(const Branch& b1, const Branch& b2);

/// True when gcd(x, y) is a power of t, so the origin has a single preimage.
bool is_local_parametrization(const Branch& b);

/// ord_t Res_s(x1(s) - x2(t), y1(s) - y2(t)) with a local parametrization on the s side.
/// Returns inf when the resultant vanishes. Throws NonLocalParametrization when neither
/// branch has a local parametrization.
ExtNat resultant_intersection(const Branch& b1, const Branch& b2);

/// Sum of m * m' over the infinitely near points shared by the two branches.
std::int64_t noether_intersection(const Branch& b1, const Branch& b2);

struct ResolutionCluster {
  Cluster cluster;
  std::vector<std::int64_t> multiplicities;
};

/// Cluster of the minimal embedded resolution (all degrees 1) and the multiplicities on it.
ResolutionCluster resolution_cluster(const Branch& b);

struct ApproxSpec {
  std::size_t mu = 0;  // target column, must equal the j-th characteristic index
  std::size_t j = 0;   // 1-based
};

/// Spec for the j-th characteristic index of t. Throws NotCharacteristicIndex if j is out of range.
ApproxSpec approx_spec(const HnTableau& t, std::size_t j);

/// Columns before mu scaled by 1/c_mu, then (p', 1, end) with p' the smallest value
/// >= p_mu whose ratio differs from p_mu/c_mu.
/// Errors: NotCharacteristicIndex, NonIntegerScaling.
HnTableau mu_approximation(const HnTableau& t, const ApproxSpec& spec);

/// sum_{i<=mu} p_i c_i / c_mu for mu = i_j.
std::int64_t approximation_closed_form(const HnTableau& t, std::size_t j);

/// True iff the intersection number of f and g equals r_j of f. Errors: IndexOutOfRange.
bool curvette_check(const Branch& f, const Branch& g, std::size_t j);

/// Two distinct curvettes through the last point of the resolution cluster of f.
/// Requires a field with at least three elements.
std::pair<Branch, Branch> last_point_curvettes(const Branch& f);

}  // namespace branchlab
