// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/branch.hpp"
#include "branchlab/extnat.hpp"
#include "branchlab/series.hpp"

namespace branchlab {

/// Coefficient entry of a tableau column: a field element or the end marker.
struct HnCoef {
  bool end_marker = false;
  FieldElement value;

  static HnCoef marker(const FieldSpec& f) { return {true, FieldElement(f)}; }
  static HnCoef of(FieldElement v) { return {false, std::move(v)}; }

  std::string to_string() const { return end_marker ? "inf" : value.to_string(); }
  friend bool operator==(const HnCoef& a, const HnCoef& b) {
    return a.end_marker == b.end_marker && (a.end_marker || a.value == b.value);
  }
};

struct HnColumn {
  ExtNat p;
  ExtNat c;
  HnCoef a;

  bool is_infinite() const { return p.is_inf() || c.is_inf(); }
  friend bool operator==(const HnColumn& x, const HnColumn& y) { return x.p == y.p && x.c == y.c && x.a == y.a; }
};

struct HnTableau {
  FieldSpec field;
  std::vector<HnColumn> columns;
  /// Points per column: the sum of the Euclidean quotients of (p, c); 0 for infinite columns.
  std::vector<std::int64_t> m_list;

  std::size_t length() const { return columns.size(); }
  /// Column by 1-based index.
  const HnColumn& column(std::size_t i) const { return columns.at(i - 1); }

  friend bool operator==(const HnTableau& x, const HnTableau& y) {
    return x.field == y.field && x.columns == y.columns && x.m_list == y.m_list;
  }
};

/// Euclidean quotients s_1..s_kappa of (p, c); s_1 is 0 when p < c.
std::vector<std::int64_t> euclid_quotients(std::int64_t p, std::int64_t c);

/// m for a column: sum of the Euclidean quotients, 0 when p or c is infinite.
std::int64_t column_points(const ExtNat& p, const ExtNat& c);

/// Fills m_list from the columns.
HnTableau make_tableau(const FieldSpec& field, std::vector<HnColumn> columns);

struct EuclidChain {
  std::vector<std::int64_t> s_list;
  std::size_t kappa = 0;
  /// v(eta_0) .. v(eta_{kappa+1}); the last entry is 0.
  std::vector<std::int64_t> eta_vals;
  FieldElement a;
  std::int64_t m = 0;
  RatSeries next_x;
  RatSeries next_y;
};

/// One Euclidean chain starting from eta0 = y, eta1 = x.
/// Throws NonPositiveValuation unless both orders are finite and positive.
EuclidChain euclid_chain(const RatSeries& eta0, const RatSeries& eta1);

/// Lazily generated columns of the expansion of a branch. Coefficients are always
/// the real ones; the end marker is applied only when a tableau is cut.
class HnExpansion {
 public:
  explicit HnExpansion(const Branch& b);

  /// Column by 1-based index, generating as needed.
  const HnColumn& column(std::size_t i);
  std::size_t generated() const { return columns_.size(); }
  /// True once every further column repeats the last generated one.
  bool stabilized() const { return stabilized_; }
  const FieldSpec& field() const { return field_; }
  /// max(deg x, deg y) of the source parametrization.
  std::int64_t degree() const { return degree_; }

 private:
  void advance();

  FieldSpec field_;
  RatSeries x_;
  RatSeries y_;
  std::vector<HnColumn> columns_;
  bool stabilized_ = false;
  std::int64_t degree_ = 1;
};

/// 1-based index of the first column where the expansions differ in p/c ratio or
/// coefficient; nullopt when they agree forever (same branch).
std::optional<std::size_t> first_divergence(HnExpansion& a, HnExpansion& b);

/// Ratio-and-coefficient agreement of two columns, with p/c = inf when p = inf and 0 when c = inf.
bool columns_agree(const HnColumn& a, const HnColumn& b);

struct DepthPolicy {
  enum class Kind { Minimal, ToColumns, UntilDistinguishedFrom };
  Kind kind = Kind::Minimal;
  std::size_t columns = 0;
  std::optional<Branch> other;

  static DepthPolicy minimal() { return {}; }
  static DepthPolicy to_columns(std::size_t n);
  static DepthPolicy until_distinguished_from(const Branch& other);
};

/// Minimal: stop at the first column with gcd(c, p) = 1.
/// ToColumns(n): max(n, minimal length) columns.
/// UntilDistinguishedFrom(g): enough columns to include the first divergence from g.
/// The last column carries the end marker unless it is an infinite column.
HnTableau hn_tableau(const Branch& b, const DepthPolicy& policy = DepthPolicy::minimal());

struct TableauViolation {
  std::string rule;
  std::size_t column;  // 1-based; 0 for whole-tableau findings
  std::string message;
};

std::vector<TableauViolation> tableau_validate(const HnTableau& t);

/// True when no column before the last has gcd(c, p) = 1.
bool is_minimal_shape(const HnTableau& t);

/// One infinitely near point on the blow-up walk of a tableau.
struct WalkPoint {
  std::int64_t multiplicity;
  std::optional<std::size_t> parent;
  /// Points this one is proximate to, parent first.
  std::vector<std::size_t> prox;
};

/// Infinitely near points of the minimal embedded resolution, in blow-up order.
/// Throws RequiresMinimalPolicy unless the tableau has minimal shape.
std::vector<WalkPoint> resolution_points(const HnTableau& t);

/// Multiplicities of the strict transform at the points of resolution_points.
std::vector<std::int64_t> multiplicity_sequence(const HnTableau& t);

/// Canonical parametrization realizing a valid tableau; throws UnrealizableTableau.
Branch synthesize_branch(const HnTableau& t);

}  // namespace branchlab
