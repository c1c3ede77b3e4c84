// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "branchlab/poly.hpp"

namespace branchlab {

/// Polynomial in s whose coefficients are polynomials in t.
/// coeffs[k] multiplies s^k; trailing zero coefficients are stripped.
class BiPoly {
 public:
  explicit BiPoly(const FieldSpec& field = FieldSpec::rationals()) : field_(field) {}
  BiPoly(const FieldSpec& field, std::vector<UniPoly> coeffs);

  /// u(s) viewed as constant in t.
  static BiPoly in_s(const UniPoly& u);
  /// u(t) viewed as constant in s.
  static BiPoly in_t(const UniPoly& u);

  const FieldSpec& field() const { return field_; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree_s() const { return static_cast<long>(coeffs_.size()) - 1; }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);

 private:
  FieldSpec field_;
  std::vector<UniPoly> coeffs_;
};

/// Res_s(p, q) as the determinant of the Sylvester matrix with the rows of p first.
/// Throws ResultantUndefined when p or q is zero, or both have s-degree 0.
UniPoly resultant(const BiPoly& p, const BiPoly& q);

}  // namespace branchlab
