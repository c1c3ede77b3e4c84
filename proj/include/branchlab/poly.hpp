// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchlab/extnat.hpp"
#include "branchlab/field.hpp"

namespace branchlab {

/// Dense univariate polynomial in t. Trailing zeros are always stripped, so
/// the zero polynomial has no coefficients.
class UniPoly {
 public:
  explicit UniPoly(const FieldSpec& field = FieldSpec::rationals()) : field_(field) {}
  UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  static UniPoly monomial(const FieldElement& c, std::size_t exponent);
  /// Builds from {exponent: integer coefficient}.
  static UniPoly from_terms(const FieldSpec& field, const std::map<std::size_t, long long>& terms);

  const FieldSpec& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; inf for zero.
  ExtNat ord() const;
  FieldElement coeff(std::size_t e) const;
  FieldElement leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const FieldElement& c) const;
  UniPoly pow(std::size_t e) const;
  /// Multiplies by t^k.
  UniPoly shifted_up(std::size_t k) const;
  /// Divides by t^k; the low k coefficients must vanish.
  UniPoly shifted_down(std::size_t k) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient of an exact division; throws std::logic_error if inexact.
  UniPoly exact_div(const UniPoly& divisor) const;

  FieldElement eval(const FieldElement& at) const;
  /// this(inner(t)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly monic() const;

  /// Exponents carrying nonzero coefficients.
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldSpec field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Parses the term grammar: term := [coef '*'] 't' ['^' nat] | coef,
/// poly := term (('+'|'-') term)*. Whitespace is insignificant.
UniPoly parse_poly(std::string_view text, const FieldSpec& field);

}  // namespace branchlab
