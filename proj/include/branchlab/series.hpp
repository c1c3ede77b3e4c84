// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "branchlab/extnat.hpp"
#include "branchlab/poly.hpp"

namespace branchlab {

/// An exact rational function in t viewed as a Laurent series:
/// t^shift * num / den with num(0) != 0, den(0) = 1 and gcd(num, den) = 1.
/// The zero series has num = 0, den = 1, shift = 0.
class RatSeries {
 public:
  explicit RatSeries(const FieldSpec& field = FieldSpec::rationals());
  explicit RatSeries(const UniPoly& p);
  /// num / den; den must be nonzero.
  RatSeries(const UniPoly& num, const UniPoly& den);

  static RatSeries constant(const FieldElement& c);

  const FieldSpec& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  /// Signed t-adic valuation of a nonzero series.
  std::int64_t valuation() const;
  const UniPoly& numerator_part() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  /// Numerator including the t^shift factor; requires shift >= 0.
  UniPoly numerator() const;
  /// True when the denominator is 1 and the shift is non-negative.
  bool is_polynomial() const;

  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator/(const RatSeries& a, const RatSeries& b);
  RatSeries operator-() const;
  RatSeries pow(std::uint64_t n) const;

  friend bool operator==(const RatSeries& a, const RatSeries& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  RatSeries(std::int64_t shift, UniPoly num, UniPoly den, bool coprime = false);
  void normalize(bool reduce);

  std::int64_t shift_ = 0;
  UniPoly num_;
  UniPoly den_;
};

/// t-adic order; inf for zero. Throws NotInValuationRing when negative.
ExtNat ord_t(const RatSeries& s);

/// Coefficient of t^e in the power-series expansion of s.
FieldElement coeff_at(const RatSeries& s, std::int64_t e);

enum class SeriesOp { Add, Sub, Mul, Div, Pow };

/// Dispatching form of the series arithmetic; `exponent` is used by Pow.
RatSeries series_arith(const RatSeries& a, const RatSeries& b, SeriesOp op, std::uint64_t exponent = 0);

}  // namespace branchlab
