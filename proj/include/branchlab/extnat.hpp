// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace branchlab {

/// A natural number or infinity. Used for valuations, tableau entries and
/// intersection numbers. Products follow inf * x = inf for x >= 1.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtNat inf() {
    ExtNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_inf() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  std::int64_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_inf() || b.is_inf()) {
      return a.is_inf() == b.is_inf() ? std::strong_ordering::equal
             : a.is_inf()             ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
  }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b);

 private:
  std::optional<std::int64_t> value_ = std::int64_t{0};
};

/// gcd with the convention gcd(x, inf) = x.
ExtNat gcd_ext(const ExtNat& a, const ExtNat& b);

ExtNat parse_extnat(const std::string& text);

}  // namespace branchlab
