// SPDX-License-Identifier: Apache-2.0

#include "branchlab/extnat.hpp"

#include <numeric>
#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

std::int64_t ExtNat::value() const {
  if (!value_) throw std::logic_error("ExtNat::value() on infinity");
  return *value_;
}

std::string ExtNat::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.is_inf() || b.is_inf()) return ExtNat::inf();
  return ExtNat(*a.value_ + *b.value_);
}

ExtNat operator*(const ExtNat& a, const ExtNat& b) {
  if (a.is_inf() || b.is_inf()) {
    if ((a.is_finite() && a.value() == 0) || (b.is_finite() && b.value() == 0))
      throw std::logic_error("ExtNat: 0 * inf is undefined");
    return ExtNat::inf();
  }
  return ExtNat(*a.value_ * *b.value_);
}

ExtNat gcd_ext(const ExtNat& a, const ExtNat& b) {
  if (a.is_inf()) return b;
  if (b.is_inf()) return a;
  return ExtNat(std::gcd(a.value(), b.value()));
}

ExtNat parse_extnat(const std::string& text) {
  if (text == "inf") return ExtNat::inf();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < 0)
    throw Error(ErrorCode::InputFormat, "expected a natural number or 'inf', got '" + text + "'");
  return ExtNat(v);
}

}  // namespace branchlab
