// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace branchlab {

/// The ground field: Q, or GF(p) for a prime p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "Q" or "GF(p)". Throws PrimeRequired for composite p and
/// FieldSyntax for anything else.
FieldSpec parse_field(std::string_view text);

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with
/// positive denominator; prime field residues in [0, p).
class FieldElement {
 public:
  explicit FieldElement(const FieldSpec& field = FieldSpec::rationals());
  FieldElement(const FieldSpec& field, long long value);
  FieldElement(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical text: "a" or "a/b" over Q, the residue in [0, p) over GF(p).
  std::string to_string() const;

  /// The rational value; only valid over Q.
  const mpq_class& rational() const;
  /// The residue; only valid over GF(p).
  std::uint64_t residue() const;

 private:
  void require_same_field(const FieldElement& o) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// Parses an integer or "int/int" literal into the field. Throws FieldSyntax
/// on a zero denominator or when the denominator vanishes in GF(p).
FieldElement parse_field_literal(std::string_view text, const FieldSpec& field);

}  // namespace branchlab
