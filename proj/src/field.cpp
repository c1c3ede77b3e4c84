// SPDX-License-Identifier: Apache-2.0

#include "branchlab/field.hpp"

#include <cctype>
#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, mpz_class& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::PrimeRequired, "GF(" + std::to_string(p) + "): not a prime");
  return {Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic) + ")";
}

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view digits = trim(text.substr(3, text.size() - 4));
    mpz_class p;
    if (!digits.empty() && digits[0] != '-' && digits[0] != '+' && parse_integer(digits, p)) {
      if (p > mpz_class("9223372036854775807"))
        throw Error(ErrorCode::FieldSyntax, "field characteristic too large: " + std::string(text));
      return FieldSpec::prime(p.get_ui());
    }
  }
  throw Error(ErrorCode::FieldSyntax, "unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

FieldElement::FieldElement(const FieldSpec& field) : field_(field) {
  if (field_.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint64_t{0};
}

FieldElement::FieldElement(const FieldSpec& field, long long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    long long p = static_cast<long long>(field_.characteristic);
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
  if (den == 0) throw Error(ErrorCode::FieldSyntax, "zero denominator in field literal");
  if (field_.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint64_t p = field_.characteristic;
    std::uint64_t d = reduce_mpz(den, p);
    if (d == 0)
      throw Error(ErrorCode::FieldSyntax, "denominator vanishes in " + field_.to_string());
    value_ = mulmod(reduce_mpz(num, p), powmod(d, p - 2, p), p);
  }
}

const mpq_class& FieldElement::rational() const { return std::get<mpq_class>(value_); }
std::uint64_t FieldElement::residue() const { return std::get<std::uint64_t>(value_); }

bool FieldElement::is_zero() const {
  return field_.is_rational() ? rational() == 0 : residue() == 0;
}

bool FieldElement::is_one() const {
  return field_.is_rational() ? rational() == 1 : residue() == 1;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::FieldMismatch,
                "mixing elements of " + field_.to_string() + " and " + o.field_.to_string());
}

FieldElement FieldElement::operator-() const {
  FieldElement r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(-rational());
  } else {
    std::uint64_t v = residue();
    r.value_ = v == 0 ? 0 : field_.characteristic - v;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    std::uint64_t p = field_.characteristic;
    std::uint64_t s = residue() + o.residue();
    if (s >= p || s < residue()) s -= p;
    value_ = s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) *= o.rational();
  else
    value_ = mulmod(residue(), o.residue(), field_.characteristic);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  FieldElement r(field_);
  if (field_.is_rational())
    r.value_ = mpq_class(1 / rational());
  else
    r.value_ = powmod(residue(), field_.characteristic - 2, field_.characteristic);
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result(field_, 1);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational() == b.rational() : a.residue() == b.residue();
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

FieldElement parse_field_literal(std::string_view text, const FieldSpec& field) {
  text = trim(text);
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num))
      throw Error(ErrorCode::FieldSyntax, "malformed field literal '" + std::string(text) + "'");
  } else {
    std::string_view d = trim(text.substr(slash + 1));
    if (!parse_integer(text.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den))
      throw Error(ErrorCode::FieldSyntax, "malformed field literal '" + std::string(text) + "'");
  }
  return FieldElement(field, num, den);
}

}  // namespace branchlab
