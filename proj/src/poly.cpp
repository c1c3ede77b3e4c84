// SPDX-License-Identifier: Apache-2.0

#include "branchlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

UniPoly::UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient outside polynomial field");
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return monomial(c, 0); }

UniPoly UniPoly::monomial(const FieldElement& c, std::size_t exponent) {
  UniPoly p(c.field());
  if (c.is_zero()) return p;
  p.coeffs_.assign(exponent + 1, FieldElement(c.field()));
  p.coeffs_[exponent] = c;
  return p;
}

UniPoly UniPoly::from_terms(const FieldSpec& field, const std::map<std::size_t, long long>& terms) {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : terms) {
    if (c.size() <= e) c.resize(e + 1, FieldElement(field));
    c[e] += FieldElement(field, v);
  }
  return UniPoly(field, std::move(c));
}

ExtNat UniPoly::ord() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return ExtNat(static_cast<std::int64_t>(i));
  return ExtNat::inf();
}

FieldElement UniPoly::coeff(std::size_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : FieldElement(field_);
}

FieldElement UniPoly::leading() const {
  return coeffs_.empty() ? FieldElement(field_) : coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  UniPoly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const UniPoly& s = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) r.coeffs_[i] += s.coeffs_[i];
  r.normalize();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  UniPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  UniPoly r(field_);
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
  r.normalize();
  return r;
}

UniPoly UniPoly::pow(std::size_t e) const {
  UniPoly result = constant(FieldElement(field_, 1));
  UniPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  UniPoly r(field_);
  r.coeffs_.assign(k, FieldElement(field_));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

UniPoly UniPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i)
    if (!coeffs_[i].is_zero()) throw std::logic_error("shifted_down: nonzero low coefficient");
  UniPoly r(field_);
  if (k < coeffs_.size()) r.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (divisor.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  UniPoly rem = *this;
  UniPoly quo(field_);
  if (rem.degree() < divisor.degree()) return {quo, rem};
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const FieldElement lead_inv = divisor.coeffs_.back().inverse();
  quo.coeffs_.assign(rem.coeffs_.size() - dd, FieldElement(field_));
  for (std::size_t k = rem.coeffs_.size(); k-- > dd;) {
    if (rem.coeffs_[k].is_zero()) continue;
    FieldElement q = rem.coeffs_[k] * lead_inv;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[k - dd + j] -= q * divisor.coeffs_[j];
    quo.coeffs_[k - dd] = q;
  }
  quo.normalize();
  rem.normalize();
  return {quo, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

FieldElement UniPoly::eval(const FieldElement& at) const {
  FieldElement acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::vector<std::size_t> UniPoly::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) s.push_back(i);
  return s;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

UniPoly euclid_gcd(UniPoly x, UniPoly y) {
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

using ZPoly = std::vector<mpz_class>;

void strip(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = ::gcd(g, c);
  if (g > 1)
    for (auto& c : a) c /= g;
}

// Integer multiple of a with content 1.
ZPoly integer_primitive(const UniPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) l = ::lcm(l, mpz_class(c.rational().get_den()));
  ZPoly z;
  for (const auto& c : a.coeffs()) z.push_back(mpz_class(c.rational().get_num() * (l / c.rational().get_den())));
  make_primitive(z);
  return z;
}

// Remainder of lc(b)^k * a modulo b, made primitive.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpz_class la = a.back(), lb = b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    strip(a);
    make_primitive(a);
  }
  return a;
}

// Degree of gcd(a, b) mod p, or -2 when p divides a leading coefficient or a denominator.
long modular_gcd_degree(const UniPoly& a, const UniPoly& b, std::uint64_t p) {
  const FieldSpec fp = FieldSpec::prime(p);
  auto reduce = [&](const UniPoly& u) {
    std::vector<FieldElement> c;
    for (const auto& e : u.coeffs()) c.emplace_back(fp, mpz_class(e.rational().get_num()), mpz_class(e.rational().get_den()));
    return UniPoly(fp, std::move(c));
  };
  try {
    UniPoly ra = reduce(a), rb = reduce(b);
    if (ra.degree() != a.degree() || rb.degree() != b.degree()) return -2;
    return euclid_gcd(ra, rb).degree();
  } catch (const Error&) {
    return -2;
  }
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "gcd of polynomials over different fields");
  if (!a.field().is_rational() || a.is_zero() || b.is_zero()) return euclid_gcd(a, b);
  const FieldElement one(a.field(), 1);
  if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(one);
  // A unit gcd modulo a prime not dividing the leading coefficients certifies coprimality over Q.
  for (std::uint64_t p : {2305843009213693951ULL, 1000000007ULL}) {
    if (modular_gcd_degree(a, b, p) == 0) return UniPoly::constant(one);
  }
  ZPoly x = integer_primitive(a), y = integer_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = primitive_prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<FieldElement> c;
  for (const auto& z : x) c.emplace_back(a.field(), z, mpz_class(1));
  return UniPoly(a.field(), std::move(c)).monic();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const FieldSpec& field) : field_(field) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
        origin_.push_back(i);
      }
    origin_.push_back(text.size());
  }

  UniPoly parse() {
    if (src_.empty()) fail("empty polynomial");
    UniPoly acc(field_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = src_[pos_++] == '-';
    while (true) {
      UniPoly term = parse_term();
      acc = negate ? acc - term : acc + term;
      if (pos_ == src_.size()) break;
      char op = src_[pos_++];
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negate = op == '-';
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::PolySyntax,
                "malformed polynomial at column " + std::to_string(origin_[pos_] + 1) + ": " + why,
                origin_[pos_] + 1);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  UniPoly parse_term() {
    FieldElement coef(field_, 1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        lit += "/" + den;
      }
      coef = parse_field_literal(lit, field_);
      if (peek() != '*') return UniPoly::constant(coef);
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    if (peek() != 't') fail("expected a coefficient or 't'");
    ++pos_;
    std::size_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      std::string e = digits();
      if (e.empty()) fail("missing exponent");
      if (e.size() > 6) fail("exponent too large");
      exponent = std::stoul(e);
    }
    return UniPoly::monomial(coef, exponent);
  }

  FieldSpec field_;
  std::string src_;
  std::vector<std::size_t> origin_;  // position of each kept character in the input
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_poly(std::string_view text, const FieldSpec& field) { return PolyParser(text, field).parse(); }

}  // namespace branchlab
