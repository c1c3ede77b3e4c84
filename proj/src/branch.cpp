// SPDX-License-Identifier: Apache-2.0

#include "branchlab/branch.hpp"

#include <cctype>
#include <numeric>

#include "branchlab/error.hpp"

namespace branchlab {

Branch Branch::swapped() const { return Branch(y_, x_); }

std::string Branch::to_string() const { return "(" + x_.to_string() + ", " + y_.to_string() + ")"; }

Branch make_branch(const UniPoly& x, const UniPoly& y, const FieldSpec& field) {
  if (x.field() != field || y.field() != field)
    throw Error(ErrorCode::FieldMismatch, "parametrization is not over " + field.to_string());
  if (x.is_zero() && y.is_zero()) throw Error(ErrorCode::BothZero, "x(t) and y(t) are both zero");
  if (!x.coeff(0).is_zero()) throw Error(ErrorCode::NotThroughOrigin, "x(0) = " + x.coeff(0).to_string() + " is not 0");
  if (!y.coeff(0).is_zero()) throw Error(ErrorCode::NotThroughOrigin, "y(0) = " + y.coeff(0).to_string() + " is not 0");
  if (x.is_zero() || y.is_zero()) {
    const UniPoly& other = x.is_zero() ? y : x;
    if (other.ord() != ExtNat(1))
      throw Error(ErrorCode::NotPrimitive, "a coordinate axis needs its nonzero coordinate of order 1");
    return Branch(x, y);
  }
  std::size_t g = 0;
  for (const UniPoly* p : {&x, &y})
    for (std::size_t e : p->support()) g = std::gcd(g, e);
  if (g > 1)
    throw Error(ErrorCode::NotPrimitive, "all exponents are divisible by " + std::to_string(g));
  if (!is_locally_primitive(x, y))
    throw Error(ErrorCode::NotPrimitive, "parametrization factors through a series of order > 1");
  return Branch(x, y);
}

namespace {

class XYParser {
 public:
  XYParser(std::string_view text, const FieldSpec& field) : field_(field) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
        origin_.push_back(i);
      }
    origin_.push_back(text.size());
  }

  XYPoly parse() {
    XYPoly out{field_, {}};
    if (src_.empty()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = src_[pos_++] == '-';
    while (true) {
      XYPoly::Term t = parse_term();
      if (negate) t.coef = -t.coef;
      if (!t.coef.is_zero()) out.terms.push_back(std::move(t));
      if (pos_ == src_.size()) break;
      char op = src_[pos_++];
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negate = op == '-';
    }
    return out;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::PolySyntax, "malformed polynomial at column " + std::to_string(origin_[pos_] + 1) + ": " + why,
                origin_[pos_] + 1);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  XYPoly::Term parse_term() {
    XYPoly::Term t{0, 0, FieldElement(field_, 1)};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        lit += "/" + den;
      }
      t.coef = parse_field_literal(lit, field_);
      if (peek() != '*') return t;
      ++pos_;
    }
    while (true) {
      char var = peek();
      if (var != 'x' && var != 'y') fail("expected 'x' or 'y'");
      ++pos_;
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos_;
        std::string d = digits();
        if (d.empty()) fail("missing exponent");
        if (d.size() > 6) fail("exponent too large");
        e = static_cast<std::uint32_t>(std::stoul(d));
      }
      (var == 'x' ? t.x_exp : t.y_exp) += e;
      if (peek() != '*') return t;
      ++pos_;
    }
  }

  FieldSpec field_;
  std::string src_;
  std::vector<std::size_t> origin_;  // position of each kept character in the input
  std::size_t pos_ = 0;
};

}  // namespace

XYPoly parse_xy_poly(std::string_view text, const FieldSpec& field) { return XYParser(text, field).parse(); }

UniPoly substitute(const Branch& b, const XYPoly& g) {
  if (g.field != b.field()) throw Error(ErrorCode::FieldMismatch, "polynomial and branch over different fields");
  UniPoly acc(b.field());
  for (const auto& term : g.terms)
    acc = acc + (b.x().pow(term.x_exp) * b.y().pow(term.y_exp)).scaled(term.coef);
  return acc;
}

ExtNat branch_valuation(const Branch& b, const XYPoly& g) { return substitute(b, g).ord(); }

std::string to_string(RegularityClass::Kind kind) {
  switch (kind) {
    case RegularityClass::Kind::XRegular: return "x-regular";
    case RegularityClass::Kind::YRegular: return "y-regular";
    case RegularityClass::Kind::Tangent: return "tangent";
    case RegularityClass::Kind::UnitTimesX: return "unit-times-x";
    case RegularityClass::Kind::UnitTimesY: return "unit-times-y";
  }
  return "?";
}

RegularityClass regularity_class(const Branch& b) {
  const FieldSpec& f = b.field();
  RegularityClass r{RegularityClass::Kind::UnitTimesX, FieldElement(f), FieldElement(f), 1};
  if (b.x().is_zero()) return r;
  if (b.y().is_zero()) {
    r.kind = RegularityClass::Kind::UnitTimesY;
    return r;
  }
  const std::int64_t c1 = b.x().ord().value();
  const std::int64_t p1 = b.y().ord().value();
  r.multiplicity = std::min(c1, p1);
  if (c1 < p1) {
    r.kind = RegularityClass::Kind::YRegular;
  } else if (c1 > p1) {
    r.kind = RegularityClass::Kind::XRegular;
  } else {
    r.kind = RegularityClass::Kind::Tangent;
    const FieldElement omega = b.y().coeff(static_cast<std::size_t>(p1)) / b.x().coeff(static_cast<std::size_t>(c1));
    r.lambda = -omega;
    r.mu = FieldElement(f, 1);
  }
  return r;
}

}  // namespace branchlab
