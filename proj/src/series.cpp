// SPDX-License-Identifier: Apache-2.0

#include "branchlab/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

namespace {

UniPoly one(const FieldSpec& f) { return UniPoly::constant(FieldElement(f, 1)); }

void cancel_common(UniPoly& a, UniPoly& b) {
  if (a.degree() <= 0 || b.degree() <= 0) return;
  UniPoly g = gcd(a, b);
  if (g.degree() > 0) {
    a = a.exact_div(g);
    b = b.exact_div(g);
  }
}

}  // namespace

RatSeries::RatSeries(const FieldSpec& field) : num_(field), den_(one(field)) {}

RatSeries::RatSeries(const UniPoly& p) : num_(p), den_(one(p.field())) { normalize(false); }

RatSeries::RatSeries(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational series with zero denominator");
  if (num.field() != den.field()) throw Error(ErrorCode::FieldMismatch, "series parts over different fields");
  const std::int64_t dshift = den_.ord().value();
  den_ = den_.shifted_down(static_cast<std::size_t>(dshift));
  shift_ = -dshift;
  normalize(true);
}

RatSeries::RatSeries(std::int64_t shift, UniPoly num, UniPoly den, bool coprime)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize(!coprime);
}

RatSeries RatSeries::constant(const FieldElement& c) { return RatSeries(UniPoly::constant(c)); }

void RatSeries::normalize(bool reduce) {
  const FieldSpec& f = num_.field();
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = one(f);
    return;
  }
  const std::int64_t k = num_.ord().value();
  if (k > 0) {
    num_ = num_.shifted_down(static_cast<std::size_t>(k));
    shift_ += k;
  }
  if (reduce && den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  // den(0) != 0 holds by construction; scale it to 1.
  FieldElement d0 = den_.coeff(0);
  if (!d0.is_one()) {
    FieldElement inv = d0.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::int64_t RatSeries::valuation() const {
  if (is_zero()) throw std::logic_error("valuation of the zero series");
  return shift_;
}

UniPoly RatSeries::numerator() const {
  if (shift_ < 0) throw Error(ErrorCode::NotInValuationRing, "series has a pole at t = 0");
  return num_.shifted_up(static_cast<std::size_t>(shift_));
}

bool RatSeries::is_polynomial() const { return shift_ >= 0 && den_.degree() == 0; }

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const RatSeries& lo = a.shift_ <= b.shift_ ? a : b;
  const RatSeries& hi = a.shift_ <= b.shift_ ? b : a;
  const auto gap = static_cast<std::size_t>(hi.shift_ - lo.shift_);
  UniPoly num = lo.num_ * hi.den_ + (hi.num_ * lo.den_).shifted_up(gap);
  return RatSeries(lo.shift_, std::move(num), lo.den_ * hi.den_);
}

RatSeries RatSeries::operator-() const {
  RatSeries r = *this;
  r.num_ = -num_;
  return r;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) { return a + (-b); }

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  if (a.is_zero() || b.is_zero()) return RatSeries(a.field());
  // Both operands are in lowest terms, so only the cross pairs can share factors.
  UniPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  cancel_common(an, bd);
  cancel_common(bn, ad);
  return RatSeries(a.shift_ + b.shift_, an * bn, ad * bd, true);
}

RatSeries operator/(const RatSeries& a, const RatSeries& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "series division by zero");
  if (a.is_zero()) return RatSeries(a.field());
  UniPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  cancel_common(an, bn);
  cancel_common(bd, ad);
  return RatSeries(a.shift_ - b.shift_, an * bd, ad * bn, true);
}

RatSeries RatSeries::pow(std::uint64_t n) const {
  if (is_zero()) return n == 0 ? constant(FieldElement(field(), 1)) : *this;
  return RatSeries(shift_ * static_cast<std::int64_t>(n), num_.pow(n), den_.pow(n), true);
}

std::string RatSeries::to_string() const {
  UniPoly n = shift_ >= 0 ? num_.shifted_up(static_cast<std::size_t>(shift_)) : num_;
  UniPoly d = shift_ >= 0 ? den_ : den_.shifted_up(static_cast<std::size_t>(-shift_));
  if (d.degree() == 0) return n.to_string();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

ExtNat ord_t(const RatSeries& s) {
  if (s.is_zero()) return ExtNat::inf();
  if (s.valuation() < 0)
    throw Error(ErrorCode::NotInValuationRing,
                "negative valuation " + std::to_string(s.valuation()) + " (series is not in the valuation ring)");
  return ExtNat(s.valuation());
}

FieldElement coeff_at(const RatSeries& s, std::int64_t e) {
  const FieldSpec& f = s.field();
  if (s.is_zero()) return FieldElement(f);
  const std::int64_t k = e - s.valuation();
  if (k < 0) return FieldElement(f);
  // Power series division num / den with den(0) = 1.
  const UniPoly& num = s.numerator_part();
  const UniPoly& den = s.denominator();
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(k) + 1);
  for (std::int64_t i = 0; i <= k; ++i) {
    FieldElement v = num.coeff(static_cast<std::size_t>(i));
    const std::int64_t top = std::min<std::int64_t>(i, den.degree());
    for (std::int64_t j = 1; j <= top; ++j)
      v -= den.coeff(static_cast<std::size_t>(j)) * c[static_cast<std::size_t>(i - j)];
    c.push_back(std::move(v));
  }
  return c.back();
}

RatSeries series_arith(const RatSeries& a, const RatSeries& b, SeriesOp op, std::uint64_t exponent) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Sub: return a - b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::Div: return a / b;
    case SeriesOp::Pow: return a.pow(exponent);
  }
  throw std::logic_error("unknown series operation");
}

}  // namespace branchlab
