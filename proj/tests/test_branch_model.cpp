// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "branchlab/branch.hpp"
#include "branchlab/error.hpp"
#include "support/random.hpp"

using namespace branchlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Branch B(const char* x, const char* y, const FieldSpec& f = kQ) { return make_branch(parse_poly(x, f), parse_poly(y, f), f); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InputFormat;
}

}  // namespace

TEST_CASE("branch construction") {
  CHECK_NOTHROW(B("t^2", "t^3"));
  CHECK(code_of([] { B("t^2", "t^4"); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([] { B("t^2 + 1", "t^3"); }) == ErrorCode::NotThroughOrigin);
  CHECK(code_of([] { B("0", "0"); }) == ErrorCode::BothZero);
  CHECK_NOTHROW(B("0", "t + t^2"));
  CHECK(code_of([] { B("0", "t^2"); }) == ErrorCode::NotPrimitive);
  // Composites through u = t^2 + t^3 have coprime exponents but are 2:1 near the origin.
  CHECK(code_of([] { B("t^2 + t^3", "t^4 + 2*t^5 + t^6"); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([] { B("t^2 + t^3 + t^7", "t^2 + t^3 + t^7", FieldSpec::prime(2)); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([] { B("t^2 + t^3", "t^4 + 2*t^5 + 2*t^6 + 3*t^7 + 3*t^8 + t^9"); }) == ErrorCode::NotPrimitive);
  CHECK_NOTHROW(B("t^2 + t^3", "t^4 + 2*t^5 + t^7"));
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK_NOTHROW(B("t^5", "t^5 + t^6", f5));
}

TEST_CASE("valuation on a branch") {
  const Branch cusp = B("t^2", "t^3");
  CHECK(branch_valuation(cusp, parse_xy_poly("y", kQ)) == ExtNat(3));
  CHECK(branch_valuation(cusp, parse_xy_poly("y^2 - x^3", kQ)).is_inf());
  CHECK(branch_valuation(B("t^4", "t^6 + t^7"), parse_xy_poly("y^2 - x^3", kQ)) == ExtNat(13));
  CHECK(branch_valuation(cusp, parse_xy_poly("2*x*y + x^2*y^0", kQ)) == ExtNat(4));
}

TEST_CASE("regularity classes") {
  auto r = regularity_class(B("t^2", "t^3"));
  CHECK(r.kind == RegularityClass::Kind::YRegular);
  CHECK(r.multiplicity == 2);
  r = regularity_class(B("t^3", "t^2"));
  CHECK(r.kind == RegularityClass::Kind::XRegular);
  CHECK(r.multiplicity == 2);
  r = regularity_class(B("t", "2*t + t^2"));
  CHECK(r.kind == RegularityClass::Kind::Tangent);
  CHECK(r.lambda == FieldElement(kQ, -2));
  CHECK(r.mu == FieldElement(kQ, 1));
  CHECK(r.multiplicity == 1);
  CHECK(regularity_class(B("0", "t")).kind == RegularityClass::Kind::UnitTimesX);
  CHECK(regularity_class(B("t", "0")).kind == RegularityClass::Kind::UnitTimesY);
}

namespace {

Branch random_branch(std::mt19937_64& rng, const FieldSpec& f) {
  for (;;) {
    try {
      return make_branch(testsupport::random_poly(rng, f, 1, 6), testsupport::random_poly(rng, f, 1, 6), f);
    } catch (const Error&) {
    }
  }
}

XYPoly random_xy(std::mt19937_64& rng, const FieldSpec& f) {
  XYPoly g{f, {}};
  const int terms = static_cast<int>(testsupport::uniform(rng, 1, 4));
  for (int k = 0; k < terms; ++k)
    g.terms.push_back({static_cast<std::uint32_t>(testsupport::uniform(rng, 0, 3)),
                       static_cast<std::uint32_t>(testsupport::uniform(rng, 0, 3)),
                       testsupport::random_element(rng, f, true)});
  return g;
}

XYPoly product(const XYPoly& a, const XYPoly& b) {
  XYPoly g{a.field, {}};
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) g.terms.push_back({s.x_exp + t.x_exp, s.y_exp + t.y_exp, s.coef * t.coef});
  return g;
}

}  // namespace

TEST_CASE("multiplicity equals the order of a generic line") {
  auto rng = testsupport::make_rng(11);
  for (const FieldSpec& f : {kQ, FieldSpec::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const Branch b = random_branch(rng, f);
      const auto r = regularity_class(b);
      const std::int64_t expected = std::min(b.x().ord().value(), b.y().ord().value());
      CHECK(r.multiplicity == expected);
      int drops = 0;
      for (long long lam = 1; lam <= 5; ++lam) {
        XYPoly line{f, {{1, 0, FieldElement(f, lam)}, {0, 1, FieldElement(f, 1)}}};
        const ExtNat v = branch_valuation(b, line);
        CHECK(v >= ExtNat(expected));
        if (v != ExtNat(expected)) ++drops;
      }
      CHECK(drops <= 1);
    }
  }
}

TEST_CASE("valuation is additive on products") {
  auto rng = testsupport::make_rng(12);
  for (const FieldSpec& f : {kQ, FieldSpec::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const Branch b = random_branch(rng, f);
      const XYPoly g = random_xy(rng, f), h = random_xy(rng, f);
      CHECK(branch_valuation(b, product(g, h)) == branch_valuation(b, g) + branch_valuation(b, h));
    }
  }
}

TEST_CASE("swapping coordinates swaps regularity") {
  auto rng = testsupport::make_rng(13);
  for (int i = 0; i < 60; ++i) {
    const Branch b = random_branch(rng, kQ);
    const auto r = regularity_class(b), s = regularity_class(b.swapped());
    CHECK(r.multiplicity == s.multiplicity);
    using K = RegularityClass::Kind;
    if (r.kind == K::XRegular) CHECK(s.kind == K::YRegular);
    if (r.kind == K::YRegular) CHECK(s.kind == K::XRegular);
    if (r.kind == K::Tangent) {
      CHECK(s.kind == K::Tangent);
      CHECK((r.lambda * s.lambda).is_one());
    }
  }
}
