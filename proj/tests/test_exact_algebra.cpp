// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "branchlab/error.hpp"
#include "branchlab/resultant.hpp"
#include "branchlab/series.hpp"
#include "support/random.hpp"

using namespace branchlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF101 = FieldSpec::prime(101);

UniPoly P(const char* text, const FieldSpec& f = kQ) { return parse_poly(text, f); }
RatSeries S(const char* text, const FieldSpec& f = kQ) { return RatSeries(P(text, f)); }

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

TEST_CASE("field parsing") {
  CHECK(parse_field("Q") == kQ);
  CHECK(parse_field("GF(7)") == FieldSpec::prime(7));
  CHECK(code_of([] { parse_field("GF(6)"); }) == ErrorCode::PrimeRequired);
  CHECK(code_of([] { parse_field("R"); }) == ErrorCode::FieldSyntax);
  CHECK(code_of([] { parse_field("GF(x)"); }) == ErrorCode::FieldSyntax);
}

TEST_CASE("prime field arithmetic wraps") {
  const FieldSpec f = FieldSpec::prime(7);
  FieldElement a(f, 5), b(f, 4);
  CHECK((a + b) == FieldElement(f, 2));
  CHECK((a * b) == FieldElement(f, 6));
  CHECK((a * a.inverse()).is_one());
  CHECK(FieldElement(f, -1) == FieldElement(f, 6));
  CHECK(code_of([&] { (void)(a / FieldElement(f, 0)); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)(a + FieldElement(kQ, 1)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("rationals stay in lowest terms") {
  FieldElement h = parse_field_literal("2/4", kQ);
  CHECK(h.to_string() == "1/2");
  CHECK(parse_field_literal("-3/6", kQ).to_string() == "-1/2");
  CHECK(code_of([] { parse_field_literal("1/0", kQ); }) == ErrorCode::FieldSyntax);
  CHECK(code_of([] { parse_field_literal("1/7", FieldSpec::prime(7)); }) == ErrorCode::FieldSyntax);
}

TEST_CASE("polynomial parsing") {
  UniPoly p = P("t^3 + 2*t^5");
  CHECK(p.degree() == 5);
  CHECK(p.coeff(3) == FieldElement(kQ, 1));
  CHECK(p.coeff(5) == FieldElement(kQ, 2));
  CHECK(p.coeff(4).is_zero());
  CHECK(P("3*t", FieldSpec::prime(3)).is_zero());
  CHECK(P("t^2 - t^2").is_zero());
  CHECK(P(" - t + 1/2 * t ^ 2 ").to_string() == "-t + 1/2*t^2");
  CHECK(P("7").degree() == 0);
  CHECK(code_of([] { P("t^"); }) == ErrorCode::PolySyntax);
  CHECK(code_of([] { P("2**t"); }) == ErrorCode::PolySyntax);
  CHECK(code_of([] { P("t + "); }) == ErrorCode::PolySyntax);
  CHECK(code_of([] { P("1/0*t"); }) == ErrorCode::FieldSyntax);
}

TEST_CASE("polynomial round trip through text") {
  auto rng = testsupport::make_rng(1);
  for (const FieldSpec& f : {kQ, kF101}) {
    for (int i = 0; i < 50; ++i) {
      UniPoly p = testsupport::random_poly(rng, f, 0, 6);
      CHECK(parse_poly(p.to_string(), f) == p);
    }
  }
}

TEST_CASE("ord_t examples") {
  CHECK(ord_t(S("t^3 + 2*t^5")) == ExtNat(3));
  CHECK(ord_t(RatSeries(kQ)).is_inf());
  RatSeries q(P("t^2 + t^3"), P("1 + 2*t + t^2"));
  CHECK(ord_t(q) == ExtNat(2));
  CHECK(code_of([] { ord_t(S("t") / S("t^2")); }) == ErrorCode::NotInValuationRing);
}

TEST_CASE("series arithmetic examples") {
  CHECK(series_arith(S("t^3"), S("t^2"), SeriesOp::Div) == S("t"));
  RatSeries r = series_arith(S("t^2"), S("t + t^2").pow(2), SeriesOp::Div);
  CHECK(r == RatSeries(P("1"), P("1 + 2*t + t^2")));
  CHECK(ord_t(r) == ExtNat(0));
  CHECK(series_arith(S("t + t^2"), S("0"), SeriesOp::Pow, 2) == S("t^2 + 2*t^3 + t^4"));
  CHECK(code_of([] { (void)(S("t") / S("0")); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("coefficient extraction") {
  RatSeries g(P("1"), P("1 + 2*t + t^2"));
  CHECK(coeff_at(g, 0) == FieldElement(kQ, 1));
  CHECK(coeff_at(g, 1) == FieldElement(kQ, -2));
  CHECK(coeff_at(g, 2) == FieldElement(kQ, 3));
  CHECK(coeff_at(S("t^3"), 3) == FieldElement(kQ, 1));
  CHECK(coeff_at(S("t^3"), 2).is_zero());
}

TEST_CASE("valuation properties on random series") {
  auto rng = testsupport::make_rng(2);
  for (const FieldSpec& f : {kQ, kF101}) {
    for (int i = 0; i < 100; ++i) {
      UniPoly den = testsupport::random_poly(rng, f, 0, 3);
      if (den.coeff(0).is_zero()) den = den + UniPoly::constant(FieldElement(f, 1));
      RatSeries a(testsupport::random_poly(rng, f, 0, 5), den);
      RatSeries b(testsupport::random_poly(rng, f, 0, 5));
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(ord_t(a * b) == ord_t(a) + ord_t(b));
      const ExtNat sum = ord_t(a + b);
      CHECK(sum >= std::min(ord_t(a), ord_t(b)));
      if (ord_t(a) != ord_t(b)) CHECK(sum == std::min(ord_t(a), ord_t(b)));
      CHECK_FALSE(coeff_at(a, ord_t(a).value()).is_zero());
      CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("frobenius in prime fields") {
  auto rng = testsupport::make_rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 1000003ULL}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int i = 0; i < 50; ++i) {
      FieldElement a = testsupport::random_element(rng, f);
      FieldElement b = testsupport::random_element(rng, f);
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("resultant examples") {
  const BiPoly s_minus_t = BiPoly::in_s(P("t")) - BiPoly::in_t(P("t"));
  const BiPoly s2_minus_t2 = BiPoly::in_s(P("t^2")) - BiPoly::in_t(P("t^2"));
  CHECK(resultant(s_minus_t, s2_minus_t2).is_zero());

  const BiPoly s2_minus_t = BiPoly::in_s(P("t^2")) - BiPoly::in_t(P("t"));
  const BiPoly s = BiPoly::in_s(P("t"));
  UniPoly r = resultant(s2_minus_t, s);
  CHECK(r.degree() == 1);
  CHECK(r.ord() == ExtNat(1));

  // Parabola (s, s^2) against the cusp (t^2, t^3).
  UniPoly rc = resultant(BiPoly::in_s(P("t")) - BiPoly::in_t(P("t^2")), BiPoly::in_s(P("t^2")) - BiPoly::in_t(P("t^3")));
  CHECK(rc.ord() == ExtNat(3));

  CHECK(code_of([] { resultant(BiPoly::in_t(P("t")), BiPoly::in_t(P("t^2"))); }) == ErrorCode::ResultantUndefined);
}

TEST_CASE("resultant swaps up to sign") {
  auto rng = testsupport::make_rng(4);
  for (const FieldSpec& f : {kQ, kF101}) {
    for (int i = 0; i < 30; ++i) {
      std::vector<UniPoly> pc, qc;
      for (int k = 0; k < 3; ++k) pc.push_back(testsupport::random_poly(rng, f, 0, 2));
      for (int k = 0; k < 4; ++k) qc.push_back(testsupport::random_poly(rng, f, 0, 2));
      BiPoly p(f, pc), q(f, qc);
      UniPoly a = resultant(p, q), b = resultant(q, p);
      const long sign = (p.degree_s() * q.degree_s()) % 2 == 0 ? 1 : -1;
      CHECK(a == (sign == 1 ? b : -b));
    }
  }
}

TEST_CASE("gcd agrees with plain euclid") {
  auto rng = testsupport::make_rng(5);
  auto euclid = [](UniPoly x, UniPoly y) {
    while (!y.is_zero()) {
      UniPoly r = x.divmod(y).second;
      x = y;
      y = r;
    }
    return x.monic();
  };
  for (const FieldSpec& f : {kQ, kF101}) {
    for (int i = 0; i < 60; ++i) {
      const UniPoly g = testsupport::random_poly(rng, f, 0, 3);
      const UniPoly a = testsupport::random_poly(rng, f, 0, 5) * g;
      const UniPoly b = testsupport::random_poly(rng, f, 0, 5) * g;
      const UniPoly d = gcd(a, b);
      CHECK(d == euclid(a, b));
      CHECK(a.divmod(d).second.is_zero());
      CHECK(b.divmod(d).second.is_zero());
      CHECK(d.divmod(g.monic()).second.is_zero());
    }
  }
}
