// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <numeric>
#include <set>

#include "branchlab/error.hpp"
#include "branchlab/invariants.hpp"
#include "support/generators.hpp"

using namespace branchlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
using V = std::vector<std::int64_t>;

Branch B(const char* x, const char* y) { return make_branch(parse_poly(x, kQ), parse_poly(y, kQ), kQ); }

HnColumn col(long long p, long long c, long long a) { return {ExtNat(p), ExtNat(c), HnCoef::of(FieldElement(kQ, a))}; }
HnColumn last(long long p, long long c) { return {ExtNat(p), ExtNat(c), HnCoef::marker(kQ)}; }
HnTableau T(std::vector<HnColumn> cols) { return make_tableau(kQ, std::move(cols)); }

// Minimal generators of the numerical semigroup spanned by gens.
std::set<std::int64_t> minimal_generators(std::vector<std::int64_t> gens) {
  std::sort(gens.begin(), gens.end());
  std::set<std::int64_t> out;
  const std::int64_t top = gens.back();
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  reach[0] = true;
  for (std::int64_t g : gens) {
    if (reach[static_cast<std::size_t>(g)]) continue;
    out.insert(g);
    for (std::int64_t v = g; v <= top; ++v)
      if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = true;
  }
  return out;
}

// Semigroup generators of (t^n, y(t)) from the characteristic exponents of y.
std::set<std::int64_t> puiseux_semigroup(std::int64_t n, const UniPoly& y) {
  std::vector<std::int64_t> beta{n};
  std::int64_t e = n;
  for (std::size_t k : y.support()) {
    if (e == 1) break;
    const auto ki = static_cast<std::int64_t>(k);
    if (ki % e != 0) {
      beta.push_back(ki);
      e = std::gcd(e, ki);
    }
  }
  std::vector<std::int64_t> bar{n};
  if (beta.size() > 1) bar.push_back(beta[1]);
  std::int64_t e_prev = n, e_cur = std::gcd(n, beta.size() > 1 ? beta[1] : n);
  for (std::size_t k = 2; k < beta.size(); ++k) {
    const std::int64_t nk = e_prev / e_cur;
    bar.push_back(nk * bar[k - 1] + beta[k] - beta[k - 1]);
    e_prev = e_cur;
    e_cur = std::gcd(e_cur, beta[k]);
  }
  return std::set<std::int64_t>(bar.begin(), bar.end());
}

}  // namespace

TEST_CASE("characteristic index examples") {
  CHECK(characteristic_indices(T({last(3, 2)})) == std::vector<std::size_t>{1});
  CHECK(characteristic_indices(T({col(6, 4, 1), last(1, 2)})) == std::vector<std::size_t>{1, 2});
  CHECK(characteristic_indices(T({last(2, 1)})) == std::vector<std::size_t>{1});
}

TEST_CASE("characteristic data examples") {
  CharData cd = characteristic_data(hn_tableau(B("t^2", "t^3")));
  CHECK(cd.h == 1);
  CHECK(cd.d[0] == 2);
  CHECK(cd.q == V{3});
  CHECK(cd.d == V{2, 1});
  CHECK(cd.n == V{2});
  CHECK(cd.r == V{2, 3});

  cd = characteristic_data(hn_tableau(B("t^4", "t^6 + t^7")));
  CHECK(cd.q == V{6, 1});
  CHECK(cd.d == V{4, 2, 1});
  CHECK(cd.n == V{2, 2});
  CHECK(cd.r == V{4, 6, 13});

  cd = characteristic_data(hn_tableau(B("t", "t^2")));
  CHECK(cd.q == V{2});
  CHECK(cd.d == V{1, 1});
  CHECK(cd.n == V{1});
  CHECK(cd.r == V{1, 2});

  cd = characteristic_data(T({col(2, 2, 1), last(1, 2)}));
  CHECK(cd.h == 2);
  CHECK(cd.r == V{2, 2, 3});

  const HnTableau cut = hn_tableau(B("t^2", "t^3"), DepthPolicy::to_columns(2));
  CHECK_THROWS_AS(characteristic_data(cut), Error);
}

TEST_CASE("cusp family") {
  const std::vector<std::pair<int, int>> family = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 7}};
  for (auto [a, b] : family) {
    const Branch br = make_branch(UniPoly::monomial(FieldElement(kQ, 1), a), UniPoly::monomial(FieldElement(kQ, 1), b), kQ);
    const CharData cd = characteristic_data(hn_tableau(br));
    CHECK(cd.d[0] == a);
    CHECK(cd.q == V{b});
    CHECK(cd.r == V{a, b});
  }
}

TEST_CASE("invariants on random tableaux") {
  auto rng = testsupport::make_rng(31);
  for (int i = 0; i < 200; ++i) {
    const HnTableau t = testsupport::random_tableau(rng, kQ, 5, 12);
    const CharData cd = characteristic_data(t);
    REQUIRE(cd.indices.front() == 1);
    CHECK(cd.d.back() == 1);
    std::int64_t g = cd.d[0];
    for (auto q : cd.q) g = std::gcd(g, q);
    CHECK(g == 1);
    for (std::size_t j = 1; j < cd.d.size(); ++j) CHECK(cd.d[j] == std::gcd(cd.d[j - 1], cd.q[j - 1]));
    if (cd.h >= 2) {
      CHECK(cd.d[0] >= cd.d[1]);
      for (std::size_t j = 1; j + 1 < cd.d.size(); ++j) CHECK(cd.d[j] > cd.d[j + 1]);
      if (cd.d[0] == cd.d[1]) CHECK((cd.q[0] % cd.d[0] == 0 || cd.d[0] % cd.q[0] == 0));
    }
    for (std::size_t j = 0; j < cd.h; ++j) CHECK(cd.n[j] * cd.d[j + 1] == cd.d[j]);
    CHECK(cd.r[0] == cd.d[0]);
    CHECK(cd.r[1] == cd.q[0]);
    for (std::size_t j = 2; j <= cd.h; ++j) CHECK(cd.r[j] == cd.n[j - 2] * cd.r[j - 1] + cd.q[j - 1]);
  }
}

TEST_CASE("semigroup matches the classical characteristic exponents") {
  auto rng = testsupport::make_rng(32);
  int checked = 0;
  while (checked < 100) {
    const std::int64_t n = testsupport::uniform(rng, 2, 8);
    const UniPoly y = testsupport::random_poly(rng, kQ, static_cast<std::size_t>(n + 1), 30);
    std::int64_t g = n;
    for (auto e : y.support()) g = std::gcd(g, static_cast<std::int64_t>(e));
    if (g != 1) continue;
    const Branch b = make_branch(UniPoly::monomial(FieldElement(kQ, 1), static_cast<std::size_t>(n)), y, kQ);
    const CharData cd = characteristic_data(hn_tableau(b));
    CHECK(minimal_generators(cd.r) == puiseux_semigroup(n, y));
    ++checked;
  }
}
