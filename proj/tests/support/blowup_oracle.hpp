// SPDX-License-Identifier: Apache-2.0
// Reference computations by explicit quadratic transforms of a parametrization,
// over truncated power series. Independent of the Euclidean-chain code paths in the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "branchlab/branch.hpp"

namespace testsupport {

struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("truncated series ran out of precision") {}
};

/// sum coeffs[i] t^i + O(t^prec).
struct Trunc {
  std::vector<branchlab::FieldElement> coeffs;  // size == prec

  std::size_t prec() const { return coeffs.size(); }

  /// Order if some coefficient below the precision is nonzero.
  std::optional<std::size_t> order() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) return i;
    return std::nullopt;
  }
};

inline Trunc truncate(const branchlab::UniPoly& p, std::size_t prec) {
  Trunc s;
  for (std::size_t i = 0; i < prec; ++i) s.coeffs.push_back(p.coeff(i));
  return s;
}

/// a / b where ord b <= ord a; b must have a known order.
inline Trunc divide(const Trunc& a, const Trunc& b) {
  const auto kb = b.order();
  if (!kb) throw PrecisionExhausted();
  const std::size_t k = *kb;
  const std::size_t prec = std::min(a.prec(), b.prec());
  if (prec <= k) throw PrecisionExhausted();
  const std::size_t n = prec - k;
  for (std::size_t i = 0; i < k && i < a.prec(); ++i)
    if (!a.coeffs[i].is_zero()) throw std::logic_error("quotient has a pole");
  const branchlab::FieldElement inv = b.coeffs[k].inverse();
  Trunc q;
  for (std::size_t i = 0; i < n; ++i) {
    branchlab::FieldElement v = a.coeffs[i + k];
    for (std::size_t j = 1; j <= i; ++j) v -= b.coeffs[j + k] * q.coeffs[i - j];
    q.coeffs.push_back(v * inv);
  }
  return q;
}

struct Chart {
  Trunc u;
  Trunc v;
  // Exceptional divisor carried by the axis u = 0 (resp. v = 0), as a point id.
  std::optional<std::size_t> u_div;
  std::optional<std::size_t> v_div;
};

// Unknown orders lie beyond the precision; comparing two unknowns needs more precision.
inline bool order_le(const Trunc& a, const Trunc& b) {
  const auto oa = a.order(), ob = b.order();
  if (!oa && !ob) throw PrecisionExhausted();
  if (!oa) return false;
  if (!ob) return true;
  return *oa <= *ob;
}

inline std::int64_t chart_multiplicity(const Chart& ch) {
  const Trunc& low = order_le(ch.u, ch.v) ? ch.u : ch.v;
  return static_cast<std::int64_t>(*low.order());
}

// Slope of the tangent in the u-chart, or nullopt for the vertical direction.
inline std::optional<branchlab::FieldElement> direction(const Chart& ch) {
  if (order_le(ch.u, ch.v)) {
    const Trunc q = divide(ch.v, ch.u);
    if (q.prec() == 0) throw PrecisionExhausted();
    return q.coeffs[0];
  }
  return std::nullopt;
}

inline Chart blow_up(const Chart& ch, std::size_t id) {
  const auto dir = direction(ch);
  if (dir) {
    Trunc q = divide(ch.v, ch.u);
    q.coeffs[0] -= *dir;
    Trunc u = ch.u;
    u.coeffs.resize(std::min(u.prec(), q.prec()), branchlab::FieldElement(dir->field()));
    return {u, q, id, dir->is_zero() ? ch.v_div : std::nullopt};
  }
  Trunc q = divide(ch.u, ch.v);
  Trunc v = ch.v;
  v.coeffs.resize(std::min(v.prec(), q.prec()), branchlab::FieldElement(v.coeffs.front().field()));
  return {q, v, ch.u_div, id};
}

inline bool order_is_one(const Trunc& s) {
  const auto o = s.order();
  return o && *o == 1;
}

// A point must be blown up unless the total transform is already normal crossings there.
inline bool needs_blowup(const Chart& ch) {
  if (chart_multiplicity(ch) >= 2) return true;
  if (ch.u_div && ch.v_div) return true;
  if (ch.u_div && !order_is_one(ch.u)) return true;
  if (ch.v_div && !order_is_one(ch.v)) return true;
  return false;
}

inline Chart start_chart(const branchlab::Branch& b, std::size_t prec) {
  return {truncate(b.x(), prec), truncate(b.y(), prec), std::nullopt, std::nullopt};
}

struct OraclePoint {
  std::int64_t multiplicity;
  std::vector<std::size_t> prox;  // sorted
};

inline std::vector<OraclePoint> oracle_resolution(const branchlab::Branch& b) {
  for (std::size_t prec = 64;; prec *= 2) {
    try {
      Chart ch = start_chart(b, prec);
      std::vector<OraclePoint> pts;
      for (std::size_t id = 0;; ++id) {
        OraclePoint p{chart_multiplicity(ch), {}};
        for (const auto& d : {ch.u_div, ch.v_div})
          if (d) p.prox.push_back(*d);
        std::sort(p.prox.begin(), p.prox.end());
        const bool bad = needs_blowup(ch);
        if (id > 0 && !bad) break;
        pts.push_back(p);
        if (!bad) break;
        ch = blow_up(ch, id);
      }
      return pts;
    } catch (const PrecisionExhausted&) {
      if (prec > 8192) throw;
    }
  }
}

// Sum of products of multiplicities over the common infinitely near points;
// nullopt when the branches share more than `cap` points.
inline std::optional<std::int64_t> oracle_noether(const branchlab::Branch& a, const branchlab::Branch& b,
                                                  std::size_t cap = 200) {
  for (std::size_t prec = 64;; prec *= 2) {
    try {
      Chart ca = start_chart(a, prec), cb = start_chart(b, prec);
      std::int64_t sum = 0;
      for (std::size_t id = 0; id < cap; ++id) {
        sum += chart_multiplicity(ca) * chart_multiplicity(cb);
        const auto da = direction(ca), db = direction(cb);
        if (da.has_value() != db.has_value() || (da && !(*da == *db))) return sum;
        ca = blow_up(ca, id);
        cb = blow_up(cb, id);
      }
      return std::nullopt;
    } catch (const PrecisionExhausted&) {
      if (prec > 8192) throw;
    }
  }
}

}  // namespace testsupport
