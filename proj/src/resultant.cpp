// SPDX-License-Identifier: Apache-2.0

#include "branchlab/resultant.hpp"

#include <algorithm>
#include <utility>

#include "branchlab/error.hpp"

namespace branchlab {

BiPoly::BiPoly(const FieldSpec& field, std::vector<UniPoly> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "bivariate coefficient over a different field");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::in_s(const UniPoly& u) {
  std::vector<UniPoly> c;
  for (const auto& a : u.coeffs()) c.push_back(UniPoly::constant(a));
  return BiPoly(u.field(), std::move(c));
}

BiPoly BiPoly::in_t(const UniPoly& u) { return BiPoly(u.field(), {u}); }

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "bivariate polynomials over different fields");
  std::vector<UniPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()), UniPoly(a.field_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = c[k] + a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] - b.coeffs_[k];
  return BiPoly(a.field_, std::move(c));
}

namespace {

// Fraction-free Gaussian elimination over K[t]; every division is exact.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m, const FieldSpec& field) {
  const std::size_t n = m.size();
  UniPoly prev = UniPoly::constant(FieldElement(field, 1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return UniPoly(field);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = UniPoly(field);
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

UniPoly resultant(const BiPoly& p, const BiPoly& q) {
  if (p.field() != q.field()) throw Error(ErrorCode::FieldMismatch, "resultant operands over different fields");
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ResultantUndefined, "resultant with a zero operand");
  const long dp = p.degree_s();
  const long dq = q.degree_s();
  if (dp == 0 && dq == 0) throw Error(ErrorCode::ResultantUndefined, "both operands have degree 0 in s");
  const FieldSpec& f = p.field();
  if (dp == 0) return p.coeffs()[0].pow(static_cast<std::size_t>(dq));
  if (dq == 0) return q.coeffs()[0].pow(static_cast<std::size_t>(dp));

  const auto n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n, UniPoly(f)));
  // Row r of p holds its coefficients from s^dp down, starting at column r.
  for (long r = 0; r < dq; ++r)
    for (long k = 0; k <= dp; ++k)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = p.coeffs()[static_cast<std::size_t>(k)];
  for (long r = 0; r < dp; ++r)
    for (long k = 0; k <= dq; ++k)
      m[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - k)] = q.coeffs()[static_cast<std::size_t>(k)];
  return bareiss_det(std::move(m), f);
}

}  // namespace branchlab
