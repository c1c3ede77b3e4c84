// SPDX-License-Identifier: Apache-2.0

#include "branchlab/intersect.hpp"

#include <algorithm>
#include <stdexcept>

#include "branchlab/error.hpp"
#include "branchlab/resultant.hpp"

namespace branchlab {

namespace {

// p/c compared exactly, reading p = inf as ratio inf and c = inf as ratio 0.
bool ratio_equal(const HnColumn& a, const HnColumn& b) {
  if (a.p.is_inf() || b.p.is_inf()) return a.p.is_inf() && b.p.is_inf();
  if (a.c.is_inf() || b.c.is_inf()) return a.c.is_inf() && b.c.is_inf();
  return a.p.value() * b.c.value() == b.p.value() * a.c.value();
}

// Column i of a tableau, repeating a trailing infinite column; null past a finite end.
const HnColumn* column_or_tail(const HnTableau& t, std::size_t i) {
  if (i <= t.length()) return &t.column(i);
  if (t.length() > 0 && t.columns.back().is_infinite()) return &t.columns.back();
  return nullptr;
}

// One step of the blow-up walk inside a column: multiplicity of the current point and
// the chart move to the next one.
enum class Move { Right, Left, Terminal };

struct WalkState {
  ExtNat p, c;

  std::int64_t multiplicity() const { return std::min(p, c).value(); }
  Move move() const {
    if (p > c) return Move::Right;
    if (p < c) return Move::Left;
    return Move::Terminal;
  }
  void advance(Move m) {
    if (m == Move::Right && p.is_finite()) p = p.value() - c.value();
    if (m == Move::Left && c.is_finite()) c = c.value() - p.value();
  }
};

// Walks both columns in lockstep, adding m * m' at every shared point. Stops after a
// shared terminal point or at the first point where the moves differ.
std::int64_t shared_column_sum(const HnColumn& a, const HnColumn& b) {
  WalkState u{a.p, a.c}, v{b.p, b.c};
  std::int64_t sum = 0;
  for (;;) {
    sum += u.multiplicity() * v.multiplicity();
    const Move mu = u.move(), mv = v.move();
    if (mu != mv || mu == Move::Terminal) return sum;
    if (u.p.is_inf() && v.p.is_inf()) throw std::logic_error("lockstep walk along identical axes");
    if (u.c.is_inf() && v.c.is_inf()) throw std::logic_error("lockstep walk along identical axes");
    u.advance(mu);
    v.advance(mv);
  }
}

ExtNat product(const ExtNat& a, const ExtNat& b) { return a * b; }

bool is_power_of_t(const UniPoly& g) { return !g.is_zero() && g.support().size() == 1; }

}  // namespace

ContactData contact_order(const HnTableau& t1, const HnTableau& t2) {
  if (!(t1.field == t2.field)) throw Error(ErrorCode::FieldMismatch, "tableaux over different fields");
  for (std::size_t i = 1;; ++i) {
    if (i > t1.length() && i > t2.length()) return {ExtNat::inf(), std::nullopt};
    const HnColumn* a = column_or_tail(t1, i);
    const HnColumn* b = column_or_tail(t2, i);
    if (!a || !b) throw Error(ErrorCode::InsufficientColumns, "tableau ends before the first divergence");
    if (!ratio_equal(*a, *b)) return {ExtNat(static_cast<std::int64_t>(i - 1)), i};
    if (a->a.end_marker || b->a.end_marker)
      throw Error(ErrorCode::InsufficientColumns,
                  "column " + std::to_string(i) + " agrees in ratio but its coefficient is not materialized");
    if (!(a->a.value == b->a.value)) return {ExtNat(static_cast<std::int64_t>(i - 1)), i};
  }
}

ContactData contact_order(const Branch& b1, const Branch& b2) {
  if (!(b1.field() == b2.field())) throw Error(ErrorCode::FieldMismatch, "branches over different fields");
  HnExpansion e1(b1), e2(b2);
  const auto d = first_divergence(e1, e2);
  if (!d) return {ExtNat::inf(), std::nullopt};
  return {ExtNat(static_cast<std::int64_t>(*d - 1)), d};
}

bool proportionality_check(const HnTableau& t1, const HnTableau& t2, std::size_t s) {
  if (t1.length() < s + 1 || t2.length() < s + 1) return false;
  const HnColumn &first1 = t1.column(1), &first2 = t2.column(1);
  const HnColumn &last1 = t1.column(s + 1), &last2 = t2.column(s + 1);
  bool own = true, first = true, last = true;
  for (std::size_t i = 1; i <= s + 1; ++i) {
    const HnColumn &a = t1.column(i), &b = t2.column(i);
    own = own && ratio_equal(a, b);
    first = first && ratio_equal({a.p, first1.c, a.a}, {b.p, first2.c, b.a});
    last = last && ratio_equal({a.p, last1.c, a.a}, {b.p, last2.c, b.a});
  }
  return own && first && last;
}

ExtNat intersection_number(const HnTableau& t1, const HnTableau& t2) {
  const ContactData cd = contact_order(t1, t2);
  if (cd.s.is_inf()) throw Error(ErrorCode::SameBranch, "branches have identical expansions");
  const std::size_t s = static_cast<std::size_t>(cd.s.value());
  ExtNat forward = 0, backward = 0;
  for (std::size_t i = 1; i <= s; ++i) {
    const HnColumn &a = *column_or_tail(t1, i), &b = *column_or_tail(t2, i);
    forward = forward + product(a.p, b.c);
    backward = backward + product(b.p, a.c);
  }
  const HnColumn &a = *column_or_tail(t1, s + 1), &b = *column_or_tail(t2, s + 1);
  const ExtNat tail = std::min(product(a.p, b.c), product(b.p, a.c));
  forward = forward + tail;
  backward = backward + tail;
  if (forward != backward) throw std::logic_error("the two intersection formulas disagree");
  return forward;
}

ExtNat intersection_number(const Branch& b1, const Branch& b2) {
  const ContactData cd = contact_order(b1, b2);
  if (!cd.first_divergence) throw Error(ErrorCode::SameBranch, "branches have identical expansions");
  // One column past the divergence keeps the end marker off the deciding column.
  const auto depth = DepthPolicy::to_columns(*cd.first_divergence + 1);
  return intersection_number(hn_tableau(b1, depth), hn_tableau(b2, depth));
}

bool is_local_parametrization(const Branch& b) { return is_power_of_t(gcd(b.x(), b.y())); }

ExtNat resultant_intersection(const Branch& b1, const Branch& b2) {
  if (!(b1.field() == b2.field())) throw Error(ErrorCode::FieldMismatch, "branches over different fields");
  const bool l1 = is_local_parametrization(b1), l2 = is_local_parametrization(b2);
  if (!l1 && !l2)
    throw Error(ErrorCode::NonLocalParametrization,
                "neither parametrization meets the origin only at t = 0; the resultant would overcount");
  auto total_degree = [](const Branch& b) { return b.x().degree() + b.y().degree(); };
  const bool first_on_s = l1 && (!l2 || total_degree(b1) <= total_degree(b2));
  const Branch& sb = first_on_s ? b1 : b2;
  const Branch& tb = first_on_s ? b2 : b1;
  const BiPoly p = BiPoly::in_s(sb.x()) - BiPoly::in_t(tb.x());
  const BiPoly q = BiPoly::in_s(sb.y()) - BiPoly::in_t(tb.y());
  // Both differences vanish only for two copies of the same axis.
  if (p.is_zero() || q.is_zero()) return ExtNat::inf();
  return resultant(p, q).ord();
}

std::int64_t noether_intersection(const Branch& b1, const Branch& b2) {
  if (!(b1.field() == b2.field())) throw Error(ErrorCode::FieldMismatch, "branches over different fields");
  HnExpansion e1(b1), e2(b2);
  const auto d = first_divergence(e1, e2);
  if (!d) throw Error(ErrorCode::SameBranch, "branches have identical expansions");
  std::int64_t sum = 0;
  for (std::size_t i = 1; i <= *d; ++i) sum += shared_column_sum(e1.column(i), e2.column(i));
  return sum;
}

ResolutionCluster resolution_cluster(const Branch& b) {
  ResolutionCluster out;
  const auto pts = resolution_points(hn_tableau(b));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.cluster.points.push_back({i, pts[i].parent, pts[i].prox, 1});
    out.multiplicities.push_back(pts[i].multiplicity);
  }
  return out;
}

ApproxSpec approx_spec(const HnTableau& t, std::size_t j) {
  const auto idx = characteristic_indices(t);
  if (j == 0 || j > idx.size())
    throw Error(ErrorCode::NotCharacteristicIndex,
                "index " + std::to_string(j) + " outside 1.." + std::to_string(idx.size()));
  return {idx[j - 1], j};
}

HnTableau mu_approximation(const HnTableau& t, const ApproxSpec& spec) {
  const auto idx = characteristic_indices(t);
  if (spec.j == 0 || spec.j > idx.size() || idx[spec.j - 1] != spec.mu)
    throw Error(ErrorCode::NotCharacteristicIndex,
                "column " + std::to_string(spec.mu) + " is not characteristic index " + std::to_string(spec.j));
  const std::size_t mu = spec.mu;
  for (std::size_t i = 1; i <= mu; ++i)
    if (t.column(i).is_infinite())
      throw Error(ErrorCode::NotCharacteristicIndex, "approximation target reaches an infinite column");
  const std::int64_t scale = t.column(mu).c.value();
  std::vector<HnColumn> cols;
  for (std::size_t i = 1; i < mu; ++i) {
    const HnColumn& col = t.column(i);
    if (col.p.value() % scale != 0 || col.c.value() % scale != 0)
      throw Error(ErrorCode::NonIntegerScaling, "column " + std::to_string(i) + " is not divisible by c_mu");
    cols.push_back({col.p.value() / scale, col.c.value() / scale, col.a});
  }
  const std::int64_t p_mu = t.column(mu).p.value();
  // (p', 1) has ratio p'; it equals p_mu/c_mu only when c_mu = 1.
  const std::int64_t p_new = scale == 1 ? p_mu + 1 : p_mu;
  cols.push_back({p_new, 1, HnCoef::marker(t.field)});
  return make_tableau(t.field, std::move(cols));
}

std::int64_t approximation_closed_form(const HnTableau& t, std::size_t j) {
  const ApproxSpec spec = approx_spec(t, j);
  const std::int64_t c_mu = t.column(spec.mu).c.value();
  std::int64_t sum = 0;
  for (std::size_t i = 1; i <= spec.mu; ++i) sum += t.column(i).p.value() * t.column(i).c.value();
  if (sum % c_mu != 0) throw Error(ErrorCode::NonIntegerScaling, "closed form is not integral");
  return sum / c_mu;
}

bool curvette_check(const Branch& f, const Branch& g, std::size_t j) {
  const HnTableau tf = hn_tableau(f);
  const CharData cd = characteristic_data(tf);
  if (j == 0 || j > cd.h)
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(j) + " outside 1.." + std::to_string(cd.h));
  if (approximation_closed_form(tf, j) != cd.r[j])
    throw std::logic_error("closed form of the approximation intersection differs from r_j");
  return intersection_number(f, g) == ExtNat(cd.r[j]);
}

std::pair<Branch, Branch> last_point_curvettes(const Branch& f) {
  const FieldSpec& field = f.field();
  if (!field.is_rational() && field.characteristic < 3)
    throw Error(ErrorCode::BadOption, "curvettes need two distinct nonzero coefficients");
  const FieldElement alpha(field, 1), beta(field, 2);
  const HnTableau t = hn_tableau(f);
  auto build = [&](const FieldElement& a) {
    if (resolution_points(t).size() == 1) {
      const UniPoly x = UniPoly::monomial(FieldElement(field, 1), 1);
      return make_branch(x, UniPoly::monomial(a, 1), field);
    }
    std::vector<HnColumn> cols = t.columns;
    cols.back().a = HnCoef::of(a);
    cols.push_back({1, 1, HnCoef::marker(field)});
    return synthesize_branch(make_tableau(field, std::move(cols)));
  };
  return {build(alpha), build(beta)};
}

}  // namespace branchlab
