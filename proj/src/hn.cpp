// SPDX-License-Identifier: Apache-2.0

#include "branchlab/hn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "branchlab/error.hpp"

namespace branchlab {

std::vector<std::int64_t> euclid_quotients(std::int64_t p, std::int64_t c) {
  if (p <= 0 || c <= 0) throw Error(ErrorCode::NonPositiveValuation, "Euclidean chain needs positive values");
  std::vector<std::int64_t> s;
  std::int64_t prev = p, cur = c;
  while (cur > 0) {
    s.push_back(prev / cur);
    const std::int64_t next = prev % cur;
    prev = cur;
    cur = next;
  }
  return s;
}

std::int64_t column_points(const ExtNat& p, const ExtNat& c) {
  if (p.is_inf() || c.is_inf()) return 0;
  const auto s = euclid_quotients(p.value(), c.value());
  return std::accumulate(s.begin(), s.end(), std::int64_t{0});
}

HnTableau make_tableau(const FieldSpec& field, std::vector<HnColumn> columns) {
  HnTableau t{field, std::move(columns), {}};
  for (const auto& col : t.columns) {
    const bool positive = (col.p.is_inf() || col.p.value() > 0) && (col.c.is_inf() || col.c.value() > 0);
    t.m_list.push_back(positive ? column_points(col.p, col.c) : 0);
  }
  return t;
}

EuclidChain euclid_chain(const RatSeries& eta0, const RatSeries& eta1) {
  for (const RatSeries* e : {&eta0, &eta1})
    if (e->is_zero() || e->valuation() <= 0)
      throw Error(ErrorCode::NonPositiveValuation, "Euclidean chain needs finite positive orders");
  EuclidChain ch;
  std::vector<RatSeries> eta{eta0, eta1};
  ch.eta_vals = {eta0.valuation(), eta1.valuation()};
  while (ch.eta_vals.back() > 0) {
    const std::size_t i = eta.size() - 1;
    const std::int64_t s = ch.eta_vals[i - 1] / ch.eta_vals[i];
    ch.s_list.push_back(s);
    eta.push_back(eta[i - 1] / eta[i].pow(static_cast<std::uint64_t>(s)));
    ch.eta_vals.push_back(ch.eta_vals[i - 1] - s * ch.eta_vals[i]);
    if (eta.back().valuation() != ch.eta_vals.back()) throw std::logic_error("valuation drift in Euclidean chain");
  }
  ch.kappa = ch.s_list.size();
  ch.m = std::accumulate(ch.s_list.begin(), ch.s_list.end(), std::int64_t{0});
  ch.a = coeff_at(eta.back(), 0);
  ch.next_x = eta[ch.kappa];
  ch.next_y = eta.back() - RatSeries::constant(ch.a);
  return ch;
}

HnExpansion::HnExpansion(const Branch& b)
    : field_(b.field()), x_(b.x()), y_(b.y()), degree_(std::max<std::int64_t>({1, b.x().degree(), b.y().degree()})) {}

void HnExpansion::advance() {
  if (stabilized_) {
    columns_.push_back(columns_.back());
    return;
  }
  const HnCoef zero = HnCoef::of(FieldElement(field_));
  if (x_.is_zero()) {
    columns_.push_back({ord_t(y_), ExtNat::inf(), zero});
    stabilized_ = true;
    return;
  }
  if (y_.is_zero()) {
    columns_.push_back({ExtNat::inf(), ord_t(x_), zero});
    stabilized_ = true;
    return;
  }
  EuclidChain ch = euclid_chain(y_, x_);
  columns_.push_back({ord_t(y_), ord_t(x_), HnCoef::of(ch.a)});
  x_ = std::move(ch.next_x);
  y_ = std::move(ch.next_y);
}

bool is_locally_primitive(const UniPoly& x, const UniPoly& y) {
  const std::int64_t deg = std::max<std::int64_t>({1, x.degree(), y.degree()});
  // Columns before the first coprime one satisfy sum p*c <= r_h*d_h <= deg*(conductor + mult),
  // and the conductor of a branch on a degree-deg curve is at most (deg-1)(deg-2).
  const std::int64_t bound = deg * ((deg - 1) * (deg - 2) + deg);
  RatSeries xs(x), ys(y);
  std::int64_t consumed = 0;
  for (;;) {
    if (xs.is_zero()) return ord_t(ys) == ExtNat(1);
    if (ys.is_zero()) return ord_t(xs) == ExtNat(1);
    const std::int64_t p = ord_t(ys).value(), c = ord_t(xs).value();
    if (std::gcd(p, c) == 1) return true;
    consumed += p * c;
    if (consumed > bound) return false;
    EuclidChain ch = euclid_chain(ys, xs);
    xs = std::move(ch.next_x);
    ys = std::move(ch.next_y);
  }
}

const HnColumn& HnExpansion::column(std::size_t i) {
  if (i == 0) throw std::out_of_range("tableau columns are 1-based");
  while (columns_.size() < i) advance();
  return columns_[i - 1];
}

namespace {

// p/c compared exactly; inf when p = inf, 0 when c = inf.
bool same_ratio(const HnColumn& a, const HnColumn& b) {
  if (a.p.is_inf() || b.p.is_inf()) return a.p.is_inf() && b.p.is_inf() && !a.c.is_inf() && !b.c.is_inf();
  if (a.c.is_inf() || b.c.is_inf()) return a.c.is_inf() && b.c.is_inf();
  return a.p.value() * b.c.value() == b.p.value() * a.c.value();
}

}  // namespace

bool columns_agree(const HnColumn& a, const HnColumn& b) {
  if (!same_ratio(a, b)) return false;
  if (a.a.end_marker || b.a.end_marker) return true;
  return a.a.value == b.a.value;
}

std::optional<std::size_t> first_divergence(HnExpansion& a, HnExpansion& b) {
  // Agreement through s columns forces an intersection number of at least s,
  // which is bounded by the product of the curve degrees for distinct branches.
  const std::size_t cap = static_cast<std::size_t>(a.degree() * b.degree()) + 2;
  for (std::size_t i = 1; i <= cap; ++i) {
    if (!columns_agree(a.column(i), b.column(i))) return i;
    if (a.stabilized() && b.stabilized()) return std::nullopt;
  }
  return std::nullopt;
}

DepthPolicy DepthPolicy::to_columns(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadOption, "depth must be at least 1 column");
  DepthPolicy d;
  d.kind = Kind::ToColumns;
  d.columns = n;
  return d;
}

DepthPolicy DepthPolicy::until_distinguished_from(const Branch& other) {
  DepthPolicy d;
  d.kind = Kind::UntilDistinguishedFrom;
  d.other = other;
  return d;
}

HnTableau hn_tableau(const Branch& b, const DepthPolicy& policy) {
  HnExpansion e(b);
  std::size_t minimal = 1;
  for (;; ++minimal) {
    const HnColumn& col = e.column(minimal);
    if (gcd_ext(col.c, col.p) == ExtNat(1)) break;
    if (col.is_infinite()) throw std::logic_error("expansion stabilized before reaching a coprime column");
  }
  std::size_t length = minimal;
  if (policy.kind == DepthPolicy::Kind::ToColumns) {
    length = std::max(policy.columns, minimal);
  } else if (policy.kind == DepthPolicy::Kind::UntilDistinguishedFrom) {
    if (!policy.other) throw Error(ErrorCode::BadOption, "no branch to distinguish from");
    HnExpansion o(*policy.other);
    const auto d = first_divergence(e, o);
    if (!d) throw Error(ErrorCode::SameBranch, "branches have identical expansions");
    // A divergence in the coefficient alone needs one more column, or the end marker hides it.
    const bool coefficient_only = same_ratio(e.column(*d), o.column(*d));
    length = std::max(*d + (coefficient_only ? 1 : 0), minimal);
  }
  std::vector<HnColumn> cols;
  for (std::size_t i = 1; i <= length; ++i) cols.push_back(e.column(i));
  if (!cols.back().is_infinite()) cols.back().a = HnCoef::marker(b.field());
  return make_tableau(b.field(), std::move(cols));
}

std::vector<TableauViolation> tableau_validate(const HnTableau& t) {
  std::vector<TableauViolation> out;
  auto report = [&](const char* rule, std::size_t col, const std::string& msg) { out.push_back({rule, col, msg}); };
  const std::size_t l = t.length();
  if (l == 0) {
    report("nonempty", 0, "tableau has no columns");
    return out;
  }
  for (std::size_t i = 1; i <= l; ++i) {
    const HnColumn& col = t.column(i);
    const std::string at = "column " + std::to_string(i);
    if ((!col.p.is_inf() && col.p.value() <= 0) || (!col.c.is_inf() && col.c.value() <= 0)) {
      report("positive", i, at + ": p and c must be positive");
      continue;
    }
    if (col.p.is_inf() && col.c.is_inf()) report("finite-pair", i, at + ": p and c are both inf");
    if (col.a.end_marker) {
      if (i != l) report("marker-last", i, at + ": end marker before the last column");
      if (col.is_infinite()) report("marker-finite", i, at + ": end marker on an infinite column");
    } else {
      if (col.a.value.field() != t.field) report("field", i, at + ": coefficient outside the tableau field");
      if (col.is_infinite() != col.a.value.is_zero())
        report("zero-coefficient", i, at + ": a must be 0 exactly when p or c is inf");
      if (i == l && !col.is_infinite()) report("marker-last", i, at + ": last finite column needs the end marker");
    }
    if (t.m_list.size() == l && t.m_list[i - 1] != column_points(col.p, col.c))
      report("m-list", i, at + ": m does not match the Euclidean chain of (p, c)");
    if (i < l) {
      const HnColumn& nx = t.column(i + 1);
      if (col.c < nx.c) report("c-nonincreasing", i + 1, "c increases at column " + std::to_string(i + 1));
      if (col.p.is_inf() && (!nx.p.is_inf() || nx.c != col.c))
        report("inf-tail", i + 1, "columns after p = inf must repeat (inf, c)");
      else if (col.c.is_inf() && (!nx.c.is_inf() || nx.p != col.p))
        report("inf-tail", i + 1, "columns after c = inf must repeat (p, inf)");
      else if (!col.is_infinite() && !nx.c.is_inf() && nx.c != gcd_ext(col.c, col.p))
        report("c-gcd", i + 1,
               "c" + std::to_string(i + 1) + " != gcd(c" + std::to_string(i) + ", p" + std::to_string(i) + ")");
      else if (!col.is_infinite() && nx.c.is_inf())
        report("c-gcd", i + 1, "c cannot become inf after a finite column");
    }
  }
  if (t.m_list.size() != l) report("m-list", 0, "m list length differs from column count");
  const HnColumn& last = t.columns.back();
  if (last.c != ExtNat(1) && gcd_ext(last.c, last.p) != ExtNat(1))
    report("last-coprime", l, "last column needs c = 1 or gcd(c, p) = 1");
  return out;
}

bool is_minimal_shape(const HnTableau& t) {
  for (std::size_t i = 1; i < t.length(); ++i)
    if (gcd_ext(t.column(i).c, t.column(i).p) == ExtNat(1)) return false;
  return t.length() > 0;
}

namespace {

void require_valid(const HnTableau& t) {
  const auto v = tableau_validate(t);
  if (!v.empty()) throw Error(ErrorCode::UnrealizableTableau, "invalid tableau: " + v.front().message);
}

}  // namespace

std::vector<WalkPoint> resolution_points(const HnTableau& t) {
  require_valid(t);
  if (!is_minimal_shape(t))
    throw Error(ErrorCode::RequiresMinimalPolicy, "tableau extends past its first coprime column");
  std::vector<WalkPoint> pts;
  // Exceptional divisors through the current point, as seen by the two chart axes.
  std::optional<std::size_t> x_label, y_label;
  auto emit = [&](std::int64_t mult) {
    WalkPoint w{mult, std::nullopt, {}};
    if (!pts.empty()) {
      w.parent = pts.size() - 1;
      w.prox.push_back(*w.parent);
      for (const auto& lab : {x_label, y_label})
        if (lab && std::find(w.prox.begin(), w.prox.end(), *lab) == w.prox.end()) w.prox.push_back(*lab);
    }
    pts.push_back(std::move(w));
    return pts.size() - 1;
  };
  for (const HnColumn& col : t.columns) {
    if (col.is_infinite()) {
      // Only a coordinate axis reaches here; its single point is smooth.
      emit(col.p.is_inf() ? col.c.value() : col.p.value());
      break;
    }
    std::int64_t p = col.p.value(), c = col.c.value();
    for (;;) {
      const std::size_t id = emit(std::min(p, c));
      if (p > c) {
        x_label = id;
        p -= c;
      } else if (p < c) {
        y_label = id;
        c -= p;
      } else {
        x_label = id;
        y_label.reset();
        break;
      }
    }
  }
  // Shortest prefix whose proximity defects are zero except a unit at its last point.
  for (std::size_t n = 1; n <= pts.size(); ++n) {
    bool ok = pts[n - 1].multiplicity == 1;
    for (std::size_t s = 0; ok && s + 1 < n; ++s) {
      std::int64_t defect = pts[s].multiplicity;
      for (std::size_t u = s + 1; u < n; ++u)
        if (std::find(pts[u].prox.begin(), pts[u].prox.end(), s) != pts[u].prox.end()) defect -= pts[u].multiplicity;
      ok = defect == 0;
    }
    if (ok) {
      pts.resize(n);
      return pts;
    }
  }
  throw std::logic_error("blow-up walk does not satisfy the proximity equalities");
}

std::vector<std::int64_t> multiplicity_sequence(const HnTableau& t) {
  std::vector<std::int64_t> m;
  for (const auto& w : resolution_points(t)) m.push_back(w.multiplicity);
  return m;
}

Branch synthesize_branch(const HnTableau& t) {
  require_valid(t);
  const FieldSpec& f = t.field;
  const FieldElement one(f, 1);
  const HnColumn& last = t.columns.back();
  UniPoly x(f), y(f);
  if (!last.c.is_inf()) x = UniPoly::monomial(one, static_cast<std::size_t>(last.c.value()));
  if (!last.p.is_inf()) y = UniPoly::monomial(one, static_cast<std::size_t>(last.p.value()));
  for (std::size_t i = t.length() - 1; i >= 1; --i) {
    const HnColumn& col = t.column(i);
    if (col.is_infinite()) continue;
    const auto s = euclid_quotients(col.p.value(), col.c.value());
    const std::size_t kappa = s.size();
    std::vector<UniPoly> eta(kappa + 2, UniPoly(f));
    eta[kappa] = x;
    eta[kappa + 1] = y + UniPoly::constant(col.a.value);
    for (std::size_t k = kappa; k >= 1; --k)
      eta[k - 1] = eta[k].pow(static_cast<std::size_t>(s[k - 1])) * eta[k + 1];
    x = eta[1];
    y = eta[0];
  }
  try {
    return make_branch(x, y, f);
  } catch (const Error& e) {
    throw Error(ErrorCode::UnrealizableTableau, std::string("synthesized parametrization rejected: ") + e.what());
  }
}

}  // namespace branchlab
