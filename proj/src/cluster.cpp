// SPDX-License-Identifier: Apache-2.0

#include "branchlab/cluster.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "branchlab/error.hpp"

namespace branchlab {

bool Cluster::proximate(std::size_t u, std::size_t t) const {
  const auto& p = points.at(u).prox;
  return std::find(p.begin(), p.end(), t) != p.end();
}

std::vector<ClusterViolation> cluster_validate(const Cluster& c) {
  std::vector<ClusterViolation> out;
  auto report = [&](const char* rule, std::size_t id, const std::string& msg) { out.push_back({rule, id, msg}); };
  if (c.points.empty()) {
    report("nonempty", 0, "cluster has no points");
    return out;
  }
  // Extra proximity targets already used by the children of each point.
  std::map<std::size_t, std::vector<std::size_t>> satellite_targets;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ClusterPoint& pt = c.points[i];
    const std::string at = "point " + std::to_string(i);
    if (pt.id != i) {
      report("dense-ids", i, at + " is stored with id " + std::to_string(pt.id));
      continue;
    }
    if (pt.degree < 1) report("degree", i, at + ": degree must be at least 1");
    if (i == 0) {
      if (pt.parent) report("root", 0, "root must have no parent");
      if (!pt.prox.empty()) report("root", 0, "root must not be proximate to any point");
      if (pt.degree != 1) report("root", 0, "root must have degree 1");
      continue;
    }
    if (!pt.parent) {
      report("single-root", i, at + " has no parent");
      continue;
    }
    const std::size_t par = *pt.parent;
    if (par >= i) {
      report("order", i, at + ": parent must precede the point");
      continue;
    }
    bool targets_ok = true;
    for (std::size_t t : pt.prox)
      if (t >= i) {
        report("order", i, at + ": proximity target must precede the point");
        targets_ok = false;
      }
    std::vector<std::size_t> sorted = pt.prox;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      report("distinct", i, at + ": repeated proximity target");
    if (std::find(pt.prox.begin(), pt.prox.end(), par) == pt.prox.end())
      report("parent-prox", i, at + " is not proximate to its parent");
    if (pt.prox.size() > 2) report("prox-size", i, at + " is proximate to more than two points");
    if (!targets_ok || pt.prox.size() != 2) continue;
    const std::size_t extra = pt.prox[0] == par ? pt.prox[1] : pt.prox[0];
    if (extra == par) continue;
    if (!c.proximate(par, extra))
      report("inherited", i, at + ": extra proximity target not inherited from the parent");
    if (pt.degree != c.points[par].degree) report("satellite-degree", i, at + ": satellite degree differs from parent");
    auto& used = satellite_targets[par];
    if (std::find(used.begin(), used.end(), extra) != used.end())
      report("unique-satellite", i, at + ": another child of its parent is already proximate to " + std::to_string(extra));
    used.push_back(extra);
  }
  return out;
}

void require_valid(const Cluster& c) {
  const auto v = cluster_validate(c);
  if (!v.empty()) throw Error(ErrorCode::InvalidCluster, v.front().message);
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::Root: return "root";
    case PointKind::Free: return "free";
    case PointKind::Satellite: return "satellite";
  }
  return "?";
}

PointKind classify_point(const Cluster& c, std::size_t id) {
  require_valid(c);
  if (id >= c.size()) throw Error(ErrorCode::IndexOutOfRange, "no point " + std::to_string(id) + " in the cluster");
  if (id == 0) return PointKind::Root;
  return c.points[id].prox.size() == 2 ? PointKind::Satellite : PointKind::Free;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

bool ExactMatrix::is_symmetric() const { return *this == transpose(); }

mpq_class ExactMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  ExactMatrix m = *this;
  mpq_class det = 1;
  for (std::size_t k = 0; k < rows_; ++k) {
    std::size_t piv = k;
    while (piv < rows_ && m(piv, k) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < rows_; ++i) {
      if (m(i, k) == 0) continue;
      const mpq_class f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < cols_; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix m = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(k, j), m(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    const mpq_class d = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const mpq_class f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  auto row = [&](std::size_t i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  };
  if (rows_ == 1 && cols_ == 1) return "[" + (*this)(0, 0).get_str() + "]";
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    row(i);
  }
  os << ']';
  return os.str();
}

ExactMatrix proximity_matrix(const Cluster& c) {
  require_valid(c);
  ExactMatrix p = ExactMatrix::identity(c.size());
  for (const auto& pt : c.points)
    for (std::size_t t : pt.prox) p(pt.id, t) = -1;
  return p;
}

ExactMatrix degree_matrix(const Cluster& c) {
  require_valid(c);
  ExactMatrix d(c.size(), c.size());
  for (const auto& pt : c.points) d(pt.id, pt.id) = pt.degree;
  return d;
}

ExactMatrix refined_proximity(const Cluster& c) {
  ExactMatrix p = proximity_matrix(c);
  for (const auto& pt : c.points)
    for (std::size_t t : pt.prox) {
      mpq_class v(-pt.degree, c.points[t].degree);
      v.canonicalize();
      p(pt.id, t) = v;
    }
  return p;
}

ExactMatrix total_proximity(const Cluster& c) {
  ExactMatrix p = proximity_matrix(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) p(i, j) *= c.points[i].degree;
  return p;
}

ExactMatrix intersection_matrix(const Cluster& c) {
  const ExactMatrix p = proximity_matrix(c);
  return -(p.transpose() * degree_matrix(c) * p);
}

ExactMatrix intersection_entries_direct(const Cluster& c) {
  require_valid(c);
  const std::size_t n = c.size();
  ExactMatrix m(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    std::int64_t diag = c.points[s].degree;
    for (std::size_t u = s + 1; u < n; ++u)
      if (c.proximate(u, s)) diag += c.points[u].degree;
    m(s, s) = -diag;
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s : c.points[t].prox) {
      // The entry vanishes when the satellite point on both divisors is in the cluster.
      bool continuation = false;
      for (std::size_t u = t + 1; u < n && !continuation; ++u)
        continuation = c.points[u].parent == t && c.proximate(u, s);
      const mpq_class v = continuation ? 0 : c.points[t].degree;
      m(s, t) = v;
      m(t, s) = v;
    }
  }
  return m;
}

ExactMatrix inverse_proximity(const Cluster& c) {
  const ExactMatrix p = proximity_matrix(c);
  const std::size_t n = c.size();
  ExactMatrix q(n, n);
  // P is unit lower triangular: solve row by row.
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class acc = 0;
      for (std::size_t k = j; k < i; ++k) acc -= p(i, k) * q(k, j);
      q(i, j) = acc;
    }
  }
  return q;
}

ExactMatrix curvette_gram(const Cluster& c) {
  const ExactMatrix q = inverse_proximity(c);
  ExactMatrix dinv(c.size(), c.size());
  for (const auto& pt : c.points) {
    mpq_class v(1, pt.degree);
    v.canonicalize();
    dinv(pt.id, pt.id) = v;
  }
  return q * dinv * q.transpose();
}

}  // namespace branchlab
