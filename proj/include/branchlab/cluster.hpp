// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace branchlab {

struct ClusterPoint {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  /// Points this one is proximate to; contains the parent for non-root points.
  std::vector<std::size_t> prox;
  std::int64_t degree = 1;

  friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

/// Points with dense ids, parents before children, root at id 0.
struct Cluster {
  std::vector<ClusterPoint> points;

  std::size_t size() const { return points.size(); }
  const ClusterPoint& at(std::size_t id) const { return points.at(id); }
  bool proximate(std::size_t u, std::size_t t) const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct ClusterViolation {
  std::string rule;
  std::size_t point;
  std::string message;
};

std::vector<ClusterViolation> cluster_validate(const Cluster& c);

/// Throws InvalidCluster with the first violation.
void require_valid(const Cluster& c);

enum class PointKind { Root, Free, Satellite };
std::string to_string(PointKind k);
PointKind classify_point(const Cluster& c, std::size_t id);

/// Dense matrix of exact rationals; rows and columns are labelled by point ids.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  ExactMatrix operator-() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_symmetric() const;
  /// Exact determinant; square matrices only.
  mpq_class determinant() const;
  /// Exact inverse; throws SingularMatrix.
  ExactMatrix inverse() const;

  /// "[[a,b],[c,d]]"; a 1x1 matrix renders as "[a]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Rows are the proximate point U, columns the target T: 1 on the diagonal, -1 when U is proximate to T.
ExactMatrix proximity_matrix(const Cluster& c);
ExactMatrix degree_matrix(const Cluster& c);
/// Delta * P * Delta^-1: entry -deg(U)/deg(T) when U is proximate to T.
ExactMatrix refined_proximity(const Cluster& c);
/// Delta * P: row U scaled by deg(U).
ExactMatrix total_proximity(const Cluster& c);
/// -P^t * Delta * P.
ExactMatrix intersection_matrix(const Cluster& c);
/// The same matrix built entry by entry from the proximity structure.
ExactMatrix intersection_entries_direct(const Cluster& c);
/// P^-1 by forward substitution; row T is the multiplicity vector of a curvette at T.
ExactMatrix inverse_proximity(const Cluster& c);
/// Q * Delta^-1 * Q^t, equal to -N^-1.
ExactMatrix curvette_gram(const Cluster& c);

}  // namespace branchlab
