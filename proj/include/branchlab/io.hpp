// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "branchlab/cluster.hpp"
#include "branchlab/hn.hpp"
#include "branchlab/intersect.hpp"
#include "branchlab/invariants.hpp"

namespace branchlab {

/// Whole file contents; InputFormat when unreadable.
std::string read_text_file(const std::string& path);

/// Branch file: "field:", "x:", "y:" lines, each exactly once; '#' starts a comment line.
/// Syntax errors raise InputFormat with "source:line:col:" in the message.
Branch parse_branch_text(std::string_view text, const std::string& source = "<input>");

/// Cluster file: one "point <id>: parent=<id|none>, prox=[ids], deg=<n>" line per point.
/// The result is validated (InvalidCluster).
Cluster parse_cluster_text(std::string_view text, const std::string& source = "<input>");

/// True when the first non-comment line starts with "point".
bool looks_like_cluster(std::string_view text);

std::string render_cluster_text(const Cluster& c);

/// Rows "p:", "c:", "a:" with left-aligned columns; inf for infinite entries and the end marker.
std::string render_tableau(const HnTableau& t);

/// Lines "char-indices:", "Ch: (d1; q1, ..., qh)", "d:", "n:", "r:".
std::string render_invariants(const CharData& cd);

/// One labelled line per matrix plus the verdict comparing N with its direct entries.
std::string render_matrices(const Cluster& c);

/// Values of the requested methods and, when more than one ran, AGREE or DISAGREE.
struct IntersectReport {
  std::optional<ExtNat> tableau, resultant, noether;
  bool agree() const;
};
std::string render_intersect(const IntersectReport& r);

// JSON mirrors. Every number is an exact string.
nlohmann::json tableau_to_json(const HnTableau& t);
HnTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json cluster_to_json(const Cluster& c);
Cluster cluster_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

/// Keys P, Delta, Pprime, Ptilde, N, Q, M and "N-direct-agrees".
nlohmann::json matrices_to_json(const Cluster& c);

/// Keys char-indices, h, Ch, d, n, r.
nlohmann::json invariants_to_json(const CharData& cd);
CharData invariants_from_json(const nlohmann::json& j);

nlohmann::json intersect_to_json(const IntersectReport& r);

}  // namespace branchlab
