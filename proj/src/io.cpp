// SPDX-License-Identifier: Apache-2.0

#include "branchlab/io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "branchlab/error.hpp"

namespace branchlab {

using nlohmann::json;

namespace {

[[noreturn]] void input_error(const std::string& source, std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorCode::InputFormat,
              source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg, col);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

std::size_t first_non_space(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

bool is_blank_or_comment(const std::string& s) {
  const std::size_t i = first_non_space(s);
  return i == s.size() || s[i] == '#';
}

// Cursor over one line of a cluster file; columns are 1-based.
class LineCursor {
 public:
  LineCursor(const std::string& text, const std::string& source, std::size_t line)
      : text_(text), source_(source), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  bool try_literal(std::string_view lit) {
    skip_ws();
    if (text_.compare(pos_, lit.size(), lit) != 0) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
  }
  std::size_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const { input_error(source_, line_, pos_ + 1, msg); }

 private:
  const std::string& text_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = " ") {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

template <class T>
json string_array(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(std::to_string(x));
  return a;
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InputFormat, std::string("JSON is missing key '") + key + "'");
  return j.at(key);
}

std::string string_of(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InputFormat, "JSON value must be an exact string, got " + j.dump());
  return j.get<std::string>();
}

std::int64_t integer_of(const json& j) {
  const std::string s = string_of(j);
  const ExtNat e = parse_extnat(s);
  if (e.is_inf()) throw Error(ErrorCode::InputFormat, "expected a finite number, got 'inf'");
  return e.value();
}

template <class T>
std::vector<T> integers_of(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InputFormat, "expected a JSON array, got " + j.dump());
  std::vector<T> out;
  for (const auto& x : j) out.push_back(static_cast<T>(integer_of(x)));
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InputFormat, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Branch parse_branch_text(std::string_view text, const std::string& source) {
  struct Entry {
    std::string value;
    std::size_t line = 0, col = 0;
  };
  std::map<std::string, Entry> entries;
  const auto lines = split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const std::string& s = lines[ln - 1];
    if (is_blank_or_comment(s)) continue;
    const std::size_t kstart = first_non_space(s);
    const std::size_t colon = s.find(':', kstart);
    if (colon == std::string::npos) input_error(source, ln, kstart + 1, "expected 'key: value'");
    std::string key = s.substr(kstart, colon - kstart);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (key != "field" && key != "x" && key != "y")
      input_error(source, ln, kstart + 1, "unknown key '" + key + "' (expected field, x or y)");
    if (entries.count(key)) input_error(source, ln, kstart + 1, "duplicate key '" + key + "'");
    entries[key] = {s.substr(colon + 1), ln, colon + 2};
  }
  for (const char* key : {"field", "x", "y"})
    if (!entries.count(key))
      throw Error(ErrorCode::InputFormat, source + ": missing '" + key + ":' line");

  const Entry& fe = entries["field"];
  FieldSpec field;
  try {
    std::string f = fe.value;
    f.erase(0, first_non_space(f));
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    field = parse_field(f);
  } catch (const Error& e) {
    input_error(source, fe.line, fe.col + first_non_space(fe.value), e.what());
  }
  auto poly = [&](const Entry& en) {
    try {
      return parse_poly(en.value, field);
    } catch (const Error& e) {
      const std::size_t offset = e.column() ? e.column() - 1 : first_non_space(en.value);
      input_error(source, en.line, en.col + offset, e.what());
    }
  };
  const UniPoly x = poly(entries["x"]), y = poly(entries["y"]);
  try {
    return make_branch(x, y, field);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.what());
  }
}

Cluster parse_cluster_text(std::string_view text, const std::string& source) {
  Cluster c;
  const auto lines = split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const std::string& s = lines[ln - 1];
    if (is_blank_or_comment(s)) continue;
    LineCursor cur(s, source, ln);
    ClusterPoint pt;
    cur.expect("point");
    pt.id = cur.natural();
    cur.expect(":");
    cur.expect("parent");
    cur.expect("=");
    if (!cur.try_literal("none")) pt.parent = cur.natural();
    cur.expect(",");
    cur.expect("prox");
    cur.expect("=");
    cur.expect("[");
    if (!cur.try_literal("]")) {
      do pt.prox.push_back(cur.natural());
      while (cur.try_literal(","));
      cur.expect("]");
    }
    cur.expect(",");
    cur.expect("deg");
    cur.expect("=");
    pt.degree = static_cast<std::int64_t>(cur.natural());
    if (!cur.at_end()) cur.fail("unexpected text after the degree");
    c.points.push_back(std::move(pt));
  }
  try {
    require_valid(c);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.what());
  }
  return c;
}

bool looks_like_cluster(std::string_view text) {
  for (const auto& s : split_lines(text)) {
    if (is_blank_or_comment(s)) continue;
    return s.compare(first_non_space(s), 5, "point") == 0;
  }
  return false;
}

std::string render_cluster_text(const Cluster& c) {
  std::string out;
  for (const auto& p : c.points) {
    out += "point " + std::to_string(p.id) + ": parent=" + (p.parent ? std::to_string(*p.parent) : "none") +
           ", prox=[" + join_numbers(p.prox, ",") + "], deg=" + std::to_string(p.degree) + "\n";
  }
  return out;
}

std::string render_tableau(const HnTableau& t) {
  std::vector<std::array<std::string, 3>> cells;
  for (const auto& col : t.columns) cells.push_back({col.p.to_string(), col.c.to_string(), col.a.to_string()});
  std::string out;
  const char* labels[3] = {"p:", "c:", "a:"};
  for (std::size_t row = 0; row < 3; ++row) {
    std::string line = labels[row];
    for (const auto& cell : cells) {
      std::size_t width = 0;
      for (const auto& s : cell) width = std::max(width, s.size());
      line += " " + cell[row] + std::string(width - cell[row].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_invariants(const CharData& cd) {
  std::string out;
  out += "char-indices: " + join_numbers(cd.indices) + "\n";
  out += "h: " + std::to_string(cd.h) + "\n";
  out += "Ch: (" + std::to_string(cd.d.at(0)) + "; " + join_numbers(cd.q, ", ") + ")\n";
  out += "d: " + join_numbers(cd.d) + "\n";
  out += "n: " + join_numbers(cd.n) + "\n";
  out += "r: " + join_numbers(cd.r) + "\n";
  return out;
}

std::string render_matrices(const Cluster& c) {
  const ExactMatrix n = intersection_matrix(c);
  std::string out;
  out += "P = " + proximity_matrix(c).to_string() + "\n";
  out += "Delta = " + degree_matrix(c).to_string() + "\n";
  out += "Pprime = " + refined_proximity(c).to_string() + "\n";
  out += "Ptilde = " + total_proximity(c).to_string() + "\n";
  out += "N = " + n.to_string() + "\n";
  out += "Q = " + inverse_proximity(c).to_string() + "\n";
  out += "M = " + curvette_gram(c).to_string() + "\n";
  out += std::string("N-direct: ") + (n == intersection_entries_direct(c) ? "AGREE" : "DISAGREE") + "\n";
  return out;
}

bool IntersectReport::agree() const {
  std::optional<ExtNat> seen;
  for (const auto& v : {tableau, resultant, noether}) {
    if (!v) continue;
    if (seen && *seen != *v) return false;
    seen = v;
  }
  return true;
}

std::string render_intersect(const IntersectReport& r) {
  std::vector<std::string> parts;
  int ran = 0;
  if (r.tableau) parts.push_back("tableau=" + r.tableau->to_string()), ++ran;
  if (r.resultant) parts.push_back("resultant=" + r.resultant->to_string()), ++ran;
  if (r.noether) parts.push_back("noether=" + r.noether->to_string()), ++ran;
  if (ran > 1) parts.push_back(r.agree() ? "AGREE" : "DISAGREE");
  return join(parts, " ") + "\n";
}

json tableau_to_json(const HnTableau& t) {
  json p = json::array(), c = json::array(), a = json::array();
  for (const auto& col : t.columns) {
    p.push_back(col.p.to_string());
    c.push_back(col.c.to_string());
    a.push_back(col.a.to_string());
  }
  return {{"field", t.field.to_string()}, {"p", p}, {"c", c}, {"a", a}};
}

HnTableau tableau_from_json(const json& j) {
  const FieldSpec field = parse_field(string_of(field_of(j, "field")));
  const json &p = field_of(j, "p"), &c = field_of(j, "c"), &a = field_of(j, "a");
  if (!p.is_array() || !c.is_array() || !a.is_array() || p.size() != c.size() || p.size() != a.size())
    throw Error(ErrorCode::InputFormat, "tableau rows p, c, a must be arrays of equal length");
  std::vector<HnColumn> cols;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string as = string_of(a[i]);
    cols.push_back({parse_extnat(string_of(p[i])), parse_extnat(string_of(c[i])),
                    as == "inf" ? HnCoef::marker(field) : HnCoef::of(parse_field_literal(as, field))});
  }
  return make_tableau(field, std::move(cols));
}

json cluster_to_json(const Cluster& c) {
  json pts = json::array();
  for (const auto& p : c.points)
    pts.push_back({{"id", std::to_string(p.id)},
                   {"parent", p.parent ? json(std::to_string(*p.parent)) : json(nullptr)},
                   {"prox", string_array(p.prox)},
                   {"deg", std::to_string(p.degree)}});
  return {{"points", pts}};
}

Cluster cluster_from_json(const json& j) {
  const json& pts = field_of(j, "points");
  if (!pts.is_array()) throw Error(ErrorCode::InputFormat, "'points' must be an array");
  Cluster c;
  for (const auto& p : pts) {
    ClusterPoint pt;
    pt.id = static_cast<std::size_t>(integer_of(field_of(p, "id")));
    const json& parent = field_of(p, "parent");
    if (!parent.is_null()) pt.parent = static_cast<std::size_t>(integer_of(parent));
    pt.prox = integers_of<std::size_t>(field_of(p, "prox"));
    pt.degree = integer_of(field_of(p, "deg"));
    c.points.push_back(std::move(pt));
  }
  require_valid(c);
  return c;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(row);
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InputFormat, "matrix must be an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorCode::InputFormat, "matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) {
      const std::string s = string_of(j[i][k]);
      mpq_class v;
      if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0)
        throw Error(ErrorCode::InputFormat, "malformed matrix entry '" + s + "'");
      v.canonicalize();
      m(i, k) = v;
    }
  }
  return m;
}

json matrices_to_json(const Cluster& c) {
  const ExactMatrix n = intersection_matrix(c);
  return {{"P", matrix_to_json(proximity_matrix(c))},
          {"Delta", matrix_to_json(degree_matrix(c))},
          {"Pprime", matrix_to_json(refined_proximity(c))},
          {"Ptilde", matrix_to_json(total_proximity(c))},
          {"N", matrix_to_json(n)},
          {"Q", matrix_to_json(inverse_proximity(c))},
          {"M", matrix_to_json(curvette_gram(c))},
          {"N-direct-agrees", n == intersection_entries_direct(c)}};
}

json invariants_to_json(const CharData& cd) {
  json ch = json::array();
  ch.push_back(std::to_string(cd.d.at(0)));
  for (auto q : cd.q) ch.push_back(std::to_string(q));
  return {{"char-indices", string_array(cd.indices)},
          {"h", std::to_string(cd.h)},
          {"Ch", ch},
          {"d", string_array(cd.d)},
          {"n", string_array(cd.n)},
          {"r", string_array(cd.r)}};
}

CharData invariants_from_json(const json& j) {
  CharData cd;
  cd.indices = integers_of<std::size_t>(field_of(j, "char-indices"));
  cd.h = static_cast<std::size_t>(integer_of(field_of(j, "h")));
  const auto ch = integers_of<std::int64_t>(field_of(j, "Ch"));
  if (ch.empty()) throw Error(ErrorCode::InputFormat, "'Ch' must start with d1");
  cd.q.assign(ch.begin() + 1, ch.end());
  cd.d = integers_of<std::int64_t>(field_of(j, "d"));
  cd.n = integers_of<std::int64_t>(field_of(j, "n"));
  cd.r = integers_of<std::int64_t>(field_of(j, "r"));
  if (cd.indices.size() != cd.h || cd.q.size() != cd.h || cd.d.size() != cd.h + 1 || cd.n.size() != cd.h ||
      cd.r.size() != cd.h + 1 || cd.d.front() != ch.front())
    throw Error(ErrorCode::InputFormat, "invariant sequences have inconsistent lengths");
  return cd;
}

json intersect_to_json(const IntersectReport& r) {
  json j = json::object();
  if (r.tableau) j["tableau"] = r.tableau->to_string();
  if (r.resultant) j["resultant"] = r.resultant->to_string();
  if (r.noether) j["noether"] = r.noether->to_string();
  j["verdict"] = r.agree() ? "AGREE" : "DISAGREE";
  return j;
}

}  // namespace branchlab
