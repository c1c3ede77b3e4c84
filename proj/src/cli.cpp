// SPDX-License-Identifier: Apache-2.0

#include "branchlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

#include "branchlab/error.hpp"
#include "branchlab/intersect.hpp"
#include "branchlab/io.hpp"

namespace branchlab {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerbInfo {
  const char* name;
  Verb verb;
  const char* help;
};

constexpr VerbInfo kVerbs[] = {
    {"tableau", Verb::Tableau, "Hamburger-Noether tableau of a branch"},
    {"invariants", Verb::Invariants, "characteristic indices and the Ch, d, n, r sequences"},
    {"resolve", Verb::Resolve, "resolution cluster and multiplicity sequence"},
    {"matrices", Verb::Matrices, "proximity and intersection matrices of a cluster or branch"},
    {"intersect", Verb::Intersect, "intersection number of two branches"},
    {"approx", Verb::Approx, "approximation at a characteristic index (--index j)"},
    {"check", Verb::Check, "run the invariant checks on a branch or cluster file"},
    {"oracle", Verb::Oracle, "compare the intersection methods against random partners"},
};

// Options filled by CLI11 before being folded into a Command.
struct RawOptions {
  std::vector<std::string> inputs;
  std::string depth = "minimal";
  bool json = false;
  std::optional<std::size_t> index;
  std::string method = "all";
  std::size_t count = 25;
};

std::unique_ptr<CLI::App> build_app(RawOptions& o, std::map<std::string, CLI::App*>& subs) {
  auto app = std::make_unique<CLI::App>("Exact invariants of plane branches and clusters", "branchlab");
  app->require_subcommand(1);
  for (const auto& v : kVerbs) {
    CLI::App* sc = app->add_subcommand(v.name, v.help);
    const bool two = v.verb == Verb::Intersect;
    const char* what = v.verb == Verb::Matrices || v.verb == Verb::Check ? "branch or cluster file" : "branch file";
    // Arity is checked after parsing so that too few and too many map to different errors.
    sc->add_option("files", o.inputs, two ? "two branch files" : what)->expected(0, -1);
    sc->add_flag("--json", o.json, "emit JSON");
    if (v.verb == Verb::Tableau) sc->add_option("--depth", o.depth, "minimal or a column count");
    if (v.verb == Verb::Approx) sc->add_option("--index", o.index, "characteristic index j (1-based)")->required();
    if (v.verb == Verb::Intersect) sc->add_option("--method", o.method, "tableau, resultant, noether or all");
    if (v.verb == Verb::Oracle) sc->add_option("--count", o.count, "number of random partners");
    subs[v.name] = sc;
  }
  return app;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("BRANCHLAB_SEED");
  if (!s || !*s) return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::BadOption, std::string("BRANCHLAB_SEED is not a number: ") + s);
  return v;
}

Branch load_branch(const std::string& path) { return parse_branch_text(read_text_file(path), path); }

// A single named check result for the check verb.
struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

CheckLine run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string why = body();
    return {name, why.empty(), why};
  } catch (const std::exception& e) {
    return {name, false, std::string("raised: ") + e.what()};
  }
}

std::vector<CheckLine> cluster_checks(const Cluster& c) {
  std::vector<CheckLine> lines;
  lines.push_back(run_check("cluster-valid", [&] {
    const auto v = cluster_validate(c);
    return v.empty() ? std::string() : v.front().rule + ": " + v.front().message;
  }));
  lines.push_back(run_check("intersection-direct", [&] {
    return intersection_matrix(c) == intersection_entries_direct(c) ? "" : "product and direct entries differ";
  }));
  lines.push_back(run_check("gram-inverse", [&] {
    return curvette_gram(c) == -intersection_matrix(c).inverse() ? "" : "M differs from -N^-1";
  }));
  lines.push_back(run_check("determinant", [&] {
    mpq_class prod = 1;
    for (const auto& p : c.points) prod *= p.degree;
    return (-intersection_matrix(c)).determinant() == prod ? "" : "det(-N) differs from the product of degrees";
  }));
  lines.push_back(run_check("curvette-rows", [&] {
    const ExactMatrix q = inverse_proximity(c);
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t k = 0; k < q.cols(); ++k)
        if (q(i, k) < 0 || q(i, k).get_den() != 1) return std::string("Q has an entry outside the naturals");
    return std::string();
  }));
  return lines;
}

std::vector<CheckLine> branch_checks(const Branch& f) {
  std::vector<CheckLine> lines;
  const HnTableau t = hn_tableau(f);
  lines.push_back(run_check("tableau-valid", [&] {
    const auto v = tableau_validate(t);
    return v.empty() ? std::string() : v.front().rule + ": " + v.front().message;
  }));
  lines.push_back(run_check("round-trip", [&] {
    return hn_tableau(synthesize_branch(t)) == t ? "" : "tableau of the synthesized branch differs";
  }));
  lines.push_back(run_check("invariants", [&] {
    const CharData cd = characteristic_data(t);
    if (cd.d.back() != 1) return std::string("d_{h+1} is not 1");
    for (std::size_t i = 2; i <= cd.h; ++i)
      if (cd.r[i] != cd.n[i - 2] * cd.r[i - 1] + cd.q[i - 1]) return "r_" + std::to_string(i) + " breaks the recursion";
    return std::string();
  }));
  const ResolutionCluster rc = resolution_cluster(f);
  lines.push_back(run_check("proximity-defects", [&] {
    const std::size_t n = rc.cluster.size();
    ExactMatrix m(n, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = rc.multiplicities[i];
    const ExactMatrix pm = proximity_matrix(rc.cluster).transpose() * m;
    for (std::size_t i = 0; i < n; ++i)
      if (pm(i, 0) != (i + 1 == n ? 1 : 0)) return "defect at point " + std::to_string(i);
    return std::string();
  }));
  lines.push_back(run_check("curvette-row", [&] {
    const ExactMatrix q = inverse_proximity(rc.cluster);
    for (std::size_t i = 0; i < q.cols(); ++i)
      if (q(q.rows() - 1, i) != rc.multiplicities[i]) return std::string("last row of Q differs from m");
    return std::string();
  }));
  if (f.field().is_rational() || f.field().characteristic >= 3) {
    lines.push_back(run_check("cluster-bridge", [&] {
      const auto [g1, g2] = last_point_curvettes(f);
      const std::size_t last = rc.cluster.size() - 1;
      return curvette_gram(rc.cluster)(last, last) == noether_intersection(g1, g2)
                 ? ""
                 : "M at the last point differs from the curvette intersection";
    }));
  }
  const CharData cd = characteristic_data(t);
  for (std::size_t j = 1; j <= cd.h; ++j) {
    lines.push_back(run_check("approximation-" + std::to_string(j), [&, j] {
      const ApproxSpec spec = approx_spec(t, j);
      const Branch g = synthesize_branch(mu_approximation(t, spec));
      if (contact_order(f, g).s != ExtNat(static_cast<std::int64_t>(spec.mu - 1))) return std::string("contact order");
      if (hn_tableau(g, DepthPolicy::to_columns(spec.mu)).column(spec.mu).c != ExtNat(1)) return std::string("c' != 1");
      if (!curvette_check(f, g, j)) return std::string("iota differs from r_j");
      const ExtNat iota = intersection_number(f, g);
      if (iota != ExtNat(noether_intersection(f, g))) return std::string("Noether count differs");
      if ((is_local_parametrization(f) || is_local_parametrization(g)) && resultant_intersection(f, g) != iota)
        return std::string("resultant differs");
      return std::string();
    }));
  }
  return lines;
}

UniPoly random_poly(std::mt19937_64& rng, const FieldSpec& f, std::size_t max_deg) {
  std::uniform_int_distribution<long long> coef(-5, 5), deg(1, static_cast<long long>(max_deg));
  std::bernoulli_distribution keep(0.5);
  const auto top = static_cast<std::size_t>(deg(rng));
  UniPoly p(f);
  for (std::size_t e = 1; e <= top; ++e)
    if (keep(rng) || e == top) p = p + UniPoly::monomial(FieldElement(f, coef(rng)), e);
  return p;
}

// Random partner for the oracle: unrelated, or the input with a higher-order perturbation.
std::optional<Branch> random_partner(std::mt19937_64& rng, const Branch& f, bool related) {
  const FieldSpec& fs = f.field();
  try {
    if (!related) return make_branch(random_poly(rng, fs, 8), random_poly(rng, fs, 8), fs);
    std::uniform_int_distribution<std::size_t> e(2, 10);
    std::uniform_int_distribution<long long> c(1, 5);
    return make_branch(f.x(), f.y() + UniPoly::monomial(FieldElement(fs, c(rng)), e(rng)), fs);
  } catch (const Error&) {
    return std::nullopt;
  }
}

IntersectReport intersect_report(const Branch& a, const Branch& b, Method m) {
  IntersectReport r;
  if (m == Method::Tableau || m == Method::All) r.tableau = intersection_number(a, b);
  if (m == Method::Resultant || m == Method::All) r.resultant = resultant_intersection(a, b);
  if (m == Method::Noether || m == Method::All) r.noether = ExtNat(noether_intersection(a, b));
  return r;
}

int emit_checks(const std::vector<CheckLine>& lines, bool as_json, std::ostream& out) {
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : lines) {
    all = all && l.pass;
    if (as_json) {
      j.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    } else {
      out << (l.pass ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
    }
  }
  if (as_json) out << j.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

std::string usage() {
  RawOptions o;
  std::map<std::string, CLI::App*> subs;
  return build_app(o, subs)->help();
}

Command parse_command(const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorCode::MissingArgument, "no verb given\n" + usage());
  const auto known = std::find_if(std::begin(kVerbs), std::end(kVerbs), [&](const VerbInfo& v) { return args[0] == v.name; });
  if (known == std::end(kVerbs)) {
    if (!args[0].empty() && args[0][0] == '-') throw Error(ErrorCode::BadOption, "options must follow a verb: " + args[0]);
    throw Error(ErrorCode::UnknownVerb, "unknown verb '" + args[0] + "'");
  }
  RawOptions o;
  std::map<std::string, CLI::App*> subs;
  auto app = build_app(o, subs);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::RequiredError& e) {
    throw Error(ErrorCode::MissingArgument, e.what());
  } catch (const CLI::ArgumentMismatch& e) {
    throw Error(ErrorCode::MissingArgument, e.what());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::BadOption, e.what());
  }
  const std::size_t arity = known->verb == Verb::Intersect ? 2 : 1;
  if (o.inputs.size() < arity)
    throw Error(ErrorCode::MissingArgument, std::string(known->name) + " needs " + std::to_string(arity) + " input file(s)");
  if (o.inputs.size() > arity)
    throw Error(ErrorCode::BadOption, "unexpected argument '" + o.inputs[arity] + "'");
  Command c;
  c.verb = known->verb;
  c.inputs = o.inputs;
  c.json = o.json;
  c.index = o.index;
  c.count = o.count;
  if (o.depth != "minimal") {
    std::size_t used = 0;
    long long n = 0;
    try {
      n = std::stoll(o.depth, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.depth.size() || n <= 0) throw Error(ErrorCode::BadOption, "--depth expects 'minimal' or a positive count");
    c.depth = DepthPolicy::to_columns(static_cast<std::size_t>(n));
  }
  const std::map<std::string, Method> methods = {
      {"tableau", Method::Tableau}, {"resultant", Method::Resultant}, {"noether", Method::Noether}, {"all", Method::All}};
  const auto m = methods.find(o.method);
  if (m == methods.end()) throw Error(ErrorCode::BadOption, "unknown --method '" + o.method + "'");
  c.method = m->second;
  if (c.index && *c.index == 0) throw Error(ErrorCode::BadOption, "--index is 1-based");
  return c;
}

int run(const Command& c, std::ostream& out) {
  using nlohmann::json;
  switch (c.verb) {
    case Verb::Tableau: {
      const HnTableau t = hn_tableau(load_branch(c.inputs.at(0)), c.depth);
      if (c.json) out << tableau_to_json(t).dump(2) << "\n";
      else out << render_tableau(t);
      return 0;
    }
    case Verb::Invariants: {
      const CharData cd = characteristic_data(hn_tableau(load_branch(c.inputs.at(0))));
      if (c.json) out << invariants_to_json(cd).dump(2) << "\n";
      else out << render_invariants(cd);
      return 0;
    }
    case Verb::Resolve: {
      const ResolutionCluster rc = resolution_cluster(load_branch(c.inputs.at(0)));
      if (c.json) {
        json j = cluster_to_json(rc.cluster);
        j["m"] = json::array();
        for (auto m : rc.multiplicities) j["m"].push_back(std::to_string(m));
        out << j.dump(2) << "\n";
      } else {
        out << render_cluster_text(rc.cluster);
        out << "m:";
        for (auto m : rc.multiplicities) out << " " << m;
        out << "\n";
      }
      return 0;
    }
    case Verb::Matrices: {
      const std::string& path = c.inputs.at(0);
      const std::string text = read_text_file(path);
      const Cluster cl =
          looks_like_cluster(text) ? parse_cluster_text(text, path) : resolution_cluster(parse_branch_text(text, path)).cluster;
      const bool agree = intersection_matrix(cl) == intersection_entries_direct(cl);
      if (c.json) out << matrices_to_json(cl).dump(2) << "\n";
      else out << render_matrices(cl);
      return agree ? 0 : 1;
    }
    case Verb::Intersect: {
      const Branch a = load_branch(c.inputs.at(0)), b = load_branch(c.inputs.at(1));
      const IntersectReport r = intersect_report(a, b, c.method);
      if (c.json) out << intersect_to_json(r).dump(2) << "\n";
      else out << render_intersect(r);
      return r.agree() ? 0 : 1;
    }
    case Verb::Approx: {
      const Branch f = load_branch(c.inputs.at(0));
      const HnTableau t = hn_tableau(f);
      const ApproxSpec spec = approx_spec(t, *c.index);
      const HnTableau at = mu_approximation(t, spec);
      const Branch g = synthesize_branch(at);
      const CharData cd = characteristic_data(t);
      const ExtNat iota = intersection_number(f, g);
      const bool ok = curvette_check(f, g, spec.j);
      if (c.json) {
        out << json{{"mu", std::to_string(spec.mu)},
                    {"tableau", tableau_to_json(at)},
                    {"x", g.x().to_string()},
                    {"y", g.y().to_string()},
                    {"iota", iota.to_string()},
                    {"r", std::to_string(cd.r[spec.j])},
                    {"closed-form", std::to_string(approximation_closed_form(t, spec.j))},
                    {"curvette", ok}}
                   .dump(2)
            << "\n";
      } else {
        out << "mu: " << spec.mu << "\n" << render_tableau(at);
        out << "x: " << g.x().to_string() << "\ny: " << g.y().to_string() << "\n";
        out << "iota=" << iota.to_string() << " r_" << spec.j << "=" << cd.r[spec.j]
            << " closed-form=" << approximation_closed_form(t, spec.j) << (ok ? " CURVETTE" : " NOT-CURVETTE") << "\n";
      }
      return ok ? 0 : 1;
    }
    case Verb::Check: {
      const std::string& path = c.inputs.at(0);
      const std::string text = read_text_file(path);
      if (looks_like_cluster(text)) return emit_checks(cluster_checks(parse_cluster_text(text, path)), c.json, out);
      return emit_checks(branch_checks(parse_branch_text(text, path)), c.json, out);
    }
    case Verb::Oracle: {
      const Branch f = load_branch(c.inputs.at(0));
      std::mt19937_64 rng(seed_from_env());
      std::size_t done = 0, bad = 0, attempts = 0;
      json pairs = json::array();
      while (done < c.count) {
        if (++attempts > 100 * (c.count + 1)) throw std::runtime_error("could not generate enough partner branches");
        const auto g = random_partner(rng, f, attempts % 2 == 0);
        if (!g || contact_order(f, *g).s.is_inf()) continue;
        if (!is_local_parametrization(f) && !is_local_parametrization(*g)) continue;
        const IntersectReport r = intersect_report(f, *g, Method::All);
        ++done;
        if (!r.agree()) ++bad;
        if (c.json) {
          json j = intersect_to_json(r);
          j["x"] = g->x().to_string();
          j["y"] = g->y().to_string();
          pairs.push_back(j);
        } else {
          out << "partner " << done << " " << g->to_string() << ": " << render_intersect(r);
        }
      }
      if (c.json) out << json{{"pairs", pairs}, {"disagreements", std::to_string(bad)}}.dump(2) << "\n";
      else out << "oracle: " << done << " pairs, " << bad << " disagreements\n";
      return bad == 0 ? 0 : 1;
    }
  }
  return 2;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args[0] == "-h" || args[0] == "--help")) {
    out << usage();
    return 0;
  }
  try {
    if (args.size() >= 2 && (args[1] == "-h" || args[1] == "--help")) {
      RawOptions o;
      std::map<std::string, CLI::App*> subs;
      auto app = build_app(o, subs);
      const auto it = subs.find(args[0]);
      if (it != subs.end()) {
        out << it->second->help();
        return 0;
      }
    }
    return run(parse_command(args), out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace branchlab
