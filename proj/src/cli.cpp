#include "scc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "scc/concentration.hpp"
#include "scc/cone_measure.hpp"
#include "scc/error.hpp"
#include "scc/generators.hpp"
#include "scc/json_io.hpp"
#include "scc/lifting.hpp"

namespace scc::cli {

namespace {

using io::Json;

struct Common {
  std::string format = "json";
  Index dim_cap = kDefaultGeneratorCap;
};

void add_common(CLI::App& cmd, Common& c) {
  cmd.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("--dim-cap", c.dim_cap, "Largest accepted dimension")->check(CLI::PositiveNumber);
}

struct Input {
  std::string path;
  std::string bytes;
};

Input read_input(const std::string& path, std::istream& in) {
  Input input{path, {}};
  if (path == "-") {
    input.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
    input.bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return input;
}

struct Loaded {
  Json document;
  Polytope polytope;
};

Loaded load_polytope(const Input& input, Index dim_cap) {
  Loaded l;
  l.document = Json::parse(input.bytes);
  HullOptions options;
  options.dimension_cap = dim_cap;
  l.polytope = io::polytope_from_json(l.document, options);
  return l;
}

Json input_echo(const Input& input, const Json& document) {
  Json echo{{"source", input.path}, {"fnv1a64", io::fnv1a64_hex(input.bytes)}};
  if (document.contains("generator")) echo["generator"] = document["generator"];
  echo["seed"] = document.contains("generator") && document["generator"].contains("seed")
                     ? document["generator"]["seed"]
                     : Json(nullptr);
  return echo;
}

Json tool_json() { return Json{{"name", "scc"}, {"version", kToolVersion}}; }

Json summary_json(const Polytope& p) {
  Json c = Json::array();
  for (const auto& x : centroid(p)) c.push_back(to_string(x));
  return Json{{"dim", p.dim()},
              {"vertices", p.num_vertices()},
              {"facets", p.num_facets()},
              {"volume", io::with_decimal(volume(p))},
              {"centroid", std::move(c)}};
}

std::string flat_label(const ConcentrationReport& r) {
  std::ostringstream s;
  s << (r.kind == FlatKind::Affine ? "affine" : "linear") << " dim " << r.flat_dim << " {";
  for (std::size_t i = 0; i < r.members.size(); ++i) s << (i ? "," : "") << r.members[i];
  s << "}";
  return s.str();
}

Polytope centered_or_throw(const Polytope& p, bool recenter) {
  if (is_centered(p)) return p;
  if (recenter) return translate_to_centroid(p);
  throw Error(ErrorCode::NotCentered, "centroid is " + to_string(centroid(p)) + " (use --recenter)");
}

// ---- gen ----

struct GenArgs {
  Common common;
  std::string kind;
  Index dim = 0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = parse_kind(a.kind);
  spec.dim = a.dim;
  spec.points = a.points;
  spec.seed = a.seed;
  spec.dim_cap = a.common.dim_cap;
  const Polytope p = generate(spec);
  Json doc = io::polytope_to_json(p);
  doc["generator"] = {{"kind", kind_name(spec.kind)}, {"dim", spec.dim}, {"points", spec.points}, {"seed", spec.seed}};
  if (a.common.format == "text") {
    out << kind_name(spec.kind) << " in dimension " << p.dim() << ": " << p.num_vertices() << " vertices, "
        << p.num_facets() << " facets, volume " << to_string(volume(p)) << "\n";
    for (const auto& v : p.vertices()) out << "  v " << to_string(v) << "\n";
    for (const auto& n : p.normals()) out << "  a " << to_string(n) << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return kOk;
}

// ---- audit ----

struct AuditArgs {
  Common common;
  std::string file;
  Index max_flat_dim = -1;
  bool linear = false;
  bool affine = false;
  bool both = false;
  bool recenter = false;
  std::size_t facet_cap = kDefaultFacetCap;
};

int cmd_audit(const AuditArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.file, in);
  const Loaded loaded = load_polytope(input, a.common.dim_cap);
  const bool recentered = !is_centered(loaded.polytope);
  const CenteredPolytope cp(centered_or_throw(loaded.polytope, a.recenter));
  const Polytope& p = cp.polytope();

  AuditOptions options;
  options.max_flat_dim = a.max_flat_dim;
  options.facet_cap = a.facet_cap;
  if (!a.both && (a.linear || a.affine)) {
    options.linear = a.linear;
    options.affine = a.affine;
  }
  const auto formula = pyramid_formula_check(p);
  const auto reports = full_audit(cp, options);
  const auto cases = classify_equality_cases(cp);
  const bool grunbaum = grunbaum_point_check(cp);

  std::size_t violations = 0;
  std::size_t equalities = 0;
  for (const auto& r : reports) {
    if (r.slack < 0) ++violations;
    if (r.equality) ++equalities;
  }
  const auto inconsistent =
      std::count_if(cases.begin(), cases.end(), [](const EqualityCase& c) { return !c.consistent; });
  const bool failed = violations > 0 || inconsistent > 0 || !grunbaum || !formula.equal;

  if (a.common.format == "text") {
    out << "polytope: dim " << p.dim() << ", " << p.num_vertices() << " vertices, " << p.num_facets()
        << " facets, volume " << to_string(cp.volume()) << (recentered ? " (recentered)" : "") << "\n";
    out << "pyramid formula: " << (formula.equal ? "holds" : "FAILS") << "\n";
    for (const auto& r : reports) {
      out << "  " << flat_label(r) << "  lhs " << to_string(r.lhs) << "  rhs " << to_string(r.rhs) << "  slack "
          << to_string(r.slack) << (r.equality ? (r.witness ? "  equality, witness" : "  equality, no witness") : "")
          << "\n";
    }
    for (const auto& c : cases) {
      out << "  equality case " << io::equality_kind_name(c.kind) << " slack " << to_string(c.slack) << " structure "
          << (c.structure ? "yes" : "no") << (c.consistent ? "" : "  INCONSISTENT") << "\n";
    }
    out << "grunbaum point check: " << (grunbaum ? "holds" : "FAILS") << "\n";
    out << reports.size() << " reports, " << equalities << " equalities, " << violations << " violations\n";
  } else {
    Json doc;
    doc["tool"] = tool_json();
    doc["input"] = input_echo(input, loaded.document);
    doc["input"]["recentered"] = recentered;
    doc["polytope"] = summary_json(p);
    doc["measure"] = io::measure_to_json(cp.measure());
    doc["pyramid_formula"] = {{"lhs", io::to_json(formula.lhs)}, {"rhs", io::to_json(formula.rhs)}, {"equal", formula.equal}};
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(io::report_to_json(r));
    doc["reports"] = std::move(rs);
    Json cs = Json::array();
    for (const auto& c : cases) cs.push_back(io::equality_case_to_json(c));
    doc["equality_cases"] = std::move(cs);
    doc["grunbaum_point"] = grunbaum;
    doc["summary"] = {{"reports", reports.size()},
                      {"equalities", equalities},
                      {"violations", violations},
                      {"inconsistent_equality_cases", inconsistent}};
    out << doc.dump(2) << "\n";
  }
  return failed ? kTheoremViolation : kOk;
}

// ---- lift ----

struct LiftArgs {
  Common common;
  std::string file;
  Index levels = 3;
  Index max_flat_dim = -1;
  bool recenter = false;
};

int cmd_lift(const LiftArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.file, in);
  const Loaded loaded = load_polytope(input, a.common.dim_cap);
  const CenteredPolytope cp(centered_or_throw(loaded.polytope, a.recenter));
  const Polytope& p = cp.polytope();
  const Index n = p.dim();
  const LiftTower tower = build_tower(p, a.levels);

  Json levels = Json::array();
  for (std::size_t j = 0; j < tower.levels.size(); ++j) {
    const auto& lv = tower.levels[j];
    Json weights = Json::array();
    for (const auto& w : lv.cone_volumes) weights.push_back(io::to_json(w));
    Json base_weights = Json::array();
    for (const auto f : lv.lifted_facet) base_weights.push_back(io::to_json(lv.cone_volumes[f]));
    levels.push_back({{"level", j},
                      {"dim", lv.polytope.dim()},
                      {"facets", lv.polytope.num_facets()},
                      {"volume", io::to_json(lv.volume)},
                      {"expected_volume", io::to_json(Rational(n + static_cast<Index>(j) + 1, n + 1) * cp.volume())},
                      {"centroid_zero", true},
                      {"hull_verified", lv.hull_verified},
                      {"base_facet_cone_volumes", std::move(base_weights)},
                      {"cone_volumes", std::move(weights)}});
  }

  const Index max_dim = a.max_flat_dim < 0 ? n - 1 : std::min(a.max_flat_dim, n - 1);
  bool ok = true;
  Json bounds = Json::array();
  for (const auto& f : enumerate_normal_flats(p, max_dim)) {
    const auto report = affine_scc(cp, f.flat);
    const Index d = f.flat.dim();
    Json per_level = Json::array();
    bool decreasing = true;
    Rational previous;
    for (Index j = 1; j <= a.levels; ++j) {
      const auto cert = tower_certificate(tower, f.flat, static_cast<std::size_t>(j));
      const Rational bound = tower_bound(cp, f.flat, j);
      if (j > 1 && !(bound < previous)) decreasing = false;
      previous = bound;
      const bool valid = cert.valid && cert.bound == bound && report.lhs <= report.rhs && report.rhs <= bound;
      ok = ok && valid;
      per_level.push_back({{"level", j},
                           {"bound", io::to_json(bound)},
                           {"lifted_span_dim", cert.span_dim},
                           {"lifted_lhs", io::to_json(cert.lhs)},
                           {"valid", valid}});
    }
    bool gap_ok = true;
    if (a.levels >= 1) {
      const Rational gap = previous - report.rhs;
      gap_ok = gap == Rational(d + 1, n + 1) * cp.volume() / (n + a.levels);
    }
    ok = ok && decreasing && gap_ok;
    bounds.push_back({{"flat", io::flat_to_json(f.flat)},
                      {"members", f.members},
                      {"lhs", io::to_json(report.lhs)},
                      {"affine_rhs", io::to_json(report.rhs)},
                      {"levels", std::move(per_level)},
                      {"monotone_decreasing", decreasing},
                      {"gap_matches", gap_ok}});
  }

  if (a.common.format == "text") {
    for (const auto& lv : levels) {
      out << "level " << lv["level"].get<std::size_t>() << ": dim " << lv["dim"].get<Index>() << ", volume "
          << lv["volume"].get<std::string>() << ", centroid 0" << (lv["hull_verified"].get<bool>() ? ", hull verified" : "")
          << "\n";
    }
    for (const auto& b : bounds) {
      out << "flat dim " << b["flat"]["dim"].get<Index>() << " lhs " << b["lhs"].get<std::string>() << " rhs "
          << b["affine_rhs"].get<std::string>() << " bounds";
      for (const auto& l : b["levels"]) out << " " << l["bound"].get<std::string>();
      out << (b["monotone_decreasing"].get<bool>() ? "  decreasing" : "  NOT DECREASING") << "\n";
    }
  } else {
    Json doc;
    doc["tool"] = tool_json();
    doc["input"] = input_echo(input, loaded.document);
    doc["polytope"] = summary_json(p);
    doc["levels"] = std::move(levels);
    doc["bounds"] = std::move(bounds);
    doc["valid"] = ok;
    out << doc.dump(2) << "\n";
  }
  return ok ? kOk : kTheoremViolation;
}

// ---- polar / ispyramid / join ----

struct FileArgs {
  Common common;
  std::string file;
};

int cmd_polar(const FileArgs& a, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_polytope(read_input(a.file, in), a.common.dim_cap);
  const Polytope q = polar(loaded.polytope);
  if (a.common.format == "text") {
    for (const auto& v : q.vertices()) out << "v " << to_string(v) << "\n";
  } else {
    out << io::polytope_to_json(q).dump(2) << "\n";
  }
  return kOk;
}

int cmd_ispyramid(const FileArgs& a, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_polytope(read_input(a.file, in), a.common.dim_cap);
  const Polytope& p = loaded.polytope;
  Json structures = Json::array();
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    if (const auto base = pyramid_base_under(p, v)) {
      structures.push_back({{"apex_index", v},
                            {"apex", io::to_json(p.vertex(v))},
                            {"base_facet", *base},
                            {"base_normal", io::to_json(p.normal(*base))},
                            {"base_rhs", io::to_json(p.rhs()[*base])}});
    }
  }
  if (a.common.format == "text") {
    if (structures.empty()) out << "not a pyramid\n";
    for (const auto& s : structures) {
      out << "pyramid with apex " << s["apex_index"].get<std::size_t>() << " over facet "
          << s["base_facet"].get<std::size_t>() << "\n";
    }
  } else {
    out << Json{{"pyramid", !structures.empty()}, {"structures", std::move(structures)}}.dump(2) << "\n";
  }
  return kOk;
}

int cmd_join(const FileArgs& a, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_polytope(read_input(a.file, in), a.common.dim_cap);
  const Polytope& p = loaded.polytope;
  const auto split = detect_join_structure(p);
  Json doc{{"join", split.has_value()}};
  if (split) {
    Json q1 = Json::array();
    Json q2 = Json::array();
    for (const auto& v : split->q1.vertices) q1.push_back(io::to_json(v));
    for (const auto& v : split->q2.vertices) q2.push_back(io::to_json(v));
    doc["first"] = split->first;
    doc["second"] = split->second;
    doc["q1"] = std::move(q1);
    doc["q2"] = std::move(q2);
  }
  bool agree = true;
  if (p.origin_interior()) {
    const auto r = join_duality_roundtrip(p);
    agree = r.primal_join == r.polar_join;
    doc["polar_join"] = r.polar_join;
    doc["agree"] = agree;
  } else {
    doc["polar_join"] = nullptr;
  }
  if (a.common.format == "text") {
    out << (split ? "join" : "not a join");
    if (doc["polar_join"].is_boolean()) out << "; polar " << (doc["polar_join"].get<bool>() ? "join" : "not a join");
    out << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return agree ? kOk : kTheoremViolation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCentered:
    case ErrorCode::OriginNotInterior:
      return kPrecondition;
    case ErrorCode::InvariantViolation:
      return kTheoremViolation;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone-volume and subspace concentration audits for polytopes", "scc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a centered polytope");
  gen_cmd->add_option("--kind", gen.kind, "cube | cross | simplex | prism | pyramid | join | random")->required();
  gen_cmd->add_option("--dim", gen.dim, "Ambient dimension")->required();
  gen_cmd->add_option("--points", gen.points, "Point count for random kinds");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random kinds");
  add_common(*gen_cmd, gen.common);

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Audit the concentration inequalities");
  audit_cmd->add_option("file", audit.file, "Polytope JSON, or - for stdin")->required();
  audit_cmd->add_option("--max-flat-dim", audit.max_flat_dim, "Largest flat dimension audited");
  auto* lin = audit_cmd->add_flag("--linear", audit.linear, "Linear subspaces only");
  auto* aff = audit_cmd->add_flag("--affine", audit.affine, "Affine flats only");
  auto* both = audit_cmd->add_flag("--both", audit.both, "Linear and affine (default)");
  lin->excludes(aff)->excludes(both);
  aff->excludes(both);
  audit_cmd->add_flag("--recenter", audit.recenter, "Translate to the centroid first");
  audit_cmd->add_option("--facet-cap", audit.facet_cap, "Largest facet count for flat enumeration");
  add_common(*audit_cmd, audit.common);

  LiftArgs lift;
  auto* lift_cmd = app.add_subcommand("lift", "Build the pyramid-lift tower and its bounds");
  lift_cmd->add_option("file", lift.file, "Polytope JSON, or - for stdin")->required();
  lift_cmd->add_option("--levels", lift.levels, "Tower height")->check(CLI::Range(0, 20));
  lift_cmd->add_option("--max-flat-dim", lift.max_flat_dim, "Largest flat dimension bounded");
  lift_cmd->add_flag("--recenter", lift.recenter, "Translate to the centroid first");
  add_common(*lift_cmd, lift.common);

  FileArgs polar_args;
  auto* polar_cmd = app.add_subcommand("polar", "Polar polytope");
  polar_cmd->add_option("file", polar_args.file, "Polytope JSON, or - for stdin")->required();
  add_common(*polar_cmd, polar_args.common);

  FileArgs pyramid_args;
  auto* pyramid_cmd = app.add_subcommand("ispyramid", "Report every apex/base pyramid structure");
  pyramid_cmd->add_option("file", pyramid_args.file, "Polytope JSON, or - for stdin")->required();
  add_common(*pyramid_cmd, pyramid_args.common);

  FileArgs join_args;
  auto* join_cmd = app.add_subcommand("join", "Detect a join split and check it against the polar");
  join_cmd->add_option("file", join_args.file, "Polytope JSON, or - for stdin")->required();
  add_common(*join_cmd, join_args.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (audit_cmd->parsed()) return cmd_audit(audit, in, out);
    if (lift_cmd->parsed()) return cmd_lift(lift, in, out);
    if (polar_cmd->parsed()) return cmd_polar(polar_args, in, out);
    if (pyramid_cmd->parsed()) return cmd_ispyramid(pyramid_args, in, out);
    if (join_cmd->parsed()) return cmd_join(join_args, in, out);
  } catch (const Error& e) {
    err << "scc: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "scc: ParseError: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace scc::cli
