#include "scc/json_io.hpp"

#include <cstdint>
#include <cstdio>

#include "scc/error.hpp"

namespace scc::io {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json with_decimal(const Rational& q) {
  return Json{{"exact", to_string(q)}, {"approx", true}, {"decimal", to_decimal(q)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::ParseError, "expected a rational as a string or integer, got " + j.dump());
}

Vec vector_from_json(const Json& j, Index expected_dim) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  if (static_cast<Index>(j.size()) != expected_dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(j.size()) + " in dimension " + std::to_string(expected_dim));
  }
  Vec v(expected_dim);
  for (Index k = 0; k < expected_dim; ++k) v(k) = rational_from_json(j[static_cast<std::size_t>(k)]);
  return v;
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  out["vertices"] = std::move(vertices);
  Json normals = Json::array();
  for (const auto& a : p.normals()) normals.push_back(to_json(a));
  out["normals"] = std::move(normals);
  if (!p.origin_interior()) {
    Json rhs = Json::array();
    for (const auto& b : p.rhs()) rhs.push_back(to_json(b));
    out["rhs"] = std::move(rhs);
  }
  return out;
}

namespace {

std::vector<Vec> vectors_from_json(const Json& j, Index dim, const char* field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string("\"") + field + "\" must be an array");
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(vector_from_json(row, dim));
  return out;
}

}  // namespace

Polytope polytope_from_json(const Json& j, const HullOptions& options) {
  if (!j.is_object() || !j.contains("dim")) throw Error(ErrorCode::ParseError, "polytope JSON needs a \"dim\" field");
  if (!j["dim"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"dim\" must be an integer");
  const Index n = j["dim"].get<Index>();
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "dimension must be positive");
  if (n > options.dimension_cap) {
    throw Error(ErrorCode::CapExceeded,
                "dimension " + std::to_string(n) + " exceeds the cap of " + std::to_string(options.dimension_cap));
  }
  std::optional<Polytope> from_h;
  if (j.contains("normals")) {
    HPolytope h{n, vectors_from_json(j["normals"], n, "normals"), {}, false};
    if (j.contains("rhs")) {
      const auto& rhs = j["rhs"];
      if (!rhs.is_array() || rhs.size() != h.normals.size()) {
        throw Error(ErrorCode::ParseError, "\"rhs\" must match \"normals\" in length");
      }
      for (const auto& b : rhs) h.rhs.push_back(rational_from_json(b));
    } else {
      h.rhs.assign(h.normals.size(), Rational(1));
    }
    from_h = polytope_from_h(h);
  }
  if (j.contains("vertices")) {
    Polytope p = convex_hull(vectors_from_json(j["vertices"], n, "vertices"), options);
    if (from_h && !(*from_h == p)) throw Error(ErrorCode::ParseError, "vertices and normals describe different polytopes");
    return p;
  }
  if (!from_h) throw Error(ErrorCode::ParseError, "polytope JSON needs \"vertices\" or \"normals\"");
  return *from_h;
}

Json measure_to_json(const ConeVolumeMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"normal", to_json(a.normal)}, {"weight", to_json(a.weight)}});
  return Json{{"atoms", std::move(atoms)}, {"total", to_json(m.total)}};
}

Json flat_to_json(const Flat& flat) {
  if (const auto* a = std::get_if<AffineFlat>(&flat)) {
    Json pts = Json::array();
    for (const auto& p : a->points()) pts.push_back(to_json(p));
    return Json{{"type", "affine"}, {"dim", a->dim()}, {"points", std::move(pts)}};
  }
  const auto& l = std::get<LinearSubspace>(flat);
  Json basis = Json::array();
  for (Index r = 0; r < l.basis().rows(); ++r) basis.push_back(to_json(Vec(l.basis().row(r).transpose())));
  return Json{{"type", "linear"}, {"dim", l.dim()}, {"basis", std::move(basis)}};
}

Json report_to_json(const ConcentrationReport& r) {
  Json out;
  out["kind"] = r.kind == FlatKind::Affine ? "affine" : "linear";
  out["dim"] = r.flat_dim;
  out["flat"] = flat_to_json(r.flat);
  out["members"] = r.members;
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  out["slack"] = to_json(r.slack);
  out["equality"] = r.equality;
  if (r.equality) {
    if (r.witness) {
      Json w = flat_to_json(*r.witness);
      w["members"] = r.witness_members;
      out["witness"] = std::move(w);
    } else {
      out["witness"] = nullptr;
    }
  }
  out["decimal"] = {{"approx", true},
                    {"lhs", to_decimal(r.lhs)},
                    {"rhs", to_decimal(r.rhs)},
                    {"slack", to_decimal(r.slack)}};
  return out;
}

std::string_view equality_kind_name(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::PyramidBase: return "pyramid_base";
    case EqualityKind::PyramidApex: return "pyramid_apex";
    case EqualityKind::Simplex: return "simplex";
  }
  return "unknown";
}

Json equality_case_to_json(const EqualityCase& c) {
  Json out;
  out["kind"] = equality_kind_name(c.kind);
  out["anchor"] = c.anchor;
  out["flat"] = flat_to_json(c.flat);
  out["members"] = c.members;
  out["slack"] = to_json(c.slack);
  out["structure"] = c.structure;
  out["consistent"] = c.consistent;
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace scc::io
