#include "kholo/report.hpp"

#include <type_traits>

#include "kholo/error.hpp"
#include "kholo/expr.hpp"

namespace kholo {

std::string toolkit_version() { return KHOLO_VERSION; }

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidDocument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::size_t index_value(const Json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) bad("expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t index_field(const Json& j, const char* key) { return index_value(field(j, key)); }

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  return v;
}

Json simplex_json(const Simplex& s) { return Json(s); }

Simplex simplex_from(const Json& j) {
  if (!j.is_array()) bad("a simplex must be an array of vertex indices");
  Simplex s;
  for (const auto& v : j) s.push_back(index_value(v));
  return s;
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).to_string());
  return out;
}

RationalVector vector_from(const Json& j) {
  if (!j.is_array()) bad("a point must be an array of rational strings");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) bad("coordinates must be rational strings");
    v(static_cast<Eigen::Index>(k)) = Rational::parse(j[k].get<std::string>());
  }
  return v;
}

Json assignment_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [name, value] : a) out[name] = to_string(value);
  return out;
}

Assignment assignment_from(const Json& j) {
  if (!j.is_object()) bad("a point must be an object of coordinates");
  Assignment a;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string()) bad("coordinate '" + name + "' must be a string");
    a[name] = parse_gaussian(value.get<std::string>());
  }
  return a;
}

Json identity_json(const IdentityCheck& c) {
  return Json{{"lhs", poly_to_json(c.lhs)}, {"rhs", poly_to_json(c.rhs)}, {"equal", c.equal}};
}

IdentityCheck identity_from(const Json& j) {
  return {poly_from_json(field(j, "lhs")), poly_from_json(field(j, "rhs")), bool_field(j, "equal")};
}

const char* kind_name(WaypointKind k) {
  switch (k) {
    case WaypointKind::Endpoint: return "endpoint";
    case WaypointKind::TopBarycenter: return "top-barycenter";
    case WaypointKind::FacetBarycenter: return "facet-barycenter";
  }
  return "endpoint";
}

WaypointKind kind_from(const std::string& s) {
  if (s == "endpoint") return WaypointKind::Endpoint;
  if (s == "top-barycenter") return WaypointKind::TopBarycenter;
  if (s == "facet-barycenter") return WaypointKind::FacetBarycenter;
  bad("unknown waypoint kind '" + s + "'");
}

Json payload_json(const CartanReport& r) {
  return Json{{"type", "cartan"},
              {"u", poly_to_json(r.u)},
              {"f", poly_to_json(r.f)},
              {"residual", poly_to_json(r.residual)},
              {"g", poly_to_json(r.g)},
              {"pluriharmonic", r.pluriharmonic},
              {"reconstructed", r.reconstructed}};
}

Json payload_json(const PluriharmonicReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.check.witnesses) witnesses.push_back({{"j", w.j}, {"k", w.k}, {"value", poly_to_json(w.value)}});
  return Json{{"type", "pluriharmonic"},
              {"u", poly_to_json(r.u)},
              {"pluriharmonic", r.check.pluriharmonic},
              {"witnesses", witnesses}};
}

Json payload_json(const GReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.holomorphy.witnesses)
    witnesses.push_back({{"index", w.index}, {"variable", w.variable}, {"derivative", poly_to_json(w.derivative)}});
  return Json{{"type", "verify-g"},
              {"f", poly_to_json(r.f)},
              {"g", poly_to_json(r.g)},
              {"holomorphic", r.holomorphy.holomorphic},
              {"witnesses", witnesses},
              {"halving", identity_json(r.identities.halving)},
              {"real_slice", identity_json(r.identities.real_slice)}};
}

Json payload_json(const EliminationReport& r) {
  return Json{{"type", "eliminate"},
              {"basepoint", {{"x0", r.basepoint.x0}, {"y0", r.basepoint.y0}}},
              {"q1", poly_to_json(r.q1)},
              {"q2", poly_to_json(r.q2)},
              {"r", poly_to_json(r.r)},
              {"degenerate", r.degenerate}};
}

Json payload_json(const DiscriminantReport& r) {
  return Json{{"type", "discriminant"}, {"p", poly_to_json(r.p)}, {"t", r.t}, {"d", poly_to_json(r.d)}};
}

Json payload_json(const BranchReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"point", assignment_json(s.point)},
                       {"on_locus", s.on_locus},
                       {"fiber_count", s.fiber_count},
                       {"exact_distinct", s.exact_distinct}});
  return Json{{"type", "fibers"},
              {"p", poly_to_json(r.p)},
              {"d", poly_to_json(r.d)},
              {"t", r.t},
              {"samples", samples},
              {"covering_degree", r.covering_degree ? Json(*r.covering_degree) : Json(nullptr)},
              {"violations", r.violations}};
}

Json payload_json(const RouteReport& r) {
  Json waypoints = Json::array();
  for (const auto& w : r.path.waypoints)
    waypoints.push_back({{"position", vector_json(w.position)}, {"kind", kind_name(w.kind)}, {"simplex", simplex_json(w.simplex)}});
  Json violation = nullptr;
  if (r.avoidance.violation)
    violation = Json{{"segment", r.avoidance.violation->segment}, {"face", simplex_json(r.avoidance.violation->face)}};
  return Json{{"type", "route"}, {"waypoints", waypoints}, {"avoids", r.avoidance.avoids}, {"violation", violation}};
}

Json payload_json(const SelftestReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back({{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
  return Json{{"type", "selftest"}, {"seed", r.seed}, {"items", items}};
}

ReportPayload payload_from(const Json& j) {
  const std::string type = text_field(j, "type");
  if (type == "cartan") {
    CartanReport r;
    r.u = poly_from_json(field(j, "u"));
    r.f = poly_from_json(field(j, "f"));
    r.residual = poly_from_json(field(j, "residual"));
    r.g = poly_from_json(field(j, "g"));
    r.pluriharmonic = bool_field(j, "pluriharmonic");
    r.reconstructed = bool_field(j, "reconstructed");
    return r;
  }
  if (type == "pluriharmonic") {
    PluriharmonicReport r{poly_from_json(field(j, "u")), {}};
    r.check.pluriharmonic = bool_field(j, "pluriharmonic");
    for (const auto& w : array_field(j, "witnesses"))
      r.check.witnesses.push_back({index_field(w, "j"), index_field(w, "k"), poly_from_json(field(w, "value"))});
    return r;
  }
  if (type == "verify-g") {
    GReport r{poly_from_json(field(j, "f")), poly_from_json(field(j, "g")), {}, {}};
    r.holomorphy.holomorphic = bool_field(j, "holomorphic");
    for (const auto& w : array_field(j, "witnesses"))
      r.holomorphy.witnesses.push_back({index_field(w, "index"), text_field(w, "variable"), poly_from_json(field(w, "derivative"))});
    r.identities.halving = identity_from(field(j, "halving"));
    r.identities.real_slice = identity_from(field(j, "real_slice"));
    return r;
  }
  if (type == "eliminate") {
    EliminationReport r;
    const Json& bp = field(j, "basepoint");
    for (const auto& v : array_field(bp, "x0")) r.basepoint.x0.push_back(v.get<long>());
    for (const auto& v : array_field(bp, "y0")) r.basepoint.y0.push_back(v.get<long>());
    r.q1 = poly_from_json(field(j, "q1"));
    r.q2 = poly_from_json(field(j, "q2"));
    r.r = poly_from_json(field(j, "r"));
    r.degenerate = bool_field(j, "degenerate");
    return r;
  }
  if (type == "discriminant") return DiscriminantReport{poly_from_json(field(j, "p")), text_field(j, "t"), poly_from_json(field(j, "d"))};
  if (type == "fibers") {
    BranchReport r;
    r.p = poly_from_json(field(j, "p"));
    r.d = poly_from_json(field(j, "d"));
    r.t = text_field(j, "t");
    for (const auto& s : array_field(j, "samples"))
      r.samples.push_back({assignment_from(field(s, "point")), bool_field(s, "on_locus"), index_field(s, "fiber_count"),
                           index_field(s, "exact_distinct")});
    if (const Json& c = field(j, "covering_degree"); !c.is_null()) r.covering_degree = index_value(c);
    for (const auto& v : array_field(j, "violations")) r.violations.push_back(index_value(v));
    return r;
  }
  if (type == "route") {
    RouteReport r;
    for (const auto& w : array_field(j, "waypoints"))
      r.path.waypoints.push_back({vector_from(field(w, "position")), kind_from(text_field(w, "kind")), simplex_from(field(w, "simplex"))});
    r.avoidance.avoids = bool_field(j, "avoids");
    if (const Json& v = field(j, "violation"); !v.is_null())
      r.avoidance.violation = AvoidanceViolation{index_field(v, "segment"), simplex_from(field(v, "face"))};
    return r;
  }
  if (type == "selftest") {
    SelftestReport r;
    r.seed = field(j, "seed").get<std::uint64_t>();
    for (const auto& it : array_field(j, "items"))
      r.items.push_back({text_field(it, "name"), bool_field(it, "passed"), text_field(it, "detail")});
    return r;
  }
  bad("unknown result type '" + type + "'");
}

}  // namespace

Json poly_to_json(const SparsePoly& p) { return Json{{"space", p.space().names()}, {"text", print_poly(p)}}; }

SparsePoly poly_from_json(const Json& j) {
  const Json& names = array_field(j, "space");
  std::vector<std::string> vars;
  for (const auto& n : names) {
    if (!n.is_string()) bad("variable names must be strings");
    vars.push_back(n.get<std::string>());
  }
  return parse_poly(text_field(j, "text"), VarSpace::from_names(vars));
}

Json to_json(const ReportDocument& doc) {
  return Json{{"schema_version", kSchemaVersion},
              {"toolkit", {{"name", "kholo"}, {"version", toolkit_version()}}},
              {"command", doc.command},
              {"inputs", doc.inputs},
              {"result", std::visit([](const auto& r) { return payload_json(r); }, doc.result)}};
}

ReportDocument from_json(const Json& j) {
  try {
    const Json& version = field(j, "schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
      bad("unsupported schema_version " + version.dump());
    ReportDocument doc{text_field(j, "command"), field(j, "inputs"), CartanReport{}};
    doc.result = payload_from(field(j, "result"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

std::string serialize(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument deserialize(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return from_json(j);
}

RouteInput route_input_from_json(const Json& j) {
  try {
    const std::size_t dim = index_field(j, "dimension");
    std::vector<RationalVector> vertices;
    for (const auto& row : array_field(j, "vertices")) vertices.push_back(vector_from(row));
    std::vector<Simplex> top;
    for (const auto& s : array_field(j, "top")) top.push_back(simplex_from(s));
    std::vector<Simplex> marked;
    if (j.contains("marked"))
      for (const auto& s : array_field(j, "marked")) marked.push_back(simplex_from(s));
    const Json& ends = array_field(j, "endpoints");
    if (ends.size() != 2) bad("endpoints must hold exactly two vertex indices");
    return RouteInput{SimplicialComplex(dim, std::move(vertices), std::move(top)), std::move(marked), index_value(ends[0]),
                      index_value(ends[1])};
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json route_input_to_json(const RouteInput& in) {
  Json vertices = Json::array();
  for (const auto& v : in.complex.vertices()) vertices.push_back(vector_json(v));
  Json top = Json::array();
  for (const auto& s : in.complex.top()) top.push_back(simplex_json(s));
  Json marked = Json::array();
  for (const auto& s : in.marked) marked.push_back(simplex_json(s));
  return Json{{"dimension", in.complex.dimension()},
              {"vertices", vertices},
              {"top", top},
              {"marked", marked},
              {"endpoints", {in.from, in.to}}};
}

}  // namespace kholo
