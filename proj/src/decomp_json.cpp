#include <exception>

#include "handle3/error.hpp"
#include "handle3/io.hpp"

namespace handle3 {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

// Runs f, turning JSON library exceptions into ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

const char* kPatchKeys[3] = {"f12", "f13", "f23"};

std::array<int, 3> triple(const json& j) {
  if (!j.is_array() || j.size() != 3) parse_fail("expected an array of three integers");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

SurfacePiece piece_from_json(const json& j) {
  return {j.at("genus").get<int>(), j.at("boundary").get<int>()};
}

PieceSet pieces_from_json(const json& j) {
  if (!j.is_array()) parse_fail("expected an array of pieces");
  PieceSet out;
  for (const auto& x : j) out.push_back(piece_from_json(x));
  return out;
}

CurveClass class_from_json(const json& j) {
  if (!j.is_object()) parse_fail("curve class must be an object");
  auto e = j.value("essential", json());
  if (e.is_null()) return CurveClass::unknown();
  CurveClass c;
  c.known = true;
  c.essential = e.get<bool>();
  auto m = j.value("meridian", json());
  c.meridian = m.is_null() ? 0 : m.get<int>();
  return c;
}

const json* unwrap(const json& j, const char* key) {
  if (j.is_object()) {
    if (j.contains(key)) return &j.at(key);
    if (j.contains("data") && j.at("data").is_object() && j.at("data").contains(key))
      return &j.at("data").at(key);
  }
  return nullptr;
}

}  // namespace

json to_json(const ManifoldForm& m) {
  if (m.is_sphere()) return {{"kind", "sphere3"}};
  return {{"kind", "lens"}, {"p", m.p}, {"q", m.q}};
}

ManifoldForm manifold_from_json(const json& j) {
  return guarded("manifold", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "sphere3") return ManifoldForm::sphere3();
    if (kind == "lens") return normalize(j.at("p").get<long>(), j.at("q").get<long>());
    parse_fail("unknown manifold kind '" + kind + "'");
  });
}

json to_json(const SurfacePiece& p) { return {{"genus", p.genus}, {"boundary", p.boundary}}; }

json to_json(const PieceSet& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

json to_json(const Profile& p) {
  json o;
  for (int q = 0; q < 3; ++q) o[kPatchKeys[q]] = to_json(p[q]);
  o["name"] = to_string(p);
  return o;
}

json to_json(const CurveClass& c) {
  if (!c.known) return {{"essential", nullptr}, {"meridian", nullptr}};
  return {{"essential", c.essential}, {"meridian", c.meridian}};
}

json to_json(const Decomposition& d) {
  json j;
  j["manifold"] = to_json(d.manifold);
  j["genera"] = d.genera;
  json patches, incidence;
  for (int q = 0; q < 3; ++q) {
    json ps = json::array(), inc = json::array();
    for (const auto& piece : d.patches[q]) {
      ps.push_back(to_json(piece.shape()));
      inc.push_back(piece.labels);
    }
    patches[kPatchKeys[q]] = ps;
    incidence[kPatchKeys[q]] = inc;
  }
  j["patches"] = patches;
  j["incidence"] = incidence;
  json loci = json::array();
  for (const auto& l : d.loci) {
    json cs = json::array();
    for (const auto& c : l.classes) cs.push_back(to_json(c));
    loci.push_back({{"id", l.id}, {"classes", cs}});
  }
  j["loci"] = loci;
  j["b"] = d.b();
  return j;
}

Decomposition decomposition_from_json(const json& in) {
  const json* p = unwrap(in, "decomposition");
  const json& j = p ? *p : in;
  return guarded("decomposition", [&] {
    if (!j.is_object()) parse_fail("decomposition must be an object");
    Decomposition d;
    d.manifold = manifold_from_json(j.at("manifold"));
    d.genera = triple(j.at("genera"));
    for (int q = 0; q < 3; ++q) {
      auto shapes = pieces_from_json(j.at("patches").at(kPatchKeys[q]));
      const auto& inc = j.at("incidence").at(kPatchKeys[q]);
      if (!inc.is_array() || inc.size() != shapes.size())
        parse_fail(std::string("incidence.") + kPatchKeys[q] + " must list one entry per piece");
      for (size_t k = 0; k < shapes.size(); ++k) {
        auto labels = inc[k].get<std::vector<int>>();
        if (static_cast<int>(labels.size()) != shapes[k].boundary)
          parse_fail(std::string("incidence.") + kPatchKeys[q] + "[" + std::to_string(k) +
                     "] has " + std::to_string(labels.size()) + " loci for " +
                     std::to_string(shapes[k].boundary) + " circles");
        d.patches[q].push_back(LabeledPiece{shapes[k].genus, labels});
      }
    }
    for (const auto& l : j.at("loci")) {
      BranchedLocus bl;
      bl.id = l.at("id").get<int>();
      const auto& cs = l.at("classes");
      if (!cs.is_array() || cs.size() != 3) parse_fail("each locus needs three classes");
      for (int i = 0; i < 3; ++i) bl.classes[i] = class_from_json(cs[i]);
      d.loci.push_back(bl);
    }
    canonicalize(d);
    return d;
  });
}

json to_json(const ArcDescriptor& a) {
  json j{{"piece", a.piece_id},
         {"endpoints", a.endpoint_circles},
         {"outcome", to_string(a.same_circle_outcome)}};
  if (a.split) j["split"] = {to_json((*a.split)[0]), to_json((*a.split)[1])};
  if (a.first_piece_circles) j["first_piece_circles"] = *a.first_piece_circles;
  return j;
}

ArcDescriptor arc_from_json(const json& j) {
  return guarded("arc", [&] {
    ArcDescriptor a;
    a.piece_id = j.value("piece", 0);
    const auto& e = j.at("endpoints");
    if (!e.is_array() || e.size() != 2) parse_fail("arc endpoints must be a pair");
    a.endpoint_circles = {e[0].get<int>(), e[1].get<int>()};
    if (j.contains("outcome")) {
      auto o = parse_arc_outcome(j.at("outcome").get<std::string>());
      if (!o) parse_fail("unknown arc outcome");
      a.same_circle_outcome = *o;
    }
    if (j.contains("split")) {
      const auto& s = j.at("split");
      if (!s.is_array() || s.size() != 2) parse_fail("split must name two pieces");
      a.split = std::array<SurfacePiece, 2>{piece_from_json(s[0]), piece_from_json(s[1])};
    }
    if (j.contains("first_piece_circles"))
      a.first_piece_circles = j.at("first_piece_circles").get<std::vector<int>>();
    return a;
  });
}

json to_json(const Witness& w) { return {{"handlebody", w.handlebody}, {"loci", w.loci}}; }

json to_json(const MoveRecord& m) {
  json j{{"kind", to_string(m.kind)}};
  switch (m.kind) {
    case MoveKind::type0:
      j["pair"] = m.pair;
      j["components"] = m.components;
      break;
    case MoveKind::type1:
      j["handlebody"] = m.handlebody;
      j["arc"] = to_json(m.arc);
      j["loci"] = m.locus_endpoints;
      break;
    case MoveKind::type1_destab:
      j["witness"] = to_json(m.witness);
      break;
  }
  return j;
}

json to_json(const MoveScript& s) {
  json a = json::array();
  for (const auto& m : s) a.push_back(to_json(m));
  return {{"moves", a}};
}

MoveScript script_from_json(const json& in) {
  const json* p = unwrap(in, "script");
  const json& j0 = p ? *p : in;
  return guarded("script", [&] {
    const json& j = j0.is_object() ? j0.at("moves") : j0;
    if (!j.is_array()) parse_fail("script must be an array of moves");
    MoveScript out;
    for (const auto& x : j) {
      MoveRecord m;
      const auto kind = x.at("kind").get<std::string>();
      if (kind == "type0") {
        m.kind = MoveKind::type0;
        const auto& pr = x.at("pair");
        if (!pr.is_array() || pr.size() != 2) parse_fail("type0 pair must have two entries");
        m.pair = {pr[0].get<int>(), pr[1].get<int>()};
        m.components = x.at("components").get<std::vector<int>>();
      } else if (kind == "type1") {
        m.kind = MoveKind::type1;
        m.handlebody = x.at("handlebody").get<int>();
        m.arc = arc_from_json(x.at("arc"));
        const auto& l = x.at("loci");
        if (!l.is_array() || l.size() != 2) parse_fail("type1 loci must be a pair");
        m.locus_endpoints = {l[0].get<int>(), l[1].get<int>()};
      } else if (kind == "type1_destab") {
        m.kind = MoveKind::type1_destab;
        const auto& w = x.at("witness");
        m.witness.handlebody = w.at("handlebody").get<int>();
        const auto& l = w.at("loci");
        if (!l.is_array() || l.size() != 2) parse_fail("witness loci must be a pair");
        m.witness.loci = {l[0].get<int>(), l[1].get<int>()};
      } else {
        parse_fail("unknown move kind '" + kind + "'");
      }
      out.push_back(m);
    }
    return out;
  });
}

json to_json(const CaseId& c) {
  return {{"genera", c.genera}, {"case", c.case_number}, {"name", to_string(c)}};
}

CaseId case_from_json(const json& j) {
  return guarded("case", [&] {
    CaseId c;
    c.genera = triple(j.at("genera"));
    c.case_number = j.at("case").get<int>();
    return c;
  });
}

json to_json(const EmbeddingPattern& p) {
  return {{"container", to_string(p.container)},
          {"pieces", to_json(p.pieces)},
          {"regions", to_json(p.regions)},
          {"tag", to_string(p.tag)}};
}

EmbeddingPattern pattern_from_json(const json& j) {
  return guarded("pattern", [&] {
    EmbeddingPattern p;
    const auto c = j.at("container").get<std::string>();
    if (c == "ball") p.container = Container::ball;
    else if (c == "solid_torus") p.container = Container::solid_torus;
    else parse_fail("unknown container '" + c + "'");
    p.pieces = canonical(pieces_from_json(j.at("pieces")));
    p.regions = canonical(pieces_from_json(j.at("regions")));
    p.tag = parse_pattern_tag(j.at("tag").get<std::string>());
    return p;
  });
}

}  // namespace handle3
