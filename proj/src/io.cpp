#include "flagcoords/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

void dump_string(std::string& out, const std::string& s) {
  out += json(s).dump();
}

void dump_rec(std::string& out, const json& j, int indent, int depth) {
  const std::string pad(indent * (depth + 1), ' ');
  const std::string close_pad(indent * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        dump_string(out, it.key());
        out += indent > 0 ? ": " : ":";
        dump_rec(out, it.value(), indent, depth + 1);
      }
      out += nl;
      out += close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays stay on one line.
      bool flat = j.size() <= 3;
      for (const auto& v : j) flat = flat && v.is_primitive();
      out += "[";
      if (!flat) out += nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += ",";
          out += flat ? (indent > 0 ? " " : "") : nl;
        }
        first = false;
        if (!flat) out += pad;
        dump_rec(out, v, indent, depth + 1);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else {
        std::string s = fmt::format("{:.17g}", x);
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        out += s;
      }
      return;
    }
    default:
      out += j.dump();
  }
}

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    schema(fmt::format("missing key \"{}\"", key));
  }
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return at(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    schema(fmt::format("key \"{}\": {}", key, e.what()));
  }
}

json slot_pair(int slot) { return json::array({slot, nxt(slot)}); }

}  // namespace

std::string dump(const json& j, int indent) {
  std::string out;
  dump_rec(out, j, indent, 0);
  if (indent > 0) out += "\n";
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                fmt::format("invalid JSON at byte {}: {}", e.byte, e.what()));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return parse_json(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path + ": " + e.detail());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema("complex numbers must be [re, im] arrays");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Triangulation& t) {
  json j;
  j["genus"] = t.genus();
  j["punctures"] = t.punctures();
  j["faces"] = json::array();
  for (const auto& f : t.faces()) j["faces"].push_back(json::array({f[0], f[1], f[2]}));
  j["gluings"] = json::array();
  for (const Gluing& g : t.gluings()) {
    j["gluings"].push_back(json::array({json::array({g.a.face, g.a.slot}),
                                        json::array({g.b.face, g.b.slot})}));
  }
  return j;
}

Triangulation triangulation_from_json(const json& j) {
  int genus = get<int>(j, "genus");
  int punctures = get<int>(j, "punctures");
  auto faces = get<std::vector<std::array<int, 3>>>(j, "faces");
  std::vector<Gluing> gluings;
  for (const auto& g : at(j, "gluings")) {
    std::array<std::array<int, 2>, 2> s;
    try {
      s = g.get<std::array<std::array<int, 2>, 2>>();
    } catch (const nlohmann::json::exception&) {
      schema("gluings must be [[face, slot], [face, slot]] pairs");
    }
    gluings.push_back({{s[0][0], s[0][1]}, {s[1][0], s[1][1]}});
  }
  return Triangulation::make(genus, punctures, std::move(faces),
                             std::move(gluings));
}

json to_json(const Triangulation& t, const Decoration& d) {
  json j;
  j["phi"] = json::array();
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot& a = t.gluings()[e].a;
    json item;
    item["edge"] = e;
    item["face"] = a.face;
    item["slots"] = slot_pair(a.slot);
    item["value"] = d.phi[e];
    j["phi"].push_back(item);
  }
  j["faces"] = json::array();
  for (int f = 0; f < t.num_faces(); ++f) {
    json item;
    item["face"] = f;
    item["Phi"] = complex_to_json(d.faces[f].Phi);
    item["delta"] = json::array();
    for (cplx x : d.faces[f].delta) item["delta"].push_back(complex_to_json(x));
    j["faces"].push_back(item);
  }
  return j;
}

Decoration decoration_from_json(const Triangulation& t, const json& j) {
  Decoration d;
  d.phi.assign(t.num_edges(), NAN);
  d.faces.assign(t.num_faces(), FaceDecoration{});
  std::vector<char> seen_e(t.num_edges(), 0), seen_f(t.num_faces(), 0);
  for (const auto& item : at(j, "phi")) {
    int e = get<int>(item, "edge");
    if (e < 0 || e >= t.num_edges()) schema(fmt::format("no edge {}", e));
    if (seen_e[e]++) schema(fmt::format("edge {} listed twice", e));
    d.phi[e] = get<double>(item, "value");
  }
  for (const auto& item : at(j, "faces")) {
    int f = get<int>(item, "face");
    if (f < 0 || f >= t.num_faces()) schema(fmt::format("no face {}", f));
    if (seen_f[f]++) schema(fmt::format("face {} listed twice", f));
    d.faces[f].Phi = complex_from_json(at(item, "Phi"));
    const json& dl = at(item, "delta");
    if (!dl.is_array() || dl.size() != 3) {
      schema(fmt::format("face {} needs three delta values", f));
    }
    for (int i = 0; i < 3; ++i) d.faces[f].delta[i] = complex_from_json(dl[i]);
  }
  for (int e = 0; e < t.num_edges(); ++e)
    if (!seen_e[e]) schema(fmt::format("phi of edge {} is missing", e));
  for (int f = 0; f < t.num_faces(); ++f)
    if (!seen_f[f]) schema(fmt::format("face {} is missing", f));
  return d;
}

json to_json(const Triangulation& t, const MDecoration& md) {
  json j;
  j["m"] = json::array();
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot& a = t.gluings()[e].a;
    json item;
    item["edge"] = e;
    item["face"] = a.face;
    item["slots"] = slot_pair(a.slot);
    item["value"] = complex_to_json(md.m[e]);
    j["m"].push_back(item);
  }
  j["Phi"] = json::array();
  for (int f = 0; f < t.num_faces(); ++f) {
    json item;
    item["face"] = f;
    item["value"] = complex_to_json(md.Phi[f]);
    j["Phi"].push_back(item);
  }
  return j;
}

MDecoration mdecoration_from_json(const Triangulation& t, const json& j) {
  MDecoration md;
  md.m.assign(t.num_edges(), NAN);
  md.Phi.assign(t.num_faces(), NAN);
  std::vector<char> seen_e(t.num_edges(), 0), seen_f(t.num_faces(), 0);
  for (const auto& item : at(j, "m")) {
    int e = get<int>(item, "edge");
    if (e < 0 || e >= t.num_edges()) schema(fmt::format("no edge {}", e));
    if (seen_e[e]++) schema(fmt::format("edge {} listed twice", e));
    md.m[e] = complex_from_json(at(item, "value"));
  }
  for (const auto& item : at(j, "Phi")) {
    int f = get<int>(item, "face");
    if (f < 0 || f >= t.num_faces()) schema(fmt::format("no face {}", f));
    if (seen_f[f]++) schema(fmt::format("face {} listed twice", f));
    md.Phi[f] = complex_from_json(at(item, "value"));
  }
  for (int e = 0; e < t.num_edges(); ++e)
    if (!seen_e[e]) schema(fmt::format("m of edge {} is missing", e));
  for (int f = 0; f < t.num_faces(); ++f)
    if (!seen_f[f]) schema(fmt::format("Phi of face {} is missing", f));
  return md;
}

json to_json(const Hexagonation& hx, const LoopSet& loops) {
  json j;
  j["base_vertex"] = loops.base_vertex;
  j["relator"] = loops.relator;
  j["loops"] = json::array();
  for (const auto& [name, path] : loops.loops) {
    json vs = json::array();
    if (!path.empty()) vs.push_back(hx.tail(path.front()));
    for (const auto& e : path) vs.push_back(hx.head(e));
    json item;
    item["name"] = name;
    item["vertices"] = vs;
    j["loops"].push_back(item);
  }
  return j;
}

LoopSet loops_from_json(const Hexagonation& hx, const json& j) {
  LoopSet ls;
  ls.base_vertex = get<int>(j, "base_vertex");
  if (j.contains("relator")) ls.relator = get<std::string>(j, "relator");
  for (const auto& item : at(j, "loops")) {
    auto vs = get<std::vector<int>>(item, "vertices");
    for (int v : vs)
      if (v < 0 || v >= hx.num_vertices()) schema(fmt::format("no HT vertex {}", v));
    ls.loops.emplace_back(get<std::string>(item, "name"),
                          hx.path_from_vertices(vs));
  }
  return ls;
}

json to_json(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok;
  j["degenerate"] = r.degenerate;
  j["residuals"] = json::array();
  for (const Residual& x : r.items) {
    json item;
    item["constraint"] = x.constraint;
    item["where"] = x.where;
    if (x.face >= 0) item["face"] = x.face;
    if (x.edge >= 0) item["edge"] = x.edge;
    item["value"] = x.value;
    item["threshold"] = x.threshold;
    item["ok"] = x.ok;
    j["residuals"].push_back(item);
  }
  return j;
}

json to_json(const CuspReport& r) {
  json j;
  j["puncture"] = r.puncture;
  j["type"] = to_string(r.type);
  j["mu"] = complex_to_json(r.mu);
  j["abs_mu"] = std::abs(r.mu);
  j["K"] = complex_to_json(r.K);
  j["modulus_defect"] = r.modulus_defect;
  j["K_scale"] = r.K_scale;
  j["steps"] = json::array();
  for (size_t i = 0; i < r.steps.size(); ++i) {
    json s;
    s["face"] = r.corners[i].face;
    s["corner"] = r.corners[i].corner;
    s["mu"] = complex_to_json(r.steps[i].mu);
    s["t"] = r.steps[i].t;
    j["steps"].push_back(s);
  }
  return j;
}

json to_json(const SurfaceRepresentation& r) {
  json j;
  j["base_vertex"] = r.base_vertex;
  j["generators"] = json::array();
  for (const Generator& g : r.generators) {
    json item;
    item["name"] = g.name;
    item["matrix"] = matrix_to_json(g.image.matrix());
    j["generators"].push_back(item);
  }
  j["relator"] = r.relator;
  if (!r.relator.empty()) j["relation_residual"] = r.relation_residual;
  return j;
}

}  // namespace fc
