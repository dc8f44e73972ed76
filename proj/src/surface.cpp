#include "flagcoords/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }
int prv(int i) { return (i + 2) % 3; }

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidComplex, why);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Triangulation Triangulation::make(int genus, int punctures,
                                  std::vector<std::array<int, 3>> faces,
                                  std::vector<Gluing> gluings) {
  Triangulation t;
  t.genus_ = genus;
  t.punctures_ = punctures;
  t.faces_ = std::move(faces);
  t.gluings_ = std::move(gluings);
  const int nf = t.num_faces();
  if (nf == 0) invalid("no faces");
  if (genus < 0 || punctures < 1) invalid("need genus >= 0 and punctures >= 1");
  if (2 - 2 * genus - punctures >= 0) {
    invalid("2 - 2g - p must be negative");
  }

  t.sides_.assign(3 * nf, SideRef{});
  for (int e = 0; e < t.num_edges(); ++e) {
    const Gluing& g = t.gluings_[e];
    for (int k = 0; k < 2; ++k) {
      const Slot& s = k == 0 ? g.a : g.b;
      const Slot& o = k == 0 ? g.b : g.a;
      if (s.face < 0 || s.face >= nf || s.slot < 0 || s.slot > 2) {
        invalid(fmt::format("gluing {} refers to a missing slot", e));
      }
      SideRef& ref = t.sides_[3 * s.face + s.slot];
      if (ref.edge >= 0) {
        invalid(fmt::format("slot (face {}, slot {}) is glued twice", s.face, s.slot));
      }
      ref = SideRef{o, e, k};
    }
  }
  for (int f = 0; f < nf; ++f)
    for (int s = 0; s < 3; ++s)
      if (t.sides_[3 * f + s].edge < 0) {
        invalid(fmt::format("slot (face {}, slot {}) is not glued", f, s));
      }

  // Labels must agree with the orientation-reversing identification.
  UnionFind uf(3 * nf);
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot &a = t.gluings_[e].a, &b = t.gluings_[e].b;
    int a0 = t.faces_[a.face][a.slot], a1 = t.faces_[a.face][nxt(a.slot)];
    int b0 = t.faces_[b.face][b.slot], b1 = t.faces_[b.face][nxt(b.slot)];
    if (a0 != b1 || a1 != b0) {
      if (a0 == b0 && a1 == b1) {
        invalid(fmt::format(
            "gluing {} at (face {}, slot {}) preserves orientation", e, a.face,
            a.slot));
      }
      invalid(fmt::format("gluing {} at (face {}, slot {}) joins mismatched labels",
                          e, a.face, a.slot));
    }
    uf.unite(3 * a.face + a.slot, 3 * b.face + nxt(b.slot));
    uf.unite(3 * a.face + nxt(a.slot), 3 * b.face + b.slot);
  }
  std::map<int, int> label_of_class;
  for (int f = 0; f < nf; ++f)
    for (int c = 0; c < 3; ++c) label_of_class[uf.find(3 * f + c)] = t.faces_[f][c];
  std::set<int> labels;
  for (auto& [cls, lab] : label_of_class) {
    if (!labels.insert(lab).second) {
      invalid(fmt::format("label {} is used by two distinct punctures", lab));
    }
  }
  if (static_cast<int>(labels.size()) != punctures) {
    invalid(fmt::format("complex has {} punctures, expected {}", labels.size(),
                        punctures));
  }
  if (nf - t.num_edges() != 2 - 2 * genus - punctures) {
    invalid(fmt::format("Euler characteristic {} differs from 2 - 2g - p = {}",
                        nf - t.num_edges(), 2 - 2 * genus - punctures));
  }
  // Connectedness of the dual graph.
  UnionFind dual(nf);
  for (const Gluing& g : t.gluings_) dual.unite(g.a.face, g.b.face);
  for (int f = 1; f < nf; ++f)
    if (dual.find(f) != dual.find(0)) invalid("complex is not connected");

  std::vector<char> seen(3 * nf, 0);
  for (int f = 0; f < nf; ++f) {
    for (int c = 0; c < 3; ++c) {
      if (seen[3 * f + c]) continue;
      std::vector<Corner> cyc;
      Corner cur{f, c};
      while (!seen[3 * cur.face + cur.corner]) {
        seen[3 * cur.face + cur.corner] = 1;
        cyc.push_back(cur);
        const Slot& o = t.side(cur.face, prv(cur.corner)).other;
        cur = Corner{o.face, o.slot};
      }
      t.cycle_labels_.push_back(t.faces_[f][c]);
      t.cycles_.push_back(std::move(cyc));
    }
  }
  return t;
}

Triangulation Triangulation::canonical_torus() {
  return make(1, 1, {{0, 0, 0}, {0, 0, 0}},
              {{{0, 0}, {1, 2}}, {{0, 1}, {1, 0}}, {{0, 2}, {1, 1}}});
}

Triangulation Triangulation::thrice_punctured_sphere() {
  return make(0, 3, {{0, 1, 2}, {0, 2, 1}},
              {{{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 0}}});
}

std::vector<int> Triangulation::vertices() const {
  std::vector<int> v = cycle_labels_;
  std::sort(v.begin(), v.end());
  return v;
}

int Triangulation::cycle_of_puncture(int label) const {
  for (size_t i = 0; i < cycle_labels_.size(); ++i)
    if (cycle_labels_[i] == label) return static_cast<int>(i);
  throw Error(ErrorCode::InvalidComplex, fmt::format("no puncture {}", label));
}

int Hexagonation::vertex(int face, int x, int y) const {
  return vertex_table_[face][3 * x + y];
}

int Hexagonation::tail(const OrientedEdge& e) const {
  const HTEdge& h = edges_[e.edge];
  return e.reversed ? h.to : h.from;
}

int Hexagonation::head(const OrientedEdge& e) const {
  const HTEdge& h = edges_[e.edge];
  return e.reversed ? h.from : h.to;
}

int Hexagonation::euler_characteristic() const {
  return num_vertices_ - static_cast<int>(edges_.size()) +
         static_cast<int>(hexagons_.size());
}

HTPath Hexagonation::path_from_vertices(const std::vector<int>& vs) const {
  HTPath path;
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    int found = 0;
    OrientedEdge pick;
    for (size_t e = 0; e < edges_.size(); ++e) {
      const HTEdge& h = edges_[e];
      if (h.from == vs[i] && h.to == vs[i + 1]) {
        ++found;
        pick = {static_cast<int>(e), false};
      }
      if (h.to == vs[i] && h.from == vs[i + 1]) {
        ++found;
        pick = {static_cast<int>(e), true};
      }
    }
    if (found != 1) {
      throw Error(ErrorCode::DisconnectedPath,
                  fmt::format("vertices {} and {} are joined by {} edges", vs[i],
                              vs[i + 1], found));
    }
    path.push_back(pick);
  }
  return path;
}

HTPath Hexagonation::hexagon_path(int face) const {
  const auto& h = hexagons_[face];
  return HTPath(h.begin(), h.end());
}

Hexagonation build_hexagonation(const Triangulation& t) {
  Hexagonation hx;
  const int nf = t.num_faces(), ne = t.num_edges();
  hx.num_vertices_ = 2 * ne;
  hx.num_t_edges_ = ne;
  hx.vertex_table_.assign(nf, {});
  auto near = [&](int f, int s, int k) {
    const SideRef& r = t.side(f, s);
    return 2 * r.edge + (r.side == 0 ? k : 1 - k);
  };
  for (int f = 0; f < nf; ++f) {
    auto& tab = hx.vertex_table_[f];
    tab.fill(-1);
    for (int x = 0; x < 3; ++x) {
      tab[3 * x + nxt(x)] = near(f, x, 0);
      tab[3 * x + prv(x)] = near(f, prv(x), 1);
    }
  }
  for (int e = 0; e < ne; ++e) {
    HTEdge h;
    h.from = 2 * e;
    h.to = 2 * e + 1;
    h.kind = HTEdgeKind::Exchange;
    h.edge = e;
    hx.edges_.push_back(h);
  }
  for (int f = 0; f < nf; ++f) {
    for (int c = 0; c < 3; ++c) {
      HTEdge h;
      h.from = hx.vertex(f, c, nxt(c));
      h.to = hx.vertex(f, c, prv(c));
      h.kind = HTEdgeKind::Transfer;
      h.face = f;
      h.corner = c;
      hx.edges_.push_back(h);
    }
  }
  for (int f = 0; f < nf; ++f) {
    std::array<OrientedEdge, 6> hex;
    for (int x = 0; x < 3; ++x) {
      int y = nxt(x);
      int e = t.side(f, x).edge;
      hex[2 * x] = {e, hx.vertex(f, x, y) != 2 * e};
      hex[2 * x + 1] = {hx.transfer_edge(f, y), true};
    }
    hx.hexagons_.push_back(hex);
  }
  return hx;
}

double MDecoration::phi(int edge) const {
  cplx v = m[edge];
  return std::norm(v / (v - 1.0));
}

TripleFlagInvariant face_invariants(const Triangulation& t, const Decoration& d,
                                    int face) {
  std::array<double, 3> phi;
  for (int s = 0; s < 3; ++s) phi[s] = d.phi[t.side(face, s).edge];
  const FaceDecoration& fd = d.faces[face];
  return TripleFlagInvariant::from_face_data(phi, fd.Phi, fd.delta);
}

cplx side_m(const Triangulation& t, const MDecoration& md, int face, int slot) {
  const SideRef& r = t.side(face, slot);
  cplx m = md.m[r.edge];
  return r.side == 0 ? m : std::conj(m);
}

std::vector<Residual> ValidationReport::failures() const {
  std::vector<Residual> out;
  for (const auto& r : items)
    if (!r.ok) out.push_back(r);
  return out;
}

ValidationReport validate_decoration(const Triangulation& t, const Decoration& d,
                                     double tol) {
  ValidationReport rep;
  auto add = [&](Residual r) {
    rep.ok = rep.ok && r.ok;
    rep.items.push_back(std::move(r));
  };
  if (static_cast<int>(d.phi.size()) != t.num_edges() ||
      static_cast<int>(d.faces.size()) != t.num_faces()) {
    add({"shape", "decoration size does not match the triangulation", -1, -1,
         0, 0, false});
    return rep;
  }
  for (int e = 0; e < t.num_edges(); ++e) {
    double p = d.phi[e];
    add({"phi-positive", fmt::format("edge {}", e), -1, e, p, 0.0,
         std::isfinite(p) && p > 0});
    if (std::abs(p - 1.0) < 1e-8) rep.degenerate = true;
  }
  if (!rep.ok) return rep;

  std::vector<TripleFlagInvariant> inv;
  for (int f = 0; f < t.num_faces(); ++f) {
    inv.push_back(face_invariants(t, d, f));
    const TripleFlagInvariant& I = inv.back();
    double mres = modulus_residual(I.lines());
    add({"modulus", fmt::format("face {}", f), f, -1, mres, tol, mres <= tol});
    add({"gram-determinant (Delta < 0)", fmt::format("face {}", f), f, -1,
         I.Delta, 0.0, I.Delta < 0});
    for (int c = 0; c < 3; ++c) {
      double r = circle_residual(I, c, nxt(c), prv(c));
      add({"circle", fmt::format("face {} corner {}", f, c), f, -1, r, tol,
           r <= tol});
    }
  }
  for (int e = 0; e < t.num_edges(); ++e) {
    const Gluing& g = t.gluings()[e];
    cplx ma = inv[g.a.face].m_of(g.a.slot, nxt(g.a.slot));
    cplx mb = inv[g.b.face].m_of(g.b.slot, nxt(g.b.slot));
    double r = std::abs(ma - std::conj(mb)) / std::abs(ma);
    add({"compatibility", fmt::format("edge {}", e), -1, e, r, tol,
         std::isfinite(r) && r <= tol});
  }
  return rep;
}

MDecoration project_to_m(const Decoration& d, const Triangulation& t,
                         double tol) {
  ValidationReport rep = validate_decoration(t, d, tol);
  for (const Residual& r : rep.items) {
    if (!r.ok && r.constraint == "compatibility") {
      throw Error(ErrorCode::IncompatibleDecoration,
                  "m differs across " + r.where);
    }
    if (!r.ok && (r.constraint == "shape" || r.constraint == "phi-positive")) {
      throw Error(ErrorCode::InvalidDecoration, r.constraint + " at " + r.where);
    }
  }
  MDecoration md;
  for (int e = 0; e < t.num_edges(); ++e) {
    const Slot& a = t.gluings()[e].a;
    md.m.push_back(face_invariants(t, d, a.face).m_of(a.slot, nxt(a.slot)));
  }
  for (const FaceDecoration& fd : d.faces) md.Phi.push_back(fd.Phi);
  return md;
}

}  // namespace fc
