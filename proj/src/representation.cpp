#include "flagcoords/representation.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>

#include <fmt/format.h>

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }
int prv(int i) { return (i + 2) % 3; }

OrientedEdge orient(const Hexagonation& hx, int edge, int from) {
  const HTEdge& h = hx.edges()[edge];
  if (h.from == from) return {edge, false};
  if (h.to == from) return {edge, true};
  throw Error(ErrorCode::DisconnectedPath,
              fmt::format("edge {} does not meet vertex {}", edge, from));
}

HTPath reversed_path(const HTPath& p) {
  HTPath out(p.rbegin(), p.rend());
  for (auto& e : out) e.reversed = !e.reversed;
  return out;
}

// BFS tree of the HT 1-skeleton: the edge used to reach each vertex.
std::vector<OrientedEdge> bfs_tree(const Hexagonation& hx, int base,
                                   std::vector<int>* order = nullptr) {
  const int nv = hx.num_vertices();
  std::vector<std::vector<OrientedEdge>> adj(nv);
  for (int e = 0; e < static_cast<int>(hx.edges().size()); ++e) {
    adj[hx.edges()[e].from].push_back({e, false});
    adj[hx.edges()[e].to].push_back({e, true});
  }
  std::vector<OrientedEdge> parent(nv, OrientedEdge{-1, false});
  std::vector<char> seen(nv, 0);
  std::deque<int> queue{base};
  seen[base] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (order) order->push_back(v);
    for (const OrientedEdge& oe : adj[v]) {
      int w = hx.head(oe);
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = oe;
      queue.push_back(w);
    }
  }
  return parent;
}

HTPath tree_path(const Hexagonation& hx, const std::vector<OrientedEdge>& parent,
                 int v) {
  HTPath p;
  while (parent[v].edge >= 0) {
    p.push_back(parent[v]);
    v = hx.tail(parent[v]);
  }
  return HTPath(p.rbegin(), p.rend());
}

Mat3 inverse_su21(const Mat3& m) { return su21_normalize(m.inverse()); }

}  // namespace

Cocycle::Cocycle(Hexagonation hx, std::vector<Mat3> forward)
    : hx_(std::move(hx)), fwd_(std::move(forward)) {
  bwd_.reserve(fwd_.size());
  for (const Mat3& m : fwd_) bwd_.push_back(inverse_su21(m));
}

Cocycle build_cocycle(const Triangulation& t, const Decoration& d) {
  ValidationReport rep = validate_decoration(t, d);
  for (const Residual& r : rep.failures()) {
    if (r.constraint == "compatibility") {
      throw Error(ErrorCode::IncompatibleDecoration, "m differs across " + r.where);
    }
    throw Error(ErrorCode::InvalidDecoration,
                fmt::format("{} fails at {} (residual {:.3g})", r.constraint,
                            r.where, r.value));
  }
  Hexagonation hx = build_hexagonation(t);
  std::vector<TripleFlagInvariant> inv;
  for (int f = 0; f < t.num_faces(); ++f) inv.push_back(face_invariants(t, d, f));

  std::vector<Mat3> fwd(hx.edges().size());
  for (size_t i = 0; i < hx.edges().size(); ++i) {
    const HTEdge& h = hx.edges()[i];
    if (h.kind == HTEdgeKind::Exchange) {
      const Slot& a = t.gluings()[h.edge].a;
      fwd[i] = exchange_matrix(inv[a.face].m_of(a.slot, nxt(a.slot))).matrix();
    } else {
      const int c = h.corner;
      fwd[i] = transfer_matrix(transfer_params(inv[h.face], c, nxt(c), prv(c)))
                   .matrix();
    }
  }
  return Cocycle(std::move(hx), std::move(fwd));
}

Isometry holonomy(const Cocycle& c, const HTPath& path) {
  const Hexagonation& hx = c.hexagonation();
  Mat3 m = Mat3::Identity();
  for (size_t i = 0; i < path.size(); ++i) {
    if (path[i].edge < 0 || path[i].edge >= static_cast<int>(hx.edges().size())) {
      throw Error(ErrorCode::DisconnectedPath,
                  fmt::format("step {} names no edge", i));
    }
    if (i > 0 && hx.head(path[i - 1]) != hx.tail(path[i])) {
      throw Error(ErrorCode::DisconnectedPath,
                  fmt::format("step {} does not start where step {} ends", i,
                              i - 1));
    }
    m = c.matrix(path[i]) * m;
  }
  return Isometry::from_matrix_unchecked(m);
}

int TorusAlignment::vertex(const Hexagonation& hx, int canonical_face, int x,
                           int y) const {
  const int r = rotation[canonical_face];
  return hx.vertex(face_map[canonical_face], (x + r) % 3, (y + r) % 3);
}

std::optional<TorusAlignment> align_with_canonical_torus(const Triangulation& t) {
  if (t.genus() != 1 || t.punctures() != 1 || t.num_faces() != 2) return {};
  static const Triangulation canon = Triangulation::canonical_torus();
  for (int swap = 0; swap < 2; ++swap) {
    for (int r0 = 0; r0 < 3; ++r0) {
      for (int r1 = 0; r1 < 3; ++r1) {
        TorusAlignment al;
        al.face_map = {swap, 1 - swap};
        al.rotation = {r0, r1};
        bool ok = true;
        for (const Gluing& g : canon.gluings()) {
          const int fa = al.face_map[g.a.face], fb = al.face_map[g.b.face];
          const int sa = (g.a.slot + al.rotation[g.a.face]) % 3;
          const int sb = (g.b.slot + al.rotation[g.b.face]) % 3;
          ok = ok && t.side(fa, sa).other == Slot{fb, sb};
        }
        if (ok) return al;
      }
    }
  }
  return {};
}

LoopSet canonical_torus_loops(const Triangulation& t, const Hexagonation& hx) {
  auto al = align_with_canonical_torus(t);
  if (!al) {
    throw Error(ErrorCode::WrongTriangulation,
                "triangulation is not the two-triangle torus");
  }
  static const Triangulation canon = Triangulation::canonical_torus();
  // Canonical vertex 2e+k lies on the canonical side (F, s) of edge e.
  auto map = [&](int v) {
    const Slot& a = canon.gluings()[v / 2].a;
    const int x = v % 2 == 0 ? a.slot : nxt(a.slot);
    const int y = v % 2 == 0 ? nxt(a.slot) : a.slot;
    return al->vertex(hx, a.face, x, y);
  };
  auto loop = [&](std::initializer_list<int> vs) {
    std::vector<int> mapped;
    for (int v : vs) mapped.push_back(map(v));
    return hx.path_from_vertices(mapped);
  };
  LoopSet ls;
  ls.base_vertex = map(0);
  ls.loops = {{"a", loop({0, 3, 4, 5, 0})},
              {"b", loop({0, 5, 2, 3, 0})},
              {"c", loop({0, 5, 2, 1, 4, 3, 0})}};
  ls.relator = "abABc";
  return ls;
}

LoopSet spanning_tree_loops(const Hexagonation& hx, int base_vertex) {
  auto parent = bfs_tree(hx, base_vertex);
  LoopSet ls;
  ls.base_vertex = base_vertex;
  for (int e = 0; e < static_cast<int>(hx.edges().size()); ++e) {
    const HTEdge& h = hx.edges()[e];
    if (parent[h.to] == OrientedEdge{e, false} ||
        parent[h.from] == OrientedEdge{e, true}) {
      continue;
    }
    HTPath p = tree_path(hx, parent, h.from);
    p.push_back({e, false});
    HTPath back = reversed_path(tree_path(hx, parent, h.to));
    p.insert(p.end(), back.begin(), back.end());
    ls.loops.emplace_back(fmt::format("g{}", ls.loops.size() + 1), std::move(p));
  }
  return ls;
}

const Isometry& SurfaceRepresentation::image(const std::string& name) const {
  for (const Generator& g : generators)
    if (g.name == name) return g.image;
  throw std::invalid_argument("unknown generator " + name);
}

Isometry SurfaceRepresentation::evaluate(const std::string& word) const {
  Isometry acc;
  for (char ch : word) {
    const bool inv = std::isupper(static_cast<unsigned char>(ch));
    const std::string name(
        1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    const Isometry& g = image(name);
    acc = acc * (inv ? g.inverse() : g);
  }
  return acc;
}

SurfaceRepresentation build_representation(const Triangulation& t,
                                           const Decoration& d,
                                           const LoopSet& loops) {
  Cocycle c = build_cocycle(t, d);
  const Hexagonation& hx = c.hexagonation();
  SurfaceRepresentation rep;
  rep.base_vertex = loops.base_vertex;
  rep.relator = loops.relator;
  for (const auto& [name, path] : loops.loops) {
    if (path.empty() || hx.tail(path.front()) != loops.base_vertex ||
        hx.head(path.back()) != loops.base_vertex) {
      throw Error(ErrorCode::DisconnectedPath,
                  fmt::format("loop {} is not closed at vertex {}", name,
                              loops.base_vertex));
    }
    rep.generators.push_back({name, path, holonomy(c, path).inverse()});
  }
  if (!rep.relator.empty()) {
    rep.relation_residual =
        pu_distance(rep.evaluate(rep.relator).matrix(), Mat3::Identity());
    if (rep.relation_residual > 1e-6) {
      throw Error(ErrorCode::RelationViolation,
                  fmt::format("relator {} evaluates {:.3g} away from the identity",
                              rep.relator, rep.relation_residual));
    }
  }
  return rep;
}

Flag flag_at(const Cocycle& c, const HTPath& path_from_base) {
  return holonomy(c, path_from_base).inverse().apply(Flag::standard());
}

std::vector<std::array<Flag, 3>> develop_flags(const Triangulation& t,
                                               const Cocycle& c,
                                               int base_vertex) {
  const Hexagonation& hx = c.hexagonation();
  auto parent = bfs_tree(hx, base_vertex);
  const Flag f0 = Flag::standard();
  auto flag_of = [&](const Mat3& m) {
    return Isometry::from_matrix_unchecked(m).inverse().apply(f0);
  };
  std::vector<std::array<Flag, 3>> out;
  for (int f = 0; f < t.num_faces(); ++f) {
    const int v01 = hx.vertex(f, 0, 1), v02 = hx.vertex(f, 0, 2);
    const Mat3 m01 = holonomy(c, tree_path(hx, parent, v01)).matrix();
    const Mat3 m10 =
        c.matrix(orient(hx, t.side(f, 0).edge, v01)) * m01;
    const Mat3 m02 = c.matrix({hx.transfer_edge(f, 0), false}) * m01;
    const Mat3 m20 = c.matrix(orient(hx, t.side(f, 2).edge, v02)) * m02;
    out.push_back({flag_of(m01), flag_of(m10), flag_of(m20)});
  }
  return out;
}

Decoration decorate_from_flags(const Triangulation& t,
                               const std::vector<std::array<Flag, 3>>& flags) {
  if (static_cast<int>(flags.size()) != t.num_faces()) {
    throw Error(ErrorCode::InvalidDecoration,
                fmt::format("{} flag triples for {} faces", flags.size(),
                            t.num_faces()));
  }
  std::vector<TripleFlagInvariant> inv;
  for (int f = 0; f < t.num_faces(); ++f) {
    try {
      inv.push_back(triple_invariants(flags[f][0], flags[f][1], flags[f][2]));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("face {}: {}", f, e.detail()));
    }
  }
  Decoration d;
  d.phi.assign(t.num_edges(), 0.0);
  for (int e = 0; e < t.num_edges(); ++e) {
    const Gluing& g = t.gluings()[e];
    const double pa = inv[g.a.face].phi[g.a.slot];
    const double pb = inv[g.b.face].phi[g.b.slot];
    const cplx ma = inv[g.a.face].m_of(g.a.slot, nxt(g.a.slot));
    const cplx mb = inv[g.b.face].m_of(g.b.slot, nxt(g.b.slot));
    if (std::abs(pa - pb) > 1e-8 * std::max(1.0, pa) ||
        std::abs(ma - std::conj(mb)) > 1e-8 * std::abs(ma)) {
      throw Error(ErrorCode::IncompatibleDecoration,
                  fmt::format("flags disagree across edge {}", e));
    }
    d.phi[e] = pa;
  }
  for (const auto& I : inv) d.faces.push_back({I.Phi123, I.delta_pos});
  return d;
}

}  // namespace fc
