#pragma once

#include <array>
#include <string>
#include <vector>

#include "flagcoords/invariants.hpp"

namespace fc {

// Side `slot` of a face runs from corner slot to corner slot+1 (mod 3).
struct Slot {
  int face = 0;
  int slot = 0;
  bool operator==(const Slot&) const = default;
};

// Glued sides are identified reversing orientation: corner a.slot of a.face
// meets corner b.slot+1 of b.face and corner a.slot+1 meets corner b.slot.
// Side a is the canonical side of the edge.
struct Gluing {
  Slot a, b;
};

struct SideRef {
  Slot other;
  int edge = -1;
  int side = 0;  // 0 for the canonical side, 1 otherwise
};

struct Corner {
  int face = 0;
  int corner = 0;
  bool operator==(const Corner&) const = default;
};

// An oriented ideal triangulation of a punctured surface. Vertex labels are
// puncture ids; two faces may carry identical label triples.
class Triangulation {
 public:
  // Validates and indexes the complex; throws InvalidComplex.
  static Triangulation make(int genus, int punctures,
                            std::vector<std::array<int, 3>> faces,
                            std::vector<Gluing> gluings);

  static Triangulation canonical_torus();
  static Triangulation thrice_punctured_sphere();

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return static_cast<int>(gluings_.size()); }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  const SideRef& side(int face, int slot) const { return sides_[3 * face + slot]; }
  int label(int face, int corner) const { return faces_[face][corner]; }
  std::vector<int> vertices() const;

  // Corners around each puncture, counterclockwise: corner (f, c) is
  // followed by the corner glued across side c-1 of f.
  const std::vector<std::vector<Corner>>& corner_cycles() const { return cycles_; }
  const std::vector<int>& cycle_labels() const { return cycle_labels_; }
  int cycle_of_puncture(int label) const;

 private:
  int genus_ = 0, punctures_ = 0;
  std::vector<std::array<int, 3>> faces_;
  std::vector<Gluing> gluings_;
  std::vector<SideRef> sides_;
  std::vector<std::vector<Corner>> cycles_;
  std::vector<int> cycle_labels_;
};

enum class HTEdgeKind { Exchange, Transfer };

// Exchange edges go from 2e to 2e+1 along edge e (vertex 2e sits near the
// first corner of the canonical side). Transfer edges go from V_{c,c+1} to
// V_{c,c+2} inside a face.
struct HTEdge {
  int from = 0, to = 0;
  HTEdgeKind kind = HTEdgeKind::Exchange;
  int edge = -1;
  int face = -1;
  int corner = -1;
};

struct OrientedEdge {
  int edge = 0;
  bool reversed = false;
  bool operator==(const OrientedEdge&) const = default;
};

using HTPath = std::vector<OrientedEdge>;

class Hexagonation {
 public:
  int num_vertices() const { return num_vertices_; }
  const std::vector<HTEdge>& edges() const { return edges_; }
  const std::vector<std::array<OrientedEdge, 6>>& hexagons() const { return hexagons_; }

  // Vertex V_xy of a face, x and y distinct corners.
  int vertex(int face, int x, int y) const;
  int exchange_edge(int edge) const { return edge; }
  int transfer_edge(int face, int corner) const {
    return num_t_edges_ + 3 * face + corner;
  }
  int tail(const OrientedEdge& e) const;
  int head(const OrientedEdge& e) const;
  int euler_characteristic() const;

  // Converts a vertex sequence into edges; throws when two consecutive
  // vertices are not joined by exactly one edge.
  HTPath path_from_vertices(const std::vector<int>& vertices) const;
  HTPath hexagon_path(int face) const;

 private:
  friend Hexagonation build_hexagonation(const Triangulation& t);
  int num_vertices_ = 0;
  int num_t_edges_ = 0;
  std::vector<std::array<int, 9>> vertex_table_;
  std::vector<HTEdge> edges_;
  std::vector<std::array<OrientedEdge, 6>> hexagons_;
};

Hexagonation build_hexagonation(const Triangulation& t);

// Per-face delta values delta^c_{c+1,c+2}; the reversed ones are derived.
struct FaceDecoration {
  cplx Phi;
  std::array<cplx, 3> delta{};
};

// phi is indexed by edge (gluing order).
struct Decoration {
  std::vector<double> phi;
  std::vector<FaceDecoration> faces;
};

// m[e] is m along the canonical side of edge e, from its first corner to
// its second. Phi is per face.
struct MDecoration {
  std::vector<cplx> m;
  std::vector<cplx> Phi;
  double phi(int edge) const;
};

TripleFlagInvariant face_invariants(const Triangulation& t, const Decoration& d,
                                    int face);

// m from corner slot to corner slot+1 of a face.
cplx side_m(const Triangulation& t, const MDecoration& md, int face, int slot);

struct Residual {
  std::string constraint;
  std::string where;
  int face = -1;
  int edge = -1;
  double value = 0;
  double threshold = 0;
  bool ok = true;
};

struct ValidationReport {
  std::vector<Residual> items;
  bool ok = true;
  bool degenerate = false;
  std::vector<Residual> failures() const;
};

ValidationReport validate_decoration(const Triangulation& t, const Decoration& d,
                                     double tol = 1e-8);

MDecoration project_to_m(const Decoration& d, const Triangulation& t,
                         double tol = 1e-8);

}  // namespace fc
