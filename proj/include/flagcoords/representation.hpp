#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagcoords/elementary.hpp"
#include "flagcoords/surface.hpp"

namespace fc {

// SU(2,1) lifts of the elementary matrices on the edges of HT.
class Cocycle {
 public:
  Cocycle(Hexagonation hx, std::vector<Mat3> forward);

  const Hexagonation& hexagonation() const { return hx_; }
  const Mat3& forward(int edge) const { return fwd_[edge]; }
  const Mat3& matrix(const OrientedEdge& e) const {
    return e.reversed ? bwd_[e.edge] : fwd_[e.edge];
  }

 private:
  Hexagonation hx_;
  std::vector<Mat3> fwd_, bwd_;
};

Cocycle build_cocycle(const Triangulation& t, const Decoration& d);

// Product A_{s_k} ... A_{s_1} along the path.
Isometry holonomy(const Cocycle& c, const HTPath& path);

// Generator loops based at one HT vertex. A relator is a word in the
// single-letter generator names, upper case meaning inverse, and read left
// to right as concatenation of loops.
struct LoopSet {
  int base_vertex = 0;
  std::vector<std::pair<std::string, HTPath>> loops;
  std::string relator;
};

// Identification of a triangulation with the canonical torus: canonical face
// F corresponds to face face_map[F], its corner c to corner c + rotation[F].
struct TorusAlignment {
  std::array<int, 2> face_map{};
  std::array<int, 2> rotation{};
  int vertex(const Hexagonation& hx, int canonical_face, int x, int y) const;
};
std::optional<TorusAlignment> align_with_canonical_torus(const Triangulation& t);

// Loops a, b, c of the one-punctured torus with relator a b a^-1 b^-1 c.
LoopSet canonical_torus_loops(const Triangulation& t, const Hexagonation& hx);

// Closure of every non-tree edge of a BFS tree of the HT 1-skeleton.
LoopSet spanning_tree_loops(const Hexagonation& hx, int base_vertex);

struct Generator {
  std::string name;
  HTPath loop;
  Isometry image;
};

// rho(g) is the inverse of the holonomy of the loop of g, so that the flag
// map F(x) = hol(path to x)^{-1} F0 satisfies F(g x) = rho(g) F(x).
struct SurfaceRepresentation {
  int base_vertex = 0;
  std::vector<Generator> generators;
  std::string relator;
  double relation_residual = 0;  // PU(2,1) distance of the relator to 1
  Flag base_flag = Flag::standard();

  const Isometry& image(const std::string& name) const;
  Isometry evaluate(const std::string& word) const;
};

SurfaceRepresentation build_representation(const Triangulation& t,
                                           const Decoration& d,
                                           const LoopSet& loops);

// F(x) for the endpoint x of a path starting at the base vertex.
Flag flag_at(const Cocycle& c, const HTPath& path_from_base);

// Flags of every face corner for one consistent lift of each face.
std::vector<std::array<Flag, 3>> develop_flags(const Triangulation& t,
                                               const Cocycle& c,
                                               int base_vertex = 0);

Decoration decorate_from_flags(const Triangulation& t,
                               const std::vector<std::array<Flag, 3>>& flags);

}  // namespace fc
