#pragma once

#include <string>
#include <vector>

#include "flagcoords/elementary.hpp"
#include "flagcoords/surface.hpp"

namespace fc {

enum class CuspType { Loxodromic, ScrewParabolic, ComplexReflection };
std::string to_string(CuspType t);

// Holonomy around a puncture: the product of the transfer matrices met
// walking counterclockwise around it. Its matrix is
//   [[mu, 0, K], [0, conj(mu)/mu, 0], [0, 0, 1/conj(mu)]].
struct CuspReport {
  int puncture = 0;
  std::vector<Corner> corners;
  std::vector<TransferParams> steps;
  cplx mu{1.0, 0.0};
  cplx K{0.0, 0.0};
  CuspType type = CuspType::Loxodromic;
  double modulus_defect = 0;  // ||mu| - 1|
  double K_scale = 1;         // max(1, sum |t_j|)
};

// ||mu| - 1| < 1e-9 separates loxodromic elements; among the others
// |K| < 1e-9 * K_scale separates complex reflections from screw parabolics.
CuspType classify_cusp(cplx mu, cplx K, double K_scale);

// Checks only the shape of the decoration, so perturbed data off the
// constraint locus can still be classified.
CuspReport cusp_holonomy(const Triangulation& t, const Decoration& d,
                         int puncture);
// Same walk started from a chosen corner of the puncture.
CuspReport cusp_holonomy_from(const Triangulation& t, const Decoration& d,
                              Corner start);

// HT path of the walk: the forward transfer edges of the corners in order.
HTPath cusp_loop(const Hexagonation& hx, const CuspReport& report);

struct TorusParabolicity {
  bool satisfied = false;
  double lhs = 0;  // |delta^1_23 delta^2_31 delta^3_12| on the first face
  double rhs = 0;  // same product on the second face, orderings reversed
  cplx K;
  cplx mu;
};

// Requires the two-triangle torus up to relabeling; throws WrongTriangulation.
TorusParabolicity torus_parabolicity_check(const Triangulation& t,
                                           const Decoration& d);

}  // namespace fc
