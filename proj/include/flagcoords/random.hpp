#pragma once

#include <cstdint>
#include <random>

#include "flagcoords/surface.hpp"

namespace fc {

using Rng = std::mt19937_64;

inline constexpr int RETRY_CAP = 10000;

// exp(X) for X in su(2,1) with Gaussian entries times scale.
Mat3 random_su21(Rng& rng, double scale = 1.0);
Flag random_flag(Rng& rng, double scale = 1.0);

// Three flags passing triple_invariants with every phi away from 1.
std::array<Flag, 3> random_generic_triple(Rng& rng, double scale = 1.0);

// Deterministic triangulation of the surface of genus g with p punctures:
// the two-triangle torus, the two-triangle sphere, or a fan of the 4g-gon,
// followed by one-to-three splits adding punctures.
Triangulation standard_triangulation(int genus, int punctures);

struct RandomInstance {
  Triangulation triangulation;
  std::vector<std::array<Flag, 3>> flags;
  Decoration decoration;
  int attempts = 0;
};

// Flags that are equivariant for a random representation: transition
// matrices on the edges off a spanning tree of the dual graph, and at each
// puncture the attracting flag of the peripheral product.
RandomInstance random_decorated_instance(const Triangulation& t, Rng& rng,
                                         double scale = 0.6,
                                         int retry_cap = RETRY_CAP);

}  // namespace fc
