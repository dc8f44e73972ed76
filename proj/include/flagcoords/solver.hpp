#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flagcoords/surface.hpp"

namespace fc {

struct TriangleSolveInput {
  cplx m12, m23, m31;
  cplx Phi123;
};

double phi_from_m(cplx m);  // |m/(m-1)|^2

struct TriangleSolution {
  std::array<cplx, 3> delta_pos{};  // delta^1_23, delta^2_31, delta^3_12
  std::array<cplx, 3> delta_neg{};
  std::array<Flag, 3> flags{Flag::standard(), Flag::standard(),
                            Flag::standard()};
  double m_residual = 0;  // max relative error of the reproduced m
};

struct TriangleSolutions {
  std::vector<TriangleSolution> solutions;
  std::array<double, 2> eigenvalues{};  // of M conj(M), descending
  bool used_bisection = false;
};

struct SolveOptions {
  // Angle of the boundary point of C_1 anchoring the frame of c_1^perp.
  double frame_angle = 0.0;
  bool force_bisection = false;
  int bisection_steps = 10000;
};

// The antiholomorphic map sigma_ij: bd C_i -> bd C_j sending p_i to the
// unique p_j with m((C_i,p_i),(C_j,p_j)) = m_ij, as p_j ~ S conj(p_i).
Mat3 m_correspondence(const Vec3& ci, const Vec3& cj, cplx mij);

// Solutions ordered by the eigenvalue of their fixed point, largest first.
TriangleSolutions solve_triangle(const TriangleSolveInput& in,
                                 const SolveOptions& opts = {});

// branch[f] picks solution 0 or 1 of face f.
Decoration lift_mdecoration(const Triangulation& t, const MDecoration& md,
                            const std::vector<int>& branch);

// Calls visit(branch, decoration) for each of the 2^N lifts, branches in
// lexicographic order with face 0 as the most significant bit.
void for_each_lift(
    const Triangulation& t, const MDecoration& md,
    const std::function<void(const std::vector<int>&, const Decoration&)>& visit);

std::vector<int> parse_branch(const std::string& bits, int faces);
std::string branch_string(const std::vector<int>& branch);

}  // namespace fc
