#pragma once

#include <array>
#include <vector>

#include "flagcoords/geometry.hpp"

namespace fc {

// Invariants of three complex lines. Edges are (1,2), (2,3), (3,1).
struct TripleLineInvariant {
  double phi12 = 0, phi23 = 0, phi31 = 0;
  cplx Phi123;
  double Delta = 0;

  static TripleLineInvariant make(double phi12, double phi23, double phi31,
                                  cplx Phi123);
};

// Full invariant record of three flags, indexed 0, 1, 2.
//   phi[e]        phi of edge e, where edge e joins flags e and e+1 (mod 3)
//   delta_pos[i]  delta^i_{i+1,i+2}
//   delta_neg[i]  delta^i_{i+2,i+1}
//   m[e]          m_{e,e+1}
struct TripleFlagInvariant {
  std::array<double, 3> phi{};
  cplx Phi123;
  std::array<cplx, 3> delta_pos{};
  std::array<cplx, 3> delta_neg{};
  std::array<cplx, 3> m{};
  double Delta = 0;

  double phi_of(int i, int j) const;
  cplx Phi_of(int i, int j, int k) const;
  cplx delta_of(int i, int j, int k) const;
  cplx m_of(int i, int j) const;
  TripleLineInvariant lines() const;

  // Builds a record from stored face data: the reversed deltas come from
  // delta^i_jk delta^i_kj = phi_jk and m from m_from_invariants.
  static TripleFlagInvariant from_face_data(const std::array<double, 3>& phi,
                                            cplx Phi123,
                                            const std::array<cplx, 3>& delta_pos);
};

double phi_invariant(const ComplexLine& l1, const ComplexLine& l2);
cplx Phi_invariant(const ComplexLine& l1, const ComplexLine& l2,
                   const ComplexLine& l3);
double delta_gram(const ComplexLine& l1, const ComplexLine& l2,
                  const ComplexLine& l3);

cplx m_invariant(const Flag& f1, const Flag& f2);
cplx delta_invariant(const Flag& f1, const ComplexLine& l2,
                     const ComplexLine& l3);

TripleFlagInvariant triple_invariants(const Flag& f1, const Flag& f2,
                                      const Flag& f3);

// m_ij expressed through phi, Phi and delta of the triple.
cplx m_from_invariants(const TripleFlagInvariant& inv, int i, int j);

// |delta^i_jk delta^i_kj - phi_jk| / phi_jk.
double deltadelta_residual(const TripleFlagInvariant& inv, int i);

// Residual of
//   (1 - phi_ik)|delta^i_jk|^2 + 2 Re[(Phi_ikj - phi_jk) delta^i_jk]
//     + phi_jk (1 - phi_ij) = 0
// divided by the largest of the three terms.
double circle_residual(const TripleFlagInvariant& inv, int i, int j, int k);

// ||Phi|^2 - phi12 phi23 phi31| relative to the larger side.
double modulus_residual(const TripleLineInvariant& inv);

std::array<ComplexLine, 3> reconstruct_lines(const TripleLineInvariant& inv);
std::array<Flag, 3> reconstruct_flags(const TripleFlagInvariant& inv);

// The 10 real constraints on the 17 real parameters
//   phi12, phi23, phi31, Re Phi, Im Phi,
//   then (Re, Im) of delta^0_12, delta^0_21, delta^1_20, delta^1_02,
//   delta^2_01, delta^2_10.
// Order of the output: modulus, three product relations (Re, Im), three
// circle relations.
std::vector<double> constraint_system(const std::array<double, 17>& x);
std::array<double, 17> constraint_parameters(const TripleFlagInvariant& inv);

}  // namespace fc
