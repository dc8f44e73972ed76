#pragma once

#include "flagcoords/invariants.hpp"

namespace fc {

// Modulus preserved, argument in (-pi, pi] divided by three.
// Equivalently theta(z)^3 = |z|^2 z.
cplx theta(cplx z);

// The standard position of a flag and a line: p1 = (1,0,0), c1 = (0,1,0)
// and c2 = (a, sqrt 2, 1) with a real.
struct StandardPair {
  double a = 0;
  Isometry normalizer;
};

// lambda_root in {0,1,2} picks the cube root used for the stabilizer; all
// three give the same element of PU(2,1).
StandardPair normalize_to_standard(const Flag& f1, const ComplexLine& line2,
                                   int lambda_root = 0);

struct TransferParams {
  cplx mu{1.0, 0.0};
  double t = 0;
};

// Parameters of T^i_jk. It maps the frame where (C_i, p_i) and C_j are in
// standard position to the frame where (C_i, p_i) and C_k are.
TransferParams transfer_params(const TripleFlagInvariant& inv, int i, int j,
                               int k);
Isometry transfer_matrix(const TransferParams& params);
Isometry transfer_matrix(const TripleFlagInvariant& inv);  // T^0_12

// E(m_12) maps the frame of ((C_1,p_1), C_2) to the frame of ((C_2,p_2), C_1).
Isometry exchange_matrix(cplx m12);

Isometry heisenberg_translation(cplx w, double tau);

// World-frame counterparts, conjugated by the normalizer of (f_i, C_j).
Isometry exchange_isometry(const Flag& f1, const Flag& f2);
Isometry transfer_isometry(const Flag& fi, const ComplexLine& cj,
                           const ComplexLine& ck);

// Composition of two Lagrangian reflections: the one fixing p1 and
// preserving both lines, then the one swapping the lines.
Isometry exchange_isometry_geometric(const Flag& f1, const Flag& f2);

}  // namespace fc
