#include "flagcoords/elementary.hpp"

#include <cmath>
#include <numbers>

namespace fc {

namespace {

double branch_arg(cplx z) {
  double t = std::arg(z);
  return t <= -std::numbers::pi ? std::numbers::pi : t;
}

Mat3 tmat(cplx mu, double t) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = mu;
  m(0, 2) = cplx(0.0, t) * mu;
  m(1, 1) = std::conj(mu) / mu;
  m(2, 2) = 1.0 / std::conj(mu);
  return m;
}

}  // namespace

cplx theta(cplx z) {
  if (z == 0.0) return 0.0;
  return std::polar(std::abs(z), branch_arg(z) / 3.0);
}

StandardPair normalize_to_standard(const Flag& f1, const ComplexLine& line2,
                                   int lambda_root) {
  if (proj_equal(f1.c(), line2.c())) {
    throw Error(ErrorCode::NonGenericPair, "identical lines");
  }
  if (phi_invariant(f1.line(), line2) <= 1e-10) {
    throw Error(ErrorCode::NonGenericPair, "orthogonal lines");
  }
  if (on_line(f1.p(), line2.c())) {
    throw Error(ErrorCode::NonGenericPair, "point on the second line");
  }
  Mat3 n0 = flag_frame(f1.p(), f1.c()).inverse();
  Vec3 w = n0 * line2.c();
  w /= w(2);
  cplx a = w(0), b = w(1);
  double t = -a.imag();
  cplx lam = std::polar(std::sqrt(2.0) / std::abs(b),
                        (branch_arg(b) + 2.0 * std::numbers::pi * lambda_root) / 3.0);
  Mat3 g = Mat3::Zero();
  g(0, 0) = lam;
  g(0, 2) = cplx(0.0, t) * lam;
  g(1, 1) = std::conj(lam) / lam;
  g(2, 2) = 1.0 / std::conj(lam);
  StandardPair sp;
  sp.a = 2.0 * a.real() / std::norm(b);
  sp.normalizer = Isometry::from_matrix(g * n0);
  return sp;
}

TransferParams transfer_params(const TripleFlagInvariant& inv, int i, int j,
                               int k) {
  double pij = inv.phi_of(i, j), pjk = inv.phi_of(j, k);
  cplx Pikj = inv.Phi_of(i, k, j);
  TransferParams tp;
  tp.mu = theta(inv.delta_of(i, k, j) * pij / Pikj);
  tp.t = (2.0 * inv.delta_of(i, j, k) * (pjk - Pikj) / (pij * pjk)).imag();
  return tp;
}

Isometry transfer_matrix(const TransferParams& params) {
  if (params.mu == 0.0) {
    throw Error(ErrorCode::NonGenericTriple, "transfer parameter mu vanishes");
  }
  return Isometry::from_matrix(tmat(params.mu, params.t));
}

Isometry transfer_matrix(const TripleFlagInvariant& inv) {
  return transfer_matrix(transfer_params(inv, 0, 1, 2));
}

Isometry exchange_matrix(cplx m12) {
  if (m12 == 0.0 || m12 == 1.0) {
    throw Error(ErrorCode::InvalidM, "m must differ from 0 and 1");
  }
  const cplx z = 1.0 / std::conj(m12);
  const cplx zz = z * (z - 1.0);
  if (std::abs(zz) == 0.0) throw Error(ErrorCode::InvalidM, "z(z-1) vanishes");
  const cplx lam = 2.0 * theta(zz);
  const cplx zb = std::conj(z), lb = std::conj(lam);
  const double s2 = std::sqrt(2.0);
  const double nz = std::norm(z);
  const double d = 4.0 * std::norm(zz);
  const cplx x = z - zb - nz;
  Mat3 e;
  e(0, 0) = lam * x / d;
  e(0, 1) = s2 * zb * lam * x / d + lam / (s2 * (z - 1.0));
  e(0, 2) = lam / (1.0 - z) + lam * x * x / d;
  e(1, 0) = lb / (s2 * lam * (zb - 1.0));
  e(1, 1) = lb / (lam * (zb - 1.0));
  e(1, 2) = lb * (nz - z - zb) / (lam * (zb - 1.0) * s2);
  e(2, 0) = 1.0 / lb;
  e(2, 1) = s2 * zb / lb;
  e(2, 2) = (-nz + z - zb) / lb;
  return Isometry::from_matrix(e);
}

Isometry heisenberg_translation(cplx w, double tau) {
  const double s2 = std::sqrt(2.0);
  Mat3 h = Mat3::Identity();
  h(0, 1) = -std::conj(w) * s2;
  h(0, 2) = cplx(-std::norm(w), tau);
  h(1, 2) = w * s2;
  return Isometry::from_matrix(h);
}

Isometry exchange_isometry(const Flag& f1, const Flag& f2) {
  Isometry n = normalize_to_standard(f1, f2.line()).normalizer;
  return n.inverse() * exchange_matrix(m_invariant(f1, f2)) * n;
}

Isometry transfer_isometry(const Flag& fi, const ComplexLine& cj,
                           const ComplexLine& ck) {
  Isometry nij = normalize_to_standard(fi, cj).normalizer;
  Isometry nik = normalize_to_standard(fi, ck).normalizer;
  return nij.inverse() * nik;
}

Isometry exchange_isometry_geometric(const Flag& f1, const Flag& f2) {
  m_invariant(f1, f2);  // genericity gate
  RPlane i2 = lagrangian_fix_p_preserve_two_lines(f1.line(), f2.line(),
                                                  f1.point());
  Vec3 q = i2.apply(f2.p());
  RPlane i1 = lagrangian_swap_lines_and_points(f1.line(), f2.line(),
                                               f1.point(), HVector(q));
  return Isometry::from_matrix(i1.matrix() * i2.matrix().conjugate());
}

}  // namespace fc
