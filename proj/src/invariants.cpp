#include "flagcoords/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }
int edge_index(int i, int j) { return j == nxt(i) ? i : j; }

Vec3 unit_polar(const Vec3& c) { return c / std::sqrt(hj(c, c).real()); }

void fail_triple(const std::string& why) {
  throw Error(ErrorCode::NonGenericTriple, why);
}

}  // namespace

TripleLineInvariant TripleLineInvariant::make(double phi12, double phi23,
                                              double phi31, cplx Phi123) {
  TripleLineInvariant t;
  t.phi12 = phi12;
  t.phi23 = phi23;
  t.phi31 = phi31;
  t.Phi123 = Phi123;
  t.Delta = 1.0 - phi12 - phi23 - phi31 + 2.0 * Phi123.real();
  return t;
}

double TripleFlagInvariant::phi_of(int i, int j) const {
  return phi[edge_index(i, j)];
}

cplx TripleFlagInvariant::Phi_of(int i, int j, int) const {
  return j == nxt(i) ? Phi123 : std::conj(Phi123);
}

cplx TripleFlagInvariant::delta_of(int i, int j, int) const {
  return j == nxt(i) ? delta_pos[i] : delta_neg[i];
}

cplx TripleFlagInvariant::m_of(int i, int j) const {
  return j == nxt(i) ? m[i] : std::conj(m[j]);
}

TripleLineInvariant TripleFlagInvariant::lines() const {
  return TripleLineInvariant::make(phi[0], phi[1], phi[2], Phi123);
}

TripleFlagInvariant TripleFlagInvariant::from_face_data(
    const std::array<double, 3>& phi, cplx Phi123,
    const std::array<cplx, 3>& delta_pos) {
  TripleFlagInvariant inv;
  inv.phi = phi;
  inv.Phi123 = Phi123;
  inv.delta_pos = delta_pos;
  for (int i = 0; i < 3; ++i) inv.delta_neg[i] = phi[nxt(i)] / delta_pos[i];
  inv.Delta = inv.lines().Delta;
  for (int e = 0; e < 3; ++e) inv.m[e] = m_from_invariants(inv, e, nxt(e));
  return inv;
}

double phi_invariant(const ComplexLine& l1, const ComplexLine& l2) {
  const HForm& f = l1.form();
  cplx h = herm(l1.polar(), l2.polar(), f);
  return std::norm(h) / (herm(l1.polar(), l1.polar(), f).real() *
                         herm(l2.polar(), l2.polar(), f).real());
}

namespace {

void require_basis(const Vec3& a, const Vec3& b, const Vec3& c) {
  Mat3 cols;
  cols << a.normalized(), b.normalized(), c.normalized();
  if (std::abs(cols.determinant()) <= 1e-12) {
    throw Error(ErrorCode::DegenerateTriple, "polar vectors are dependent");
  }
}

}  // namespace

cplx Phi_invariant(const ComplexLine& l1, const ComplexLine& l2,
                   const ComplexLine& l3) {
  require_basis(l1.c(), l2.c(), l3.c());
  const HForm& f = l1.form();
  const HVector &a = l1.polar(), &b = l2.polar(), &c = l3.polar();
  double norms = herm(a, a, f).real() * herm(b, b, f).real() *
                 herm(c, c, f).real();
  return herm(a, b, f) * herm(b, c, f) * herm(c, a, f) / norms;
}

double delta_gram(const ComplexLine& l1, const ComplexLine& l2,
                  const ComplexLine& l3) {
  cplx P = Phi_invariant(l1, l2, l3);
  return 1.0 - phi_invariant(l1, l2) - phi_invariant(l2, l3) -
         phi_invariant(l3, l1) + 2.0 * P.real();
}

cplx m_invariant(const Flag& f1, const Flag& f2) {
  const HForm& f = f1.line().form();
  if (proj_equal(f1.c(), f2.c())) {
    throw Error(ErrorCode::NonGenericPair, "identical lines");
  }
  if (phi_invariant(f1.line(), f2.line()) <= 1e-10) {
    throw Error(ErrorCode::NonGenericPair, "orthogonal lines");
  }
  if (on_line(f1.p(), f2.c(), f) || on_line(f2.p(), f1.c(), f)) {
    throw Error(ErrorCode::NonGenericPair, "point on the other line");
  }
  const HVector &p1 = f1.point(), &c1 = f1.line().polar();
  const HVector &p2 = f2.point(), &c2 = f2.line().polar();
  return herm(c1, c2, f) * herm(p1, p2, f) /
         (herm(c1, p2, f) * herm(p1, c2, f));
}

cplx delta_invariant(const Flag& f1, const ComplexLine& l2,
                     const ComplexLine& l3) {
  const HForm& f = f1.line().form();
  if (on_line(f1.p(), l2.c(), f) || on_line(f1.p(), l3.c(), f)) {
    throw Error(ErrorCode::NonGeneric, "point on one of the lines");
  }
  if (proj_equal(l2.c(), l3.c())) {
    throw Error(ErrorCode::NonGeneric, "identical lines");
  }
  const HVector &p1 = f1.point(), &c2 = l2.polar(), &c3 = l3.polar();
  return herm(c2, c3, f) * herm(p1, c2, f) /
         (herm(c2, c2, f).real() * herm(p1, c3, f));
}

TripleFlagInvariant triple_invariants(const Flag& f1, const Flag& f2,
                                      const Flag& f3) {
  const Flag* fl[3] = {&f1, &f2, &f3};
  Vec3 c[3], p[3];
  for (int i = 0; i < 3; ++i) {
    c[i] = unit_polar(fl[i]->c());
    p[i] = fl[i]->p().normalized();
  }
  for (int i = 0; i < 3; ++i) {
    int j = nxt(i);
    if (proj_equal(c[i], c[j])) {
      fail_triple("lines " + std::to_string(i) + " and " + std::to_string(j) +
                  " are identical");
    }
    if (std::norm(hj(c[i], c[j])) <= 1e-10) {
      fail_triple("lines " + std::to_string(i) + " and " + std::to_string(j) +
                  " are orthogonal");
    }
  }
  {
    Mat3 cols;
    cols << c[0].normalized(), c[1].normalized(), c[2].normalized();
    if (std::abs(cols.determinant()) <= 1e-12) {
      fail_triple("polar vectors do not form a basis");
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && on_line(p[i], c[j])) {
        fail_triple("point " + std::to_string(i) + " lies on line " +
                    std::to_string(j));
      }

  TripleFlagInvariant inv;
  for (int e = 0; e < 3; ++e) inv.phi[e] = std::norm(hj(c[e], c[nxt(e)]));
  inv.Phi123 = hj(c[0], c[1]) * hj(c[1], c[2]) * hj(c[2], c[0]);
  for (int i = 0; i < 3; ++i) {
    int j = nxt(i), k = nxt(j);
    inv.delta_pos[i] = hj(c[j], c[k]) * hj(p[i], c[j]) / hj(p[i], c[k]);
    inv.delta_neg[i] = hj(c[k], c[j]) * hj(p[i], c[k]) / hj(p[i], c[j]);
  }
  for (int e = 0; e < 3; ++e) {
    int j = nxt(e);
    inv.m[e] = hj(c[e], c[j]) * hj(p[e], p[j]) /
               (hj(c[e], p[j]) * hj(p[e], c[j]));
  }
  inv.Delta = inv.lines().Delta;
  return inv;
}

cplx m_from_invariants(const TripleFlagInvariant& inv, int i, int j) {
  int k = 3 - i - j;
  double pij = inv.phi_of(i, j), pik = inv.phi_of(i, k), pjk = inv.phi_of(j, k);
  cplx P = inv.Phi_of(i, j, k);
  cplx di = inv.delta_of(i, k, j);
  cplx dj = std::conj(inv.delta_of(j, k, i));
  cplx num = pik * pjk * (P - pij) + pik * (pij * pjk - P) * di +
             pjk * (pij * pik - P) * dj + P * (1.0 - pij) * di * dj;
  return num / (inv.Delta * pik * pjk);
}

double deltadelta_residual(const TripleFlagInvariant& inv, int i) {
  int j = nxt(i), k = nxt(j);
  double pjk = inv.phi_of(j, k);
  return std::abs(inv.delta_pos[i] * inv.delta_neg[i] - pjk) / pjk;
}

double circle_residual(const TripleFlagInvariant& inv, int i, int j, int k) {
  cplx d = inv.delta_of(i, j, k);
  double pik = inv.phi_of(i, k), pjk = inv.phi_of(j, k), pij = inv.phi_of(i, j);
  double t1 = (1.0 - pik) * std::norm(d);
  double t2 = 2.0 * ((inv.Phi_of(i, k, j) - pjk) * d).real();
  double t3 = pjk * (1.0 - pij);
  double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  return std::abs(t1 + t2 + t3) / scale;
}

double modulus_residual(const TripleLineInvariant& inv) {
  double lhs = std::norm(inv.Phi123);
  double rhs = inv.phi12 * inv.phi23 * inv.phi31;
  return std::abs(lhs - rhs) / std::max(lhs, rhs);
}

std::array<ComplexLine, 3> reconstruct_lines(const TripleLineInvariant& inv) {
  if (!(inv.phi12 > 0 && inv.phi23 > 0 && inv.phi31 > 0)) {
    throw Error(ErrorCode::InvalidInvariants, "phi must be positive");
  }
  if (modulus_residual(inv) > 1e-9) {
    throw Error(ErrorCode::InvalidInvariants,
                "|Phi|^2 differs from phi12 phi23 phi31");
  }
  double delta = 1.0 - inv.phi12 - inv.phi23 - inv.phi31 + 2.0 * inv.Phi123.real();
  if (!(delta < 0)) {
    throw Error(ErrorCode::InvalidInvariants, "Delta must be negative");
  }
  double s12 = std::sqrt(inv.phi12), s23 = std::sqrt(inv.phi23);
  cplx h31 = inv.Phi123 / (s12 * s23);
  // h(i,j) = <c_i, c_j>.
  Mat3 h;
  h << 1.0, s12, std::conj(h31),
       s12, 1.0, s23,
       h31, s23, 1.0;
  Eigen::SelfAdjointEigenSolver<Mat3> es(Mat3(h.conjugate()));
  const auto& w = es.eigenvalues();
  const auto& wv = es.eigenvectors();
  Mat3 s;
  for (int col = 0; col < 3; ++col) {
    int src = 2 - col;  // descending eigenvalues
    s.col(col) = wv.col(src) * std::sqrt(std::abs(w(src)));
  }
  const double r = 1.0 / std::sqrt(2.0);
  Mat3 pm;
  pm << 0.0, r, r,
        1.0, 0.0, 0.0,
        0.0, r, -r;
  Mat3 b = pm * s.adjoint();
  return {ComplexLine(HVector(Vec3(b.col(0)))),
          ComplexLine(HVector(Vec3(b.col(1)))),
          ComplexLine(HVector(Vec3(b.col(2))))};
}

std::array<Flag, 3> reconstruct_flags(const TripleFlagInvariant& inv) {
  const TripleLineInvariant lines_inv = inv.lines();
  if (modulus_residual(lines_inv) > 1e-8) {
    throw Error(ErrorCode::InvalidInvariants, "modulus relation violated");
  }
  if (!(lines_inv.Delta < 0)) {
    throw Error(ErrorCode::InvalidInvariants, "Delta must be negative");
  }
  for (int i = 0; i < 3; ++i) {
    int j = nxt(i), k = nxt(j);
    if (deltadelta_residual(inv, i) > 1e-8) {
      throw Error(ErrorCode::InvalidInvariants,
                  "delta product relation violated at flag " + std::to_string(i));
    }
    if (circle_residual(inv, i, j, k) > 1e-8 ||
        circle_residual(inv, i, k, j) > 1e-8) {
      throw Error(ErrorCode::InvalidInvariants,
                  "circle constraint violated at flag " + std::to_string(i));
    }
  }
  auto lines = reconstruct_lines(lines_inv);
  auto d = anti_dual_basis(lines[0].polar(), lines[1].polar(), lines[2].polar());
  std::array<Vec3, 3> pts;
  for (int i = 0; i < 3; ++i) {
    int j = nxt(i), k = nxt(j);
    const Vec3 &cj = lines[j].c(), &ck = lines[k].c();
    Vec3 p = hj(ck, cj) * d[j].vec() + hj(ck, ck) * inv.delta_neg[i] * d[k].vec();
    pts[i] = nearest_null_on_line(p, lines[i].c());
  }
  return {Flag(lines[0], HVector(pts[0])), Flag(lines[1], HVector(pts[1])),
          Flag(lines[2], HVector(pts[2]))};
}

std::vector<double> constraint_system(const std::array<double, 17>& x) {
  std::array<double, 3> phi = {x[0], x[1], x[2]};
  cplx P(x[3], x[4]);
  std::array<cplx, 3> dp, dn;
  for (int i = 0; i < 3; ++i) {
    dp[i] = cplx(x[5 + 4 * i], x[6 + 4 * i]);
    dn[i] = cplx(x[7 + 4 * i], x[8 + 4 * i]);
  }
  std::vector<double> r;
  r.push_back(std::norm(P) - phi[0] * phi[1] * phi[2]);
  for (int i = 0; i < 3; ++i) {
    cplx v = dp[i] * dn[i] - phi[nxt(i)];
    r.push_back(v.real());
    r.push_back(v.imag());
  }
  for (int i = 0; i < 3; ++i) {
    int j = nxt(i), k = nxt(j);
    double pik = phi[k], pjk = phi[j], pij = phi[i];
    // Phi_ikj is the conjugate of Phi_123 for a positive ordering (i,j,k).
    cplx Pikj = std::conj(P);
    r.push_back((1.0 - pik) * std::norm(dp[i]) +
                2.0 * ((Pikj - pjk) * dp[i]).real() + pjk * (1.0 - pij));
  }
  return r;
}

std::array<double, 17> constraint_parameters(const TripleFlagInvariant& inv) {
  std::array<double, 17> x{};
  x[0] = inv.phi[0];
  x[1] = inv.phi[1];
  x[2] = inv.phi[2];
  x[3] = inv.Phi123.real();
  x[4] = inv.Phi123.imag();
  for (int i = 0; i < 3; ++i) {
    x[5 + 4 * i] = inv.delta_pos[i].real();
    x[6 + 4 * i] = inv.delta_pos[i].imag();
    x[7 + 4 * i] = inv.delta_neg[i].real();
    x[8 + 4 * i] = inv.delta_neg[i].imag();
  }
  return x;
}

}  // namespace fc
