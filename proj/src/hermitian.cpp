#include "flagcoords/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace fc {

HVector::HVector(cplx x1, cplx x2, cplx x3) : HVector(Vec3(x1, x2, x3)) {}

HVector::HVector(const Vec3& v) : v_(v) {
  if (v_(0) == 0.0 && v_(1) == 0.0 && v_(2) == 0.0) {
    throw Error(ErrorCode::ZeroVector, "all three coordinates vanish");
  }
}

Mat3 standard_J() {
  Mat3 j = Mat3::Zero();
  j(0, 2) = j(1, 1) = j(2, 0) = 1.0;
  return j;
}

HForm::HForm() : gram_(standard_J()), standard_(true) {}

HForm::HForm(const Mat3& gram) : gram_(gram), standard_(false) {
  Sign3 s = signature(gram_);
  if (s != Sign3{2, 1, 0}) {
    throw Error(ErrorCode::BadSignature, "form must have signature (2,1)");
  }
  standard_ = (gram_ - standard_J()).cwiseAbs().maxCoeff() == 0.0;
}

const HForm& HForm::standard() {
  static const HForm j;
  return j;
}

cplx herm(const HVector& v, const HVector& w, const HForm& form) {
  if (form.is_standard()) return hj(v.vec(), w.vec());
  return v.vec().transpose() * form.gram() * w.vec().conjugate();
}

VectorClass vector_class(const HVector& v, const HForm& form) {
  double q = herm(v, v, form).real();
  double tol = TOL_NULL_REL * v.vec().squaredNorm();
  if (std::abs(q) <= tol) return VectorClass::Null;
  return q > 0 ? VectorClass::Positive : VectorClass::Negative;
}

Mat3 gram_matrix(const HVector& v1, const HVector& v2, const HVector& v3,
                 const HForm& form) {
  const HVector* vs[3] = {&v1, &v2, &v3};
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = herm(*vs[i], *vs[j], form);
  return g;
}

Sign3 signature(const Mat3& m) {
  double scale = std::max(1.0, max_abs(m));
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > TOL_HERM * scale) {
    throw Error(ErrorCode::NotHermitian, "matrix differs from its adjoint");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (m + m.adjoint()),
                                         Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double zero = 1e-10 * ev.cwiseAbs().maxCoeff();
  Sign3 s;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(ev(i)) <= zero) ++s.n_zero;
    else if (ev(i) > 0) ++s.n_pos;
    else ++s.n_neg;
  }
  return s;
}

namespace {

void require_independent(const Vec3& a, const Vec3& b, const Vec3& c) {
  Mat3 cols;
  cols.col(0) = a.normalized();
  cols.col(1) = b.normalized();
  cols.col(2) = c.normalized();
  if (std::abs(cols.determinant()) <= 1e-12) {
    throw Error(ErrorCode::DegenerateBasis, "vectors are linearly dependent");
  }
}

}  // namespace

std::array<HVector, 3> anti_dual_basis(const HVector& c1, const HVector& c2,
                                       const HVector& c3, const HForm& form) {
  require_independent(c1.vec(), c2.vec(), c3.vec());
  Mat3 c;
  c << c1.vec(), c2.vec(), c3.vec();
  // Rows of D^T solve D^T G conj(C) = I.
  Mat3 d = (form.gram() * c.conjugate()).inverse().transpose();
  return {HVector(Vec3(d.col(0))), HVector(Vec3(d.col(1))),
          HVector(Vec3(d.col(2)))};
}

HVector hermitian_cross(const HVector& v, const HVector& w,
                        const HForm& form) {
  Vec3 a = form.gram() * v.vec().conjugate();
  Vec3 b = form.gram() * w.vec().conjugate();
  // Eigen conjugates the cross product of complex vectors.
  Vec3 x = a.cross(b).conjugate();
  if (x.norm() <= 1e-12 * a.norm() * b.norm()) {
    throw Error(ErrorCode::DegenerateBasis, "cross product of parallel vectors");
  }
  return HVector(x);
}

double proj_distance(const Vec3& u, const Vec3& v) {
  int k = 0;
  u.cwiseAbs().maxCoeff(&k);
  if (std::abs(v(k)) == 0.0) return std::numeric_limits<double>::infinity();
  return ((u / u(k)) - (v / v(k))).cwiseAbs().maxCoeff();
}

bool proj_equal(const Vec3& u, const Vec3& v, double tol) {
  return proj_distance(u, v) < tol;
}

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace fc
