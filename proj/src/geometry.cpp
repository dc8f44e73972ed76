#include "flagcoords/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fc {

namespace {

double phi_of(const Vec3& c1, const Vec3& c2, const HForm& f) {
  cplx h12 = herm(c1, c2, f);
  return std::norm(h12) / (herm(c1, c1, f).real() * herm(c2, c2, f).real());
}

void require_null(const HVector& p, const HForm& f, const char* what) {
  if (vector_class(p, f) != VectorClass::Null) {
    throw Error(ErrorCode::NotNull, std::string(what) + " is not a null vector");
  }
}

void require_generic_lines(const Vec3& c1, const Vec3& c2, const HForm& f) {
  double phi = phi_of(c1, c2, f);
  if (phi <= 1e-10) throw Error(ErrorCode::OrthogonalLines, "phi = 0");
  if (std::abs(1.0 - phi) <= 1e-10) {
    throw Error(ErrorCode::AsymptoticLines, "phi = 1");
  }
}

Vec3 unit_positive(const Vec3& c, const HForm& f) {
  return c / std::sqrt(herm(c, c, f).real());
}

// Matrix of v -> B P conj(B^{-1} v), written as v -> M conj(v).
Mat3 in_basis(const Mat3& b, const Mat3& p) {
  return b * p * b.conjugate().inverse();
}

Mat3 swap_pattern(const Vec3& x) {
  cplx al = x(0), be = x(1), ga = x(2);
  Mat3 p = Mat3::Zero();
  p(0, 2) = al / std::conj(ga);
  p(1, 1) = be / std::conj(be);
  p(2, 0) = ga / std::conj(al);
  return p;
}

// Basis (m, c, n') with <m,n'> = 1 and c the unit polar of the line
// through m and n; its Gram matrix is J.
Mat3 null_pair_basis(const Vec3& m, const Vec3& n, const HForm& f) {
  cplx s = herm(m, n, f);
  if (std::abs(s) <= 1e-12 * m.norm() * n.norm()) {
    throw Error(ErrorCode::NonGeneric, "the two boundary points coincide");
  }
  Vec3 n1 = n / std::conj(s);
  Vec3 c = hermitian_cross(m, n1, f).vec();
  c = unit_positive(c, f);
  Mat3 b;
  b << m, c, n1;
  return b;
}

}  // namespace

ComplexLine::ComplexLine(const HVector& polar, const HForm& form)
    : polar_(polar), form_(form) {
  if (vector_class(polar_, form_) != VectorClass::Positive) {
    throw Error(ErrorCode::NotPositive, "polar vector must be positive");
  }
}

ComplexLine ComplexLine::through(const HVector& p, const HVector& q,
                                 const HForm& form) {
  return ComplexLine(hermitian_cross(p, q, form), form);
}

Flag::Flag(const ComplexLine& line, const HVector& point)
    : line_(line), point_(point) {
  require_null(point_, line_.form(), "flag point");
  double res = std::abs(herm(point_, line_.polar(), line_.form()));
  if (res > 1e-10 * point_.vec().norm() * line_.c().norm()) {
    throw Error(ErrorCode::PointNotOnLine,
                "flag point is not on the boundary of its line");
  }
}

Flag::Flag(const Vec3& point, const Vec3& polar)
    : Flag(ComplexLine(HVector(polar)), HVector(point)) {}

Flag Flag::standard() {
  return Flag(Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0));
}

cplx det_cube_root(const Mat3& m) {
  cplx d = m.determinant();
  double t = std::arg(d);
  if (t <= -std::numbers::pi) t = std::numbers::pi;
  return std::polar(std::cbrt(std::abs(d)), t / 3.0);
}

Mat3 su21_normalize(const Mat3& m) { return m / det_cube_root(m); }

double pu_distance(const Mat3& a, const Mat3& b) {
  Mat3 an = su21_normalize(a), bn = su21_normalize(b);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    cplx w = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
    best = std::min(best, max_abs(an - w * bn));
  }
  return best;
}

bool pu_equal(const Mat3& a, const Mat3& b, double tol) {
  return pu_distance(a, b) <= tol;
}

double form_residual(const Mat3& m, bool antiholomorphic, const HForm& form) {
  const Mat3& g = form.gram();
  Mat3 target = antiholomorphic ? Mat3(g.transpose()) : g;
  Mat3 r = m.transpose() * g * m.conjugate() - target;
  double s = max_abs(m);
  return max_abs(r) / (s * s * max_abs(g));
}

Isometry Isometry::from_matrix(const Mat3& m, bool antiholomorphic,
                               const HForm& form) {
  Mat3 n = su21_normalize(m);
  if (form_residual(n, antiholomorphic, form) > 1e-9) {
    throw Error(ErrorCode::NotIsometry, "matrix does not preserve the form");
  }
  return Isometry(n, antiholomorphic);
}

Isometry Isometry::from_matrix_unchecked(const Mat3& m, bool antiholomorphic) {
  return Isometry(su21_normalize(m), antiholomorphic);
}

Vec3 Isometry::apply(const Vec3& v) const {
  return anti_ ? Vec3(m_ * v.conjugate()) : Vec3(m_ * v);
}

Flag Isometry::apply(const Flag& f) const {
  return Flag(ComplexLine(apply(f.c()), f.line().form()), apply(f.p()));
}

ComplexLine Isometry::apply(const ComplexLine& l) const {
  return ComplexLine(apply(l.c()), l.form());
}

Isometry Isometry::inverse() const {
  Mat3 inv = m_.inverse();
  return Isometry(anti_ ? Mat3(inv.conjugate()) : inv, anti_);
}

Isometry Isometry::operator*(const Isometry& rhs) const {
  Mat3 r = anti_ ? Mat3(rhs.m_.conjugate()) : rhs.m_;
  return Isometry(m_ * r, anti_ != rhs.anti_);
}

RPlane RPlane::from_matrix(const Mat3& m, const HForm& form) {
  Mat3 n = su21_normalize(m);
  const double s = std::max(1.0, max_abs(n));
  if (max_abs(n * n.conjugate() - Mat3::Identity()) > 1e-9 * s * s) {
    throw Error(ErrorCode::NotIsometry, "reflection is not an involution");
  }
  if (form_residual(n, true, form) > 1e-9) {
    throw Error(ErrorCode::NotIsometry, "reflection does not preserve the form");
  }
  return RPlane(n);
}

Isometry RPlane::as_isometry() const {
  return Isometry::from_matrix(m_, true);
}

bool on_line(const Vec3& p, const Vec3& polar, const HForm& form) {
  return std::abs(herm(p, polar, form)) < TOL_ON_LINE * p.norm() * polar.norm();
}

double distance(const HVector& m, const HVector& n, const HForm& form) {
  if (vector_class(m, form) != VectorClass::Negative ||
      vector_class(n, form) != VectorClass::Negative) {
    throw Error(ErrorCode::NotInteriorPoint, "distance needs negative vectors");
  }
  double num = (herm(m, n, form) * herm(n, m, form)).real();
  double den = herm(m, m, form).real() * herm(n, n, form).real();
  double ch = std::sqrt(std::max(1.0, num / den));
  return 2.0 * std::acosh(ch);
}

Isometry complex_symmetry(const ComplexLine& line) {
  const Vec3& c = line.c();
  const Mat3& g = line.form().gram();
  cplx cc = herm(c, c, line.form());
  Vec3 gc = g * c.conjugate();
  Mat3 m = Mat3::Identity() - (2.0 / cc) * c * gc.transpose();
  return Isometry::from_matrix(m, false, line.form());
}

Mat3 flag_frame(const Vec3& p, const Vec3& c) {
  Vec3 cu = c / std::sqrt(hj(c, c).real());
  Vec3 r;
  double best = -1.0;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e(k) = 1.0;
    Vec3 cand = e - hj(e, cu) * cu;
    double score = std::abs(hj(cand, p)) / cand.norm();
    if (score > best) {
      best = score;
      r = cand;
    }
  }
  r /= std::conj(hj(p, r));
  Vec3 q = r - (hj(r, r).real() / 2.0) * p;
  Mat3 b;
  b << p, cu, q;
  return b;
}

std::pair<Vec3, Vec3> perp_signature_basis(const Vec3& c) {
  cplx cc = hj(c, c);
  Vec3 u[3];
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e(k) = 1.0;
    u[k] = e - (hj(e, c) / cc) * c;
  }
  // Euclidean-orthonormal basis (x0, x1) of the plane c^perp.
  int ia = 0;
  for (int k = 1; k < 3; ++k)
    if (u[k].squaredNorm() > u[ia].squaredNorm()) ia = k;
  Vec3 x0 = u[ia].normalized(), x1;
  double best = -1.0;
  for (int k = 0; k < 3; ++k) {
    if (k == ia) continue;
    Vec3 cand = u[k] - x0.dot(u[k]) * x0;
    if (cand.norm() > best) {
      best = cand.norm();
      x1 = cand;
    }
  }
  x1.normalize();
  // Diagonalize the restricted form. With v = conj(g0) x0 + conj(g1) x1,
  // <v,v> = g^* G g, so eigenvectors g of G give an orthogonal pair.
  Eigen::Matrix2cd g;
  g << hj(x0, x0), hj(x0, x1), hj(x1, x0), hj(x1, x1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(g);
  auto vec = [&](int k) {
    Eigen::Vector2cd e = es.eigenvectors().col(k).conjugate();
    return Vec3(e(0) * x0 + e(1) * x1);
  };
  Vec3 neg = vec(0), pos = vec(1);
  pos /= std::sqrt(std::abs(hj(pos, pos).real()));
  neg /= std::sqrt(std::abs(hj(neg, neg).real()));
  return {pos, neg};
}

Vec3 boundary_point(const Vec3& c, double s) {
  auto [pos, neg] = perp_signature_basis(c);
  return pos + std::polar(1.0, s) * neg;
}

Vec3 nearest_null_on_line(const Vec3& p, const Vec3& c) {
  auto [pos, neg] = perp_signature_basis(c);
  cplx x = hj(p, pos), y = -hj(p, neg);
  double ax = std::abs(x), ay = std::abs(y);
  if (ax == 0.0 || ay == 0.0) return p;
  double g = std::sqrt(ax * ay);
  return (x * (g / ax)) * pos + (y * (g / ay)) * neg;
}

RPlane lagrangian_fix_p_preserve_two_lines(const ComplexLine& line1,
                                           const ComplexLine& line2,
                                           const HVector& p1) {
  const HForm& f = line1.form();
  require_generic_lines(line1.c(), line2.c(), f);
  require_null(p1, f, "p1");
  if (!on_line(p1.vec(), line1.c(), f)) {
    throw Error(ErrorCode::PointNotOnLine, "p1 is not on the first line");
  }
  if (on_line(p1.vec(), line2.c(), f)) {
    throw Error(ErrorCode::PointOnLine, "p1 lies on the second line");
  }
  Vec3 u1 = unit_positive(line1.c(), f);
  Vec3 u2 = unit_positive(line2.c(), f);
  cplx b = herm(u1, u2, f);
  u2 *= b / std::abs(b);
  cplx x = herm(p1, u2, f);
  Vec3 p = p1.vec() * (std::conj(x) / std::abs(x));
  Mat3 basis;
  basis << p, u1, u2;
  return RPlane::from_matrix(in_basis(basis, Mat3::Identity()), f);
}

RPlane lagrangian_swap_lines_and_points(const ComplexLine& line1,
                                        const ComplexLine& line2,
                                        const HVector& p1, const HVector& p2) {
  const HForm& f = line1.form();
  require_generic_lines(line1.c(), line2.c(), f);
  require_null(p1, f, "p1");
  require_null(p2, f, "p2");
  if (!on_line(p1.vec(), line1.c(), f) || !on_line(p2.vec(), line2.c(), f)) {
    throw Error(ErrorCode::PointNotOnLine, "point not on its line");
  }
  if (on_line(p1.vec(), line2.c(), f) || on_line(p2.vec(), line1.c(), f)) {
    throw Error(ErrorCode::PointOnLine, "point lies on the other line");
  }
  Vec3 u1 = unit_positive(line1.c(), f);
  Vec3 u2 = unit_positive(line2.c(), f);
  cplx b = herm(u1, u2, f);
  u2 *= b / std::abs(b);
  Vec3 d = hermitian_cross(u1, u2, f).vec();
  Mat3 basis;
  basis << u1, u2, d;
  Vec3 x1 = basis.partialPivLu().solve(p1.vec());
  Vec3 x2 = basis.partialPivLu().solve(p2.vec());
  if (std::abs(x2(0)) <= 1e-14 * x2.norm() ||
      std::abs(x1(2)) <= 1e-14 * x1.norm()) {
    throw Error(ErrorCode::NonGeneric, "degenerate point coordinates");
  }
  cplx kappa = std::conj(x1(1)) / x2(0);
  cplx gamma = kappa * x2(2) / std::conj(x1(2));
  Mat3 pm = Mat3::Zero();
  pm(0, 1) = pm(1, 0) = 1.0;
  pm(2, 2) = gamma;
  return RPlane::from_matrix(in_basis(basis, pm), f);
}

RPlane lagrangian_preserve_line_swap_points(const ComplexLine& line1,
                                            const HVector& m,
                                            const HVector& n) {
  const HForm& f = line1.form();
  require_null(m, f, "m");
  require_null(n, f, "n");
  if (on_line(m.vec(), line1.c(), f) || on_line(n.vec(), line1.c(), f)) {
    throw Error(ErrorCode::PointOnLine, "boundary point lies on the line");
  }
  Mat3 basis = null_pair_basis(m.vec(), n.vec(), f);
  Vec3 x = basis.partialPivLu().solve(line1.c());
  if (std::abs(x(1)) <= 1e-12 * x.norm()) {
    throw Error(ErrorCode::NonUnique,
                "line is orthogonal to the line through the two points");
  }
  return RPlane::from_matrix(in_basis(basis, swap_pattern(x)), f);
}

RPlane lagrangian_fix_one_swap_two(const HVector& p1, const HVector& p2,
                                   const HVector& p3) {
  const HForm& f = HForm::standard();
  require_null(p1, f, "p1");
  require_null(p2, f, "p2");
  require_null(p3, f, "p3");
  cplx a = herm(p1, p2, f), b = herm(p2, p3, f), c = herm(p3, p1, f);
  double scale = std::abs(a) * std::abs(b) * std::abs(c);
  double n3 = p1.vec().squaredNorm() * p2.vec().squaredNorm() *
              p3.vec().squaredNorm();
  if (scale <= 1e-24 * n3) {
    throw Error(ErrorCode::NonGeneric, "two of the points coincide");
  }
  if (std::abs(2.0 * (a * b * c).real()) < 1e-9 * scale) {
    throw Error(ErrorCode::ConcyclicPoints,
                "the points lie on the boundary of one complex line");
  }
  Mat3 basis = null_pair_basis(p2.vec(), p3.vec(), f);
  Vec3 x = basis.partialPivLu().solve(p1.vec());
  return RPlane::from_matrix(in_basis(basis, swap_pattern(x)), f);
}

}  // namespace fc
