#pragma once

#include <utility>

#include "flagcoords/hermitian.hpp"

namespace fc {

// Point-on-line test: |<p,c>| < TOL_ON_LINE * |p| * |c|.
inline constexpr double TOL_ON_LINE = 1e-9;

// A complex line, stored through its positive polar vector.
class ComplexLine {
 public:
  explicit ComplexLine(const HVector& polar,
                       const HForm& form = HForm::standard());

  const HVector& polar() const { return polar_; }
  const Vec3& c() const { return polar_.vec(); }
  const HForm& form() const { return form_; }

  // The line whose boundary contains the two null points p and q.
  static ComplexLine through(const HVector& p, const HVector& q,
                             const HForm& form = HForm::standard());

 private:
  HVector polar_;
  HForm form_;
};

// A complex line together with a boundary point of it.
class Flag {
 public:
  Flag(const ComplexLine& line, const HVector& point);
  Flag(const Vec3& point, const Vec3& polar);

  const ComplexLine& line() const { return line_; }
  const HVector& point() const { return point_; }
  const Vec3& p() const { return point_.vec(); }
  const Vec3& c() const { return line_.c(); }

  static Flag standard();

 private:
  ComplexLine line_;
  HVector point_;
};

// An SU(2,1) lift of a holomorphic isometry (v -> M v) or of an
// antiholomorphic one (v -> M conj(v)).
class Isometry {
 public:
  Isometry() : m_(Mat3::Identity()) {}

  // Rescales m to determinant one and checks form preservation.
  static Isometry from_matrix(const Mat3& m, bool antiholomorphic = false,
                              const HForm& form = HForm::standard());
  // Rescales to determinant one without checking the form.
  static Isometry from_matrix_unchecked(const Mat3& m,
                                        bool antiholomorphic = false);
  static Isometry identity() { return Isometry(); }

  const Mat3& matrix() const { return m_; }
  bool antiholomorphic() const { return anti_; }

  Vec3 apply(const Vec3& v) const;
  Flag apply(const Flag& f) const;
  ComplexLine apply(const ComplexLine& l) const;
  Isometry inverse() const;
  Isometry operator*(const Isometry& rhs) const;

 private:
  Isometry(const Mat3& m, bool anti) : m_(m), anti_(anti) {}
  Mat3 m_;
  bool anti_ = false;
};

// Lagrangian reflection v -> M conj(v) with M conj(M) = I.
class RPlane {
 public:
  static RPlane from_matrix(const Mat3& m,
                            const HForm& form = HForm::standard());
  const Mat3& matrix() const { return m_; }
  Isometry as_isometry() const;
  Vec3 apply(const Vec3& v) const { return m_ * v.conjugate(); }

 private:
  explicit RPlane(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

// Cube root of det(m) with argument in (-pi/3, pi/3].
cplx det_cube_root(const Mat3& m);
Mat3 su21_normalize(const Mat3& m);

// Distance in PU(2,1): entrywise max after normalizing both to det 1 and
// aligning by the best cube root of unity.
double pu_distance(const Mat3& a, const Mat3& b);
bool pu_equal(const Mat3& a, const Mat3& b, double tol = 1e-8);

// Residual of m^T G conj(m) = G (holomorphic) or = G^T (antiholomorphic),
// relative to |m|^2.
double form_residual(const Mat3& m, bool antiholomorphic,
                     const HForm& form = HForm::standard());

bool on_line(const Vec3& p, const Vec3& polar,
             const HForm& form = HForm::standard());

double distance(const HVector& m, const HVector& n,
                const HForm& form = HForm::standard());

Isometry complex_symmetry(const ComplexLine& line);

// Basis (p, c, q) of C^3 adapted to a flag in the standard form: c has unit
// norm, q is null in c^perp and <p,q> = 1, so the Gram matrix is J.
Mat3 flag_frame(const Vec3& p, const Vec3& c);

// Basis (e+, e-) of c^perp with <e+,e+> = 1, <e-,e-> = -1, <e+,e-> = 0.
std::pair<Vec3, Vec3> perp_signature_basis(const Vec3& c);

// A boundary point of the line with polar c; s is an angle on the boundary.
Vec3 boundary_point(const Vec3& c, double s);

// Null vector in c^perp closest to p, obtained by equalizing the moduli of
// its coordinates in perp_signature_basis(c).
Vec3 nearest_null_on_line(const Vec3& p, const Vec3& c);

RPlane lagrangian_fix_p_preserve_two_lines(const ComplexLine& line1,
                                           const ComplexLine& line2,
                                           const HVector& p1);

RPlane lagrangian_swap_lines_and_points(const ComplexLine& line1,
                                        const ComplexLine& line2,
                                        const HVector& p1, const HVector& p2);

RPlane lagrangian_preserve_line_swap_points(const ComplexLine& line1,
                                            const HVector& m,
                                            const HVector& n);

RPlane lagrangian_fix_one_swap_two(const HVector& p1, const HVector& p2,
                                   const HVector& p3);

}  // namespace fc
