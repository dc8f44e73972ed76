#pragma once

#include <array>

#include "flagcoords/types.hpp"

namespace fc {

// Imaginary residue allowed in Hermitian symmetry checks.
inline constexpr double TOL_HERM = 1e-12;
// A vector is null when |<v,v>| <= TOL_NULL_REL * |v|^2.
inline constexpr double TOL_NULL_REL = 1e-10;

// A nonzero vector of C^3.
class HVector {
 public:
  HVector(cplx x1, cplx x2, cplx x3);
  HVector(const Vec3& v);
  template <typename Derived>
  HVector(const Eigen::MatrixBase<Derived>& expr) : HVector(Vec3(expr)) {}

  const Vec3& vec() const { return v_; }
  cplx operator[](int i) const { return v_(i); }

 private:
  Vec3 v_;
};

// Hermitian form of signature (2,1). The default instance is the
// antidiagonal matrix J.
class HForm {
 public:
  HForm();
  explicit HForm(const Mat3& gram);

  static const HForm& standard();

  const Mat3& gram() const { return gram_; }
  bool is_standard() const { return standard_; }

 private:
  Mat3 gram_;
  bool standard_ = true;
};

enum class VectorClass { Negative, Null, Positive };

struct Sign3 {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  bool operator==(const Sign3&) const = default;
};

Mat3 standard_J();

// <v,w> = v^T J conj(w) for the standard form; no validation.
inline cplx hj(const Vec3& v, const Vec3& w) {
  return v(0) * std::conj(w(2)) + v(1) * std::conj(w(1)) +
         v(2) * std::conj(w(0));
}

cplx herm(const HVector& v, const HVector& w,
          const HForm& form = HForm::standard());

VectorClass vector_class(const HVector& v,
                         const HForm& form = HForm::standard());

Mat3 gram_matrix(const HVector& v1, const HVector& v2, const HVector& v3,
                 const HForm& form = HForm::standard());

Sign3 signature(const Mat3& m);

std::array<HVector, 3> anti_dual_basis(const HVector& c1, const HVector& c2,
                                       const HVector& c3,
                                       const HForm& form = HForm::standard());

HVector hermitian_cross(const HVector& v, const HVector& w,
                        const HForm& form = HForm::standard());

// Scale-free distance between the points of CP^2 spanned by u and v. Both
// are divided by the coordinate where u is largest in modulus.
double proj_distance(const Vec3& u, const Vec3& v);
bool proj_equal(const Vec3& u, const Vec3& v, double tol = 1e-8);

double max_abs(const Mat3& m);

}  // namespace fc
