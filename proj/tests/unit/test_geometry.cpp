#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "flagcoords/geometry.hpp"
#include "flagcoords/random.hpp"
#include "oracles.hpp"

using namespace fc;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double involution_defect(const RPlane& r) {
  const Mat3& m = r.matrix();
  return pu_distance(m * m.conjugate(), Mat3::Identity());
}

bool same_point(const Vec3& a, const Vec3& b, double tol = 1e-8) {
  return oracle::projectively_equal(a, b, tol);
}

Vec3 random_negative(Rng& rng) { return random_su21(rng) * Vec3(1.0, 0.0, -1.0); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Flag, RequiresNullPointOnLine) {
  EXPECT_EQ(code_of([] { Flag(Vec3(1.0, 0.0, -1.0), Vec3(0.0, 1.0, 0.0)); }), ErrorCode::NotNull);
  EXPECT_EQ(code_of([] { Flag(Vec3(0.0, 0.0, 1.0), Vec3(1.0, kSqrt2, 1.0)); }),
            ErrorCode::PointNotOnLine);
  EXPECT_EQ(code_of([] { ComplexLine(HVector(1.0, 0.0, -1.0)); }), ErrorCode::NotPositive);
}

TEST(Isometry, RejectsNonIsometry) {
  Mat3 m = Mat3::Identity();
  m(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { Isometry::from_matrix(m); }), ErrorCode::NotIsometry);
}

TEST(Isometry, RandomElementsAreSU21) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    Isometry g = Isometry::from_matrix(random_su21(rng));
    EXPECT_NEAR(std::abs(g.matrix().determinant() - 1.0), 0.0, 1e-9);
    EXPECT_LE(form_residual(g.matrix(), false), 1e-9);
    EXPECT_LE(pu_distance((g * g.inverse()).matrix(), Mat3::Identity()), 1e-9);
  }
}

TEST(PuDistance, IgnoresCubeRootsOfUnity) {
  Rng rng(22);
  Mat3 m = random_su21(rng);
  EXPECT_LE(pu_distance(m, std::polar(1.0, 2 * std::numbers::pi / 3) * m), 1e-12);
  EXPECT_GT(pu_distance(m, Mat3::Identity()), 1e-3);
}

TEST(Distance, Examples) {
  Rng rng(23);
  Vec3 m = random_negative(rng);
  EXPECT_NEAR(distance(m, m), 0.0, 1e-7);
  double d = distance(HVector(1.0, 0.0, -1.0), HVector(1.0, 0.0, -4.0));
  EXPECT_NEAR(std::pow(std::cosh(d / 2), 2), 25.0 / 16.0, 1e-12);
}

TEST(Distance, InvariantAndScaleFree) {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    Vec3 m = random_negative(rng), n = random_negative(rng);
    Mat3 g = random_su21(rng);
    double d = distance(m, n);
    EXPECT_NEAR(distance(g * m, g * n), d, 1e-9 * std::max(1.0, d));
    EXPECT_NEAR(distance(cplx(2, -1) * m, cplx(0, 3) * n), d, 1e-9 * std::max(1.0, d));
  }
}

TEST(Distance, RequiresInteriorPoints) {
  EXPECT_EQ(code_of([] { distance(HVector(1.0, 0.0, 0.0), HVector(1.0, 0.0, -1.0)); }),
            ErrorCode::NotInteriorPoint);
}

TEST(ComplexSymmetry, NegatesPolarFixesLine) {
  ComplexLine l(HVector(0.3, kSqrt2, 1.0));
  Isometry r = complex_symmetry(l);
  Vec3 c = l.c();
  Vec3 rc = r.apply(c);
  EXPECT_TRUE(same_point(rc, c));
  // On C^3 the reflection z -> z - 2 <z,c>/<c,c> c sends c to -c and has
  // determinant -1; the rescaling factor l has l^3 = -1, so the ratio
  // -l is a cube root of unity.
  cplx ratio = rc(1) / c(1);
  EXPECT_NEAR(std::abs(std::pow(ratio, 3) - 1.0), 0.0, 1e-12);
  // Points of the line are fixed.
  Vec3 p = boundary_point(c, 0.7);
  EXPECT_TRUE(same_point(r.apply(p), p));
}

TEST(ComplexSymmetry, StandardPairImage) {
  for (double a : {-0.5, 0.25, 1.0, 3.0}) {
    Isometry r = complex_symmetry(ComplexLine(HVector(a, kSqrt2, 1.0)));
    EXPECT_TRUE(same_point(r.apply(Vec3(1.0, 0.0, 0.0)), Vec3(-1.0, kSqrt2, 1.0)));
  }
}

TEST(ComplexSymmetry, IsAnInvolution) {
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    Flag f = random_flag(rng);
    Isometry r = complex_symmetry(f.line());
    EXPECT_LE(pu_distance((r * r).matrix(), Mat3::Identity()), 1e-9);
  }
}

TEST(LagrangianFixPreserve, StandardPositionIsIdentity) {
  for (double a : {0.25, 1.0, 3.0}) {
    RPlane r = lagrangian_fix_p_preserve_two_lines(ComplexLine(HVector(0.0, 1.0, 0.0)),
                                                   ComplexLine(HVector(a, kSqrt2, 1.0)),
                                                   HVector(1.0, 0.0, 0.0));
    EXPECT_LE(pu_distance(r.matrix(), Mat3::Identity()), 1e-12);
  }
}

TEST(LagrangianFixPreserve, RandomAction) {
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    Flag f1 = random_flag(rng), f2 = random_flag(rng);
    RPlane r = lagrangian_fix_p_preserve_two_lines(f1.line(), f2.line(), f1.point());
    EXPECT_LE(involution_defect(r), 1e-9);
    EXPECT_TRUE(same_point(r.apply(f1.p()), f1.p()));
    EXPECT_TRUE(same_point(r.apply(f1.c()), f1.c()));
    EXPECT_TRUE(same_point(r.apply(f2.c()), f2.c()));
  }
}

TEST(LagrangianFixPreserve, Errors) {
  ComplexLine c1(HVector(0.0, 1.0, 0.0));
  EXPECT_EQ(code_of([&] {
              lagrangian_fix_p_preserve_two_lines(c1, ComplexLine(HVector(1.0, 0.0, 1.0)),
                                                  HVector(1.0, 0.0, 0.0));
            }),
            ErrorCode::OrthogonalLines);
  EXPECT_EQ(code_of([&] { lagrangian_fix_p_preserve_two_lines(c1, c1, HVector(1.0, 0.0, 0.0)); }),
            ErrorCode::AsymptoticLines);
  EXPECT_EQ(code_of([&] {
              lagrangian_fix_p_preserve_two_lines(c1, ComplexLine(HVector(1.0, kSqrt2, 1.0)),
                                                  HVector(1.0, 1.0, -0.5));
            }),
            ErrorCode::PointNotOnLine);
}

TEST(LagrangianSwap, RandomActionAndSymmetry) {
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    Flag f1 = random_flag(rng), f2 = random_flag(rng);
    RPlane r = lagrangian_swap_lines_and_points(f1.line(), f2.line(), f1.point(), f2.point());
    EXPECT_LE(involution_defect(r), 1e-9);
    EXPECT_TRUE(same_point(r.apply(f1.p()), f2.p()));
    EXPECT_TRUE(same_point(r.apply(f2.p()), f1.p()));
    EXPECT_TRUE(same_point(r.apply(f1.c()), f2.c()));
    RPlane s = lagrangian_swap_lines_and_points(f2.line(), f1.line(), f2.point(), f1.point());
    EXPECT_LE(oracle::projective_matrix_distance(r.matrix(), s.matrix()), 1e-8);
  }
}

TEST(LagrangianPreserveLineSwapPoints, RandomAction) {
  Rng rng(28);
  for (int i = 0; i < 100; ++i) {
    Flag f = random_flag(rng);
    Vec3 m = random_flag(rng).p(), n = random_flag(rng).p();
    RPlane r = lagrangian_preserve_line_swap_points(f.line(), m, n);
    EXPECT_LE(involution_defect(r), 1e-9);
    EXPECT_TRUE(same_point(r.apply(m), n));
    EXPECT_TRUE(same_point(r.apply(n), m));
    EXPECT_TRUE(same_point(r.apply(f.c()), f.c()));
  }
}

TEST(LagrangianPreserveLineSwapPoints, AdaptedBasisMatrix) {
  // In the basis (m, c, n) = standard basis with m = e1, n = e3, a line polar
  // (al, be, ga) gives the antidiagonal/diagonal pattern.
  cplx al(0.4, 0.3), be(1.1, -0.7), ga(-0.2, 0.9);
  Vec3 polar(al, be, ga);
  ASSERT_GT(oracle::herm(polar, polar).real(), 0.0);
  RPlane r = lagrangian_preserve_line_swap_points(ComplexLine(HVector(polar)), Vec3(1.0, 0.0, 0.0),
                                                  Vec3(0.0, 0.0, 1.0));
  Mat3 expect = Mat3::Zero();
  expect(0, 2) = al / std::conj(ga);
  expect(1, 1) = be / std::conj(be);
  expect(2, 0) = ga / std::conj(al);
  EXPECT_LE(oracle::projective_matrix_distance(r.matrix(), expect), 1e-12);
}

TEST(LagrangianPreserveLineSwapPoints, PointOnLineRejected) {
  EXPECT_EQ(code_of([] {
              lagrangian_preserve_line_swap_points(ComplexLine(HVector(0.0, 1.0, 0.0)),
                                                   Vec3(1.0, 0.0, 0.0), Vec3(1.0, 1.0, -0.5));
            }),
            ErrorCode::PointOnLine);
}

TEST(LagrangianFixOneSwapTwo, RandomAction) {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    Vec3 p1 = random_flag(rng).p(), p2 = random_flag(rng).p(), p3 = random_flag(rng).p();
    RPlane r = lagrangian_fix_one_swap_two(p1, p2, p3);
    EXPECT_LE(involution_defect(r), 1e-9);
    EXPECT_TRUE(same_point(r.apply(p1), p1));
    EXPECT_TRUE(same_point(r.apply(p2), p3));
    EXPECT_TRUE(same_point(r.apply(p3), p2));
  }
}

TEST(LagrangianFixOneSwapTwo, PointsOnOneLineRejected) {
  Vec3 c(0.0, 1.0, 0.0);
  EXPECT_EQ(code_of([&] {
              lagrangian_fix_one_swap_two(boundary_point(c, 0.1), boundary_point(c, 1.3),
                                          boundary_point(c, 2.9));
            }),
            ErrorCode::ConcyclicPoints);
}

TEST(FlagFrame, GramIsJ) {
  Rng rng(30);
  for (int i = 0; i < 50; ++i) {
    Flag f = random_flag(rng);
    Mat3 b = flag_frame(f.p(), f.c());
    Mat3 g = gram_matrix(Vec3(b.col(0)), Vec3(b.col(1)), Vec3(b.col(2)));
    EXPECT_LE((g - standard_J()).cwiseAbs().maxCoeff(), 1e-9);
  }
}
