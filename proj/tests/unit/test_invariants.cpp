#include <gtest/gtest.h>

#include <cmath>

#include "flagcoords/invariants.hpp"
#include "flagcoords/random.hpp"
#include "oracles.hpp"

using namespace fc;

namespace {

const double kSqrt2 = std::sqrt(2.0);

const ComplexLine kC1(HVector(0.0, 1.0, 0.0));
const ComplexLine kC2(HVector(1.0, kSqrt2, 1.0));
const ComplexLine kC3(HVector(2.0, kSqrt2, 1.0));

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

// A null point on the line with polar c other than the given one.
Vec3 other_boundary_point(const Vec3& c, const Vec3& p) {
  for (double s : {0.3, 1.9, 4.1}) {
    Vec3 q = boundary_point(c, s);
    if (!oracle::projectively_equal(q, p, 1e-3)) return q;
  }
  return boundary_point(c, 5.0);
}

std::array<Flag, 3> worked_flags() {
  Flag f1(Vec3(1.0, 0.0, 0.0), kC1.c());
  Vec3 p2(-1.0 + kSqrt2, kSqrt2, -1.0 - kSqrt2);
  Flag f2(p2, kC2.c());
  Flag f3(other_boundary_point(kC3.c(), Vec3(1.0, 0.0, 0.0)), kC3.c());
  return {f1, f2, f3};
}

}  // namespace

TEST(PhiInvariant, Examples) {
  EXPECT_NEAR(phi_invariant(kC2, kC2), 1.0, 1e-15);
  EXPECT_NEAR(phi_invariant(kC1, ComplexLine(HVector(1.0, 0.0, 1.0))), 0.0, 1e-15);
  EXPECT_NEAR(phi_invariant(kC1, kC2), 0.5, 1e-15);
}

TEST(PhiInvariant, ScaleFree) {
  ComplexLine scaled(HVector(cplx(0, 3) * kC2.c()));
  EXPECT_NEAR(phi_invariant(kC1, scaled), 0.5, 1e-15);
}

TEST(BigPhiInvariant, WorkedTriple) {
  cplx phi = Phi_invariant(kC1, kC2, kC3);
  EXPECT_NEAR(phi.real(), 10.0 / 24.0, 1e-15);
  EXPECT_NEAR(phi.imag(), 0.0, 1e-15);
}

TEST(BigPhiInvariant, VanishesWithOrthogonalPair) {
  // c3 orthogonal to c1 but not to c2, and independent of both.
  ComplexLine c3(HVector(1.0, 0.0, 2.0));
  EXPECT_NEAR(std::abs(Phi_invariant(kC1, kC2, c3)), 0.0, 1e-15);
}

TEST(BigPhiInvariant, ModulusAndSymmetries) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    auto f = random_generic_triple(rng);
    const ComplexLine &a = f[0].line(), &b = f[1].line(), &c = f[2].line();
    cplx p = Phi_invariant(a, b, c);
    double prod = phi_invariant(a, b) * phi_invariant(b, c) * phi_invariant(c, a);
    EXPECT_NEAR(std::norm(p), prod, 1e-9 * prod);
    EXPECT_NEAR(std::abs(Phi_invariant(b, c, a) - p), 0.0, 1e-9 * std::abs(p));
    EXPECT_NEAR(std::abs(Phi_invariant(a, c, b) - std::conj(p)), 0.0, 1e-9 * std::abs(p));
    EXPECT_NEAR(std::abs(p - oracle::Phi(a.c(), b.c(), c.c())), 0.0, 1e-12 * std::abs(p));
  }
}

TEST(BigPhiInvariant, DependentPolarsRejected) {
  ComplexLine c3(HVector(kC1.c() + kC2.c()));
  EXPECT_EQ(code_of([&] { Phi_invariant(kC1, kC2, c3); }), ErrorCode::DegenerateTriple);
}

TEST(DeltaGram, WorkedTriple) {
  EXPECT_NEAR(delta_gram(kC1, kC2, kC3), -1.0 / 24.0, 1e-15);
  Mat3 g = gram_matrix(kC1.c(), kC2.c(), kC3.c());
  EXPECT_NEAR(g.determinant().real() / 24.0, -1.0 / 24.0, 1e-14);
}

TEST(DeltaGram, PermutationInvariantAndNegative) {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_generic_triple(rng);
    const ComplexLine &a = f[0].line(), &b = f[1].line(), &c = f[2].line();
    double d = delta_gram(a, b, c);
    EXPECT_LT(d, 0.0);
    EXPECT_NEAR(delta_gram(b, a, c), d, 1e-9 * std::abs(d));
    EXPECT_NEAR(delta_gram(c, b, a), d, 1e-9 * std::abs(d));
    Mat3 g = gram_matrix(a.c(), b.c(), c.c());
    double norms = (g(0, 0) * g(1, 1) * g(2, 2)).real();
    EXPECT_NEAR(g.determinant().real() / norms, d, 1e-9 * std::max(1.0, std::abs(d)));
  }
}

TEST(MInvariant, WorkedPair) {
  auto f = worked_flags();
  cplx m = m_invariant(f[0], f[1]);
  EXPECT_NEAR(m.real(), -1.0 - kSqrt2, 1e-12);
  EXPECT_NEAR(m.imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::norm(m / (m - 1.0)), 0.5, 1e-12);
}

TEST(MInvariant, SymmetryAndPhiRelation) {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    auto f = random_generic_triple(rng);
    cplx m12 = m_invariant(f[0], f[1]);
    EXPECT_NEAR(std::abs(m_invariant(f[1], f[0]) - std::conj(m12)), 0.0, 1e-9 * std::abs(m12));
    double phi = phi_invariant(f[0].line(), f[1].line());
    EXPECT_NEAR(std::norm(m12 / (m12 - 1.0)), phi, 1e-9 * phi);
    EXPECT_LE(oracle::relative_error(m12, oracle::m(f[0].p(), f[0].c(), f[1].p(), f[1].c())), 1e-12);
  }
}

TEST(MInvariant, ThroughLineJoiningPoints) {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    auto f = random_generic_triple(rng);
    ComplexLine joining = ComplexLine::through(f[0].point(), f[1].point());
    cplx phi = Phi_invariant(f[0].line(), f[1].line(), joining);
    cplx m = m_invariant(f[0], f[1]);
    EXPECT_LE(oracle::relative_error(m, phi / (phi - 1.0)), 1e-9);
  }
}

TEST(MInvariant, NonGenericPairs) {
  Flag f1 = Flag::standard();
  EXPECT_EQ(code_of([&] { m_invariant(f1, f1); }), ErrorCode::NonGenericPair);
  Vec3 orth(1.0, 0.0, 1.0);
  Flag f_orth(boundary_point(orth, 0.5), orth);
  EXPECT_EQ(code_of([&] { m_invariant(f1, f_orth); }), ErrorCode::NonGenericPair);
  // <e1, c> = conj(c3) = 0: the point of f1 lies on the second line.
  Vec3 c(0.3, 1.0, 0.0);
  Flag f_on(boundary_point(c, 0.4), c);
  EXPECT_EQ(code_of([&] { m_invariant(f1, f_on); }), ErrorCode::NonGenericPair);
}

TEST(DeltaInvariant, WorkedValues) {
  Flag f1 = Flag::standard();
  cplx d123 = delta_invariant(f1, kC2, kC3);
  cplx d132 = delta_invariant(f1, kC3, kC2);
  EXPECT_EQ(d123, cplx(5.0 / 4.0));
  EXPECT_NEAR(std::abs(d132 - 5.0 / 6.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d123 * d132 - 25.0 / 24.0), 0.0, 1e-15);
  EXPECT_NEAR(phi_invariant(kC2, kC3), 25.0 / 24.0, 1e-15);
}

TEST(DeltaInvariant, CircleConstraintOnWorkedData) {
  auto f = worked_flags();
  TripleFlagInvariant inv = triple_invariants(f[0], f[1], f[2]);
  EXPECT_NEAR(std::abs(inv.delta_pos[0] - 5.0 / 4.0), 0.0, 1e-14);
  EXPECT_LT(circle_residual(inv, 0, 1, 2), 1e-10);
  EXPECT_LT(circle_residual(inv, 0, 2, 1), 1e-10);
}

TEST(DeltaInvariant, PointOnLineRejected) {
  Flag f1 = Flag::standard();
  // <p1, c> = conj(c_3) vanishes.
  ComplexLine through_p1(HVector(1.0, 1.0, 0.0));
  EXPECT_EQ(code_of([&] { delta_invariant(f1, through_p1, kC3); }), ErrorCode::NonGeneric);
}

TEST(CircleConstraint, RejectedTrailingVariantFails) {
  // The trailing term phi_jk (1 - phi_ik) does not vanish on actual flags.
  Rng rng(35);
  int large = 0;
  for (int n = 0; n < 100; ++n) {
    auto f = random_generic_triple(rng);
    TripleFlagInvariant inv = triple_invariants(f[0], f[1], f[2]);
    const int i = 0, j = 1, k = 2;
    cplx d = inv.delta_of(i, j, k);
    double pij = inv.phi_of(i, j), pik = inv.phi_of(i, k), pjk = inv.phi_of(j, k);
    double t1 = (1 - pik) * std::norm(d);
    double t2 = 2 * ((inv.Phi_of(i, k, j) - pjk) * d).real();
    double adopted = t1 + t2 + pjk * (1 - pij);
    double variant = t1 + t2 + pjk * (1 - pik);
    double scale = std::max({std::abs(t1), std::abs(t2), std::abs(pjk * (1 - pij))});
    EXPECT_LT(std::abs(adopted) / scale, 1e-10);
    if (std::abs(variant) / scale > 1e-3) ++large;
  }
  EXPECT_GT(large, 90);
}

TEST(TripleInvariants, IsometryInvariance) {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    auto f = random_generic_triple(rng);
    Isometry g = Isometry::from_matrix(random_su21(rng));
    TripleFlagInvariant a = triple_invariants(f[0], f[1], f[2]);
    TripleFlagInvariant b = triple_invariants(g.apply(f[0]), g.apply(f[1]), g.apply(f[2]));
    for (int e = 0; e < 3; ++e) {
      EXPECT_NEAR(a.phi[e], b.phi[e], 1e-9 * a.phi[e]);
      EXPECT_LE(std::abs(a.delta_pos[e] - b.delta_pos[e]), 1e-9 * std::max(1.0, std::abs(a.delta_pos[e])));
      EXPECT_LE(std::abs(a.delta_neg[e] - b.delta_neg[e]), 1e-9 * std::max(1.0, std::abs(a.delta_neg[e])));
      EXPECT_LE(std::abs(a.m[e] - b.m[e]), 1e-9 * std::max(1.0, std::abs(a.m[e])));
    }
    EXPECT_LE(std::abs(a.Phi123 - b.Phi123), 1e-9 * std::max(1.0, std::abs(a.Phi123)));
  }
}

TEST(TripleInvariants, CyclicRelabeling) {
  Rng rng(37);
  for (int n = 0; n < 100; ++n) {
    auto f = random_generic_triple(rng);
    TripleFlagInvariant a = triple_invariants(f[0], f[1], f[2]);
    TripleFlagInvariant b = triple_invariants(f[1], f[2], f[0]);
    EXPECT_LE(oracle::relative_error(b.Phi123, a.Phi123), 1e-9);
    for (int e = 0; e < 3; ++e) {
      EXPECT_NEAR(b.phi[e], a.phi[(e + 1) % 3], 1e-9);
      EXPECT_LE(oracle::relative_error(b.delta_pos[e], a.delta_pos[(e + 1) % 3]), 1e-9);
      EXPECT_LE(oracle::relative_error(b.m[e], a.m[(e + 1) % 3]), 1e-9);
    }
  }
}

TEST(TripleInvariants, AccessorsMatchOracles) {
  Rng rng(38);
  auto f = random_generic_triple(rng);
  TripleFlagInvariant inv = triple_invariants(f[0], f[1], f[2]);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      EXPECT_NEAR(inv.phi_of(i, j), oracle::phi(f[i].c(), f[j].c()), 1e-12);
      EXPECT_LE(oracle::relative_error(inv.Phi_of(i, j, k), oracle::Phi(f[i].c(), f[j].c(), f[k].c())), 1e-12);
      EXPECT_LE(oracle::relative_error(inv.delta_of(i, j, k), oracle::delta(f[i].p(), f[j].c(), f[k].c())), 1e-10);
      EXPECT_LE(oracle::relative_error(inv.m_of(i, j), oracle::m(f[i].p(), f[i].c(), f[j].p(), f[j].c())), 1e-10);
    }
  }
}

TEST(TripleInvariants, NonGenericTripleRejected) {
  Flag f1 = Flag::standard();
  Flag f2(Vec3(-1.0 + kSqrt2, kSqrt2, -1.0 - kSqrt2), kC2.c());
  EXPECT_EQ(code_of([&] { triple_invariants(f1, f2, f1); }), ErrorCode::NonGenericTriple);
}

TEST(ReconstructLines, RoundTrip) {
  Rng rng(39);
  for (int n = 0; n < 200; ++n) {
    auto f = random_generic_triple(rng);
    TripleLineInvariant inv = triple_invariants(f[0], f[1], f[2]).lines();
    auto l = reconstruct_lines(inv);
    EXPECT_NEAR(phi_invariant(l[0], l[1]), inv.phi12, 1e-9 * inv.phi12);
    EXPECT_NEAR(phi_invariant(l[1], l[2]), inv.phi23, 1e-9 * inv.phi23);
    EXPECT_NEAR(phi_invariant(l[2], l[0]), inv.phi31, 1e-9 * inv.phi31);
    EXPECT_LE(oracle::relative_error(Phi_invariant(l[0], l[1], l[2]), inv.Phi123), 1e-9);
  }
}

TEST(ReconstructLines, WorkedTripleRoundTrip) {
  TripleLineInvariant inv = TripleLineInvariant::make(
      phi_invariant(kC1, kC2), phi_invariant(kC2, kC3), phi_invariant(kC3, kC1), Phi_invariant(kC1, kC2, kC3));
  EXPECT_NEAR(inv.Delta, -1.0 / 24.0, 1e-15);
  auto l = reconstruct_lines(inv);
  EXPECT_NEAR(phi_invariant(l[1], l[2]), 25.0 / 24.0, 1e-12);
  EXPECT_LE(oracle::relative_error(Phi_invariant(l[0], l[1], l[2]), 10.0 / 24.0), 1e-12);
}

TEST(ReconstructLines, PositiveDeltaRejected) {
  EXPECT_EQ(code_of([] { reconstruct_lines(TripleLineInvariant::make(4, 4, 4, 8.0)); }),
            ErrorCode::InvalidInvariants);
}

TEST(ReconstructFlags, PointsAreNullOnTheirLines) {
  Rng rng(40);
  for (int n = 0; n < 200; ++n) {
    auto f = random_generic_triple(rng);
    auto g = reconstruct_flags(triple_invariants(f[0], f[1], f[2]));
    for (const Flag& x : g) {
      double s = x.p().squaredNorm();
      EXPECT_LE(std::abs(oracle::herm(x.p(), x.p())), 1e-9 * s);
      EXPECT_LE(std::abs(oracle::herm(x.p(), x.c())), 1e-9 * x.p().norm() * x.c().norm());
    }
  }
}

TEST(ReconstructFlags, ConstraintViolationRejected) {
  Rng rng(41);
  auto f = random_generic_triple(rng);
  TripleFlagInvariant inv = triple_invariants(f[0], f[1], f[2]);
  inv.delta_pos[0] *= 1.001;
  EXPECT_GT(circle_residual(inv, 0, 1, 2), 1e-6);
  EXPECT_EQ(code_of([&] { reconstruct_flags(inv); }), ErrorCode::InvalidInvariants);
}

TEST(ConstraintSystem, VanishesOnActualFlags) {
  Rng rng(42);
  for (int n = 0; n < 100; ++n) {
    auto f = random_generic_triple(rng);
    TripleFlagInvariant inv = triple_invariants(f[0], f[1], f[2]);
    auto r = constraint_system(constraint_parameters(inv));
    ASSERT_EQ(r.size(), 10u);
    // Each residual relative to the size of its terms.
    const auto& ph = inv.phi;
    EXPECT_LT(std::abs(r[0]), 1e-9 * ph[0] * ph[1] * ph[2]);
    for (int i = 0; i < 3; ++i) {
      double s = std::max(1.0, ph[(i + 1) % 3]);
      EXPECT_LT(std::abs(r[1 + 2 * i]), 1e-9 * s);
      EXPECT_LT(std::abs(r[2 + 2 * i]), 1e-9 * s);
      double pij = ph[i], pjk = ph[(i + 1) % 3], pik = ph[(i + 2) % 3];
      cplx d = inv.delta_pos[i];
      double c = std::max({std::abs(1 - pik) * std::norm(d), 2 * std::abs(std::conj(inv.Phi123) - pjk) * std::abs(d),
                           pjk * std::abs(1 - pij)});
      EXPECT_LT(std::abs(r[7 + i]), 1e-9 * c);
    }
  }
}
