#include "flagcoords/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }

Mat3 cross_matrix(const Vec3& a) {
  Mat3 m;
  m << 0.0, -a(2), a(1),
       a(2), 0.0, -a(0),
       -a(1), a(0), 0.0;
  return m;
}

double wrap(double x) {
  x = std::remainder(x, 2.0 * std::numbers::pi);
  return x;
}

// Frame (u, c, w) of C^3 with Gram J, u and w null in c1^perp.
struct CircleFrame {
  Mat3 basis;
  Mat3 inverse;
  Vec3 point(double theta) const {
    return std::cos(theta / 2) * Vec3(basis.col(0)) +
           cplx(0.0, std::sin(theta / 2)) * Vec3(basis.col(2));
  }
  // Parameter of the point nearest to the projective class of v.
  double parameter(const Vec3& v) const {
    Vec3 x = inverse * v;
    cplx a = cplx(0.0, 1.0) * x(0), b = x(2);
    return 2.0 * std::atan2((b * std::conj(a)).real(), std::norm(a));
  }
};

// Fixed points of theta -> param(A conj(p(theta))) by sign changes of the
// wrapped defect and bisection.
std::vector<Vec3> circle_map_fixed_points(const Mat3& a, const CircleFrame& fr,
                                          int steps) {
  auto defect = [&](double th) {
    return wrap(fr.parameter(a * fr.point(th).conjugate()) - th);
  };
  std::vector<Vec3> out;
  const double h = 2.0 * std::numbers::pi / steps;
  double x0 = 0.0, d0 = defect(x0);
  for (int i = 1; i <= steps; ++i) {
    double x1 = i * h, d1 = defect(x1);
    if ((d0 <= 0) != (d1 <= 0) && std::abs(d0 - d1) < std::numbers::pi) {
      double lo = x0, hi = x1, dlo = d0;
      while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi), dm = defect(mid);
        if ((dm <= 0) == (dlo <= 0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      out.push_back(fr.point(0.5 * (lo + hi)));
    }
    x0 = x1;
    d0 = d1;
  }
  return out;
}

std::optional<TriangleSolution> admit(const std::array<ComplexLine, 3>& lines,
                                      const Vec3& p1,
                                      const std::array<Mat3, 3>& s,
                                      const TriangleSolveInput& in) {
  try {
    Vec3 p2 = s[0] * p1.conjugate();
    Vec3 p3 = s[1] * p2.conjugate();
    std::array<Flag, 3> fl = {Flag(lines[0], HVector(p1)),
                              Flag(lines[1], HVector(p2)),
                              Flag(lines[2], HVector(p3))};
    TripleFlagInvariant inv = triple_invariants(fl[0], fl[1], fl[2]);
    const std::array<cplx, 3> target = {in.m12, in.m23, in.m31};
    double res = 0;
    for (int e = 0; e < 3; ++e) {
      res = std::max(res, std::abs(inv.m[e] - target[e]) / std::abs(target[e]));
    }
    if (!(res <= 1e-7)) return std::nullopt;
    TriangleSolution sol;
    sol.delta_pos = inv.delta_pos;
    sol.delta_neg = inv.delta_neg;
    sol.flags = fl;
    sol.m_residual = res;
    return sol;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

double phi_from_m(cplx m) { return std::norm(m / (m - 1.0)); }

Mat3 m_correspondence(const Vec3& ci, const Vec3& cj, cplx mij) {
  const cplx b = hj(ci, cj);
  const Vec3 a = standard_J() * cj.conjugate();
  Mat3 l = Mat3::Identity() - (mij / b) * ci * a.transpose();
  return cross_matrix(a) * standard_J() * l.conjugate();
}

TriangleSolutions solve_triangle(const TriangleSolveInput& in,
                                 const SolveOptions& opts) {
  const std::array<cplx, 3> ms = {in.m12, in.m23, in.m31};
  std::array<double, 3> phi;
  for (int e = 0; e < 3; ++e) {
    if (ms[e] == 0.0 || ms[e] == 1.0 || !std::isfinite(std::abs(ms[e]))) {
      throw Error(ErrorCode::InvalidM,
                  fmt::format("m of edge {} must differ from 0 and 1", e));
    }
    phi[e] = phi_from_m(ms[e]);
    if (std::abs(phi[e] - 1.0) < 1e-6) {
      throw Error(ErrorCode::DegenerateInput,
                  fmt::format("phi of edge {} equals 1", e));
    }
  }
  const auto lines = reconstruct_lines(
      TripleLineInvariant::make(phi[0], phi[1], phi[2], in.Phi123));
  std::array<Mat3, 3> s;
  for (int e = 0; e < 3; ++e) {
    s[e] = m_correspondence(lines[e].c(), lines[nxt(e)].c(), ms[e]);
  }
  const Mat3 a = s[2] * s[1].conjugate() * s[0];

  CircleFrame fr;
  fr.basis = flag_frame(boundary_point(lines[0].c(), opts.frame_angle),
                        lines[0].c());
  fr.inverse = fr.basis.inverse();
  Eigen::Matrix<cplx, 3, 2> u;
  u << fr.basis.col(0), fr.basis.col(2);
  Eigen::Matrix<cplx, 2, 3> uinv;
  uinv << fr.inverse.row(0), fr.inverse.row(2);
  const Eigen::Matrix2cd a2 = uinv * a * u.conjugate();
  const Eigen::Matrix2cd mm = a2 * a2.conjugate();

  TriangleSolutions out;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(mm);
  const auto& ev = es.eigenvalues();
  int big = ev(0).real() >= ev(1).real() ? 0 : 1;
  out.eigenvalues = {ev(big).real(), ev(1 - big).real()};
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(1)));

  std::vector<Vec3> cands;
  if (opts.force_bisection || std::abs(ev(0) - ev(1)) < 1e-8 * scale) {
    out.used_bisection = true;
    cands = circle_map_fixed_points(a, fr, opts.bisection_steps);
  } else {
    for (int k : {big, 1 - big}) {
      Vec3 p = u * es.eigenvectors().col(k);
      if (std::abs(hj(p, p)) > 1e-8 * p.squaredNorm()) continue;  // not null
      cands.push_back(nearest_null_on_line(p, lines[0].c()));
    }
  }
  for (const Vec3& p : cands) {
    if (auto sol = admit(lines, p, s, in)) out.solutions.push_back(*sol);
  }
  if (out.solutions.empty()) {
    throw Error(ErrorCode::NoAdmissibleSolution,
                "no fixed point gives a generic flag triple");
  }
  return out;
}

namespace {

TriangleSolutions solve_face(const Triangulation& t, const MDecoration& md,
                             int f) {
  TriangleSolveInput in{side_m(t, md, f, 0), side_m(t, md, f, 1),
                        side_m(t, md, f, 2), md.Phi[f]};
  try {
    return solve_triangle(in);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("face {}: {}", f, e.detail()));
  }
}

void check_shape(const Triangulation& t, const MDecoration& md) {
  if (static_cast<int>(md.m.size()) != t.num_edges() ||
      static_cast<int>(md.Phi.size()) != t.num_faces()) {
    throw Error(ErrorCode::InvalidDecoration,
                "m-decoration size does not match the triangulation");
  }
}

Decoration assemble(const Triangulation& t, const MDecoration& md,
                    const std::vector<TriangleSolutions>& sols,
                    const std::vector<int>& branch) {
  Decoration d;
  for (int e = 0; e < t.num_edges(); ++e) d.phi.push_back(md.phi(e));
  for (int f = 0; f < t.num_faces(); ++f) {
    const auto& list = sols[f].solutions;
    if (branch[f] < 0 || branch[f] >= static_cast<int>(list.size())) {
      throw Error(ErrorCode::NoAdmissibleSolution,
                  fmt::format("face {} has no solution {}", f, branch[f]));
    }
    d.faces.push_back({md.Phi[f], list[branch[f]].delta_pos});
  }
  return d;
}

}  // namespace

Decoration lift_mdecoration(const Triangulation& t, const MDecoration& md,
                            const std::vector<int>& branch) {
  check_shape(t, md);
  if (static_cast<int>(branch.size()) != t.num_faces()) {
    throw Error(ErrorCode::InvalidDecoration,
                fmt::format("branch has {} bits for {} faces", branch.size(),
                            t.num_faces()));
  }
  std::vector<TriangleSolutions> sols;
  for (int f = 0; f < t.num_faces(); ++f) sols.push_back(solve_face(t, md, f));
  return assemble(t, md, sols, branch);
}

void for_each_lift(
    const Triangulation& t, const MDecoration& md,
    const std::function<void(const std::vector<int>&, const Decoration&)>& visit) {
  check_shape(t, md);
  const int n = t.num_faces();
  std::vector<TriangleSolutions> sols;
  for (int f = 0; f < n; ++f) sols.push_back(solve_face(t, md, f));
  std::vector<int> branch(n, 0);
  while (true) {
    bool ok = true;
    for (int f = 0; f < n; ++f)
      ok = ok && branch[f] < static_cast<int>(sols[f].solutions.size());
    if (ok) visit(branch, assemble(t, md, sols, branch));
    int f = n - 1;
    while (f >= 0 && branch[f] == 1) branch[f--] = 0;
    if (f < 0) break;
    branch[f] = 1;
  }
}

std::vector<int> parse_branch(const std::string& bits, int faces) {
  if (static_cast<int>(bits.size()) != faces) {
    throw Error(ErrorCode::ParseError,
                fmt::format("branch '{}' must have {} bits", bits, faces));
  }
  std::vector<int> out;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::ParseError,
                  fmt::format("branch '{}' must consist of 0 and 1", bits));
    }
    out.push_back(c - '0');
  }
  return out;
}

std::string branch_string(const std::vector<int>& branch) {
  std::string s;
  for (int b : branch) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace fc
