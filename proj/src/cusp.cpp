#include "flagcoords/cusp.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "flagcoords/representation.hpp"

namespace fc {

namespace {

int nxt(int i) { return (i + 1) % 3; }
int prv(int i) { return (i + 2) % 3; }

void check_structure(const Triangulation& t, const Decoration& d) {
  if (static_cast<int>(d.phi.size()) != t.num_edges() ||
      static_cast<int>(d.faces.size()) != t.num_faces()) {
    throw Error(ErrorCode::InvalidDecoration,
                "decoration size does not match the triangulation");
  }
  for (int e = 0; e < t.num_edges(); ++e) {
    if (!(d.phi[e] > 0) || !std::isfinite(d.phi[e])) {
      throw Error(ErrorCode::InvalidDecoration,
                  fmt::format("phi of edge {} is not positive", e));
    }
  }
  for (int f = 0; f < t.num_faces(); ++f) {
    if (std::abs(d.faces[f].Phi) == 0.0) {
      throw Error(ErrorCode::InvalidDecoration,
                  fmt::format("Phi of face {} vanishes", f));
    }
    for (cplx x : d.faces[f].delta) {
      if (std::abs(x) == 0.0 || !std::isfinite(std::abs(x))) {
        throw Error(ErrorCode::InvalidDecoration,
                    fmt::format("delta of face {} is zero or not finite", f));
      }
    }
  }
}

}  // namespace

std::string to_string(CuspType t) {
  switch (t) {
    case CuspType::Loxodromic: return "Loxodromic";
    case CuspType::ScrewParabolic: return "ScrewParabolic";
    case CuspType::ComplexReflection: return "ComplexReflection";
  }
  return "?";
}

CuspType classify_cusp(cplx mu, cplx K, double K_scale) {
  if (std::abs(std::abs(mu) - 1.0) >= 1e-9) return CuspType::Loxodromic;
  if (std::abs(K) < 1e-9 * K_scale) return CuspType::ComplexReflection;
  return CuspType::ScrewParabolic;
}

CuspReport cusp_holonomy_from(const Triangulation& t, const Decoration& d,
                              Corner start) {
  check_structure(t, d);
  CuspReport rep;
  rep.puncture = t.label(start.face, start.corner);
  Corner cur = start;
  do {
    rep.corners.push_back(cur);
    const Slot& o = t.side(cur.face, prv(cur.corner)).other;
    cur = Corner{o.face, o.slot};
  } while (!(cur == start));

  double tsum = 0;
  cplx conj_prefix = 1.0;
  for (const Corner& c : rep.corners) {
    TripleFlagInvariant inv = face_invariants(t, d, c.face);
    TransferParams tp =
        transfer_params(inv, c.corner, nxt(c.corner), prv(c.corner));
    rep.steps.push_back(tp);
    tsum += std::abs(tp.t);
  }
  // K = i sum_j t_j (prod_{l>=j} mu_l) / (prod_{l<j} conj mu_l).
  const size_t n = rep.steps.size();
  std::vector<cplx> suffix(n + 1, 1.0);
  for (size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * rep.steps[j].mu;
  cplx k = 0.0;
  for (size_t j = 0; j < n; ++j) {
    k += rep.steps[j].t * suffix[j] / conj_prefix;
    conj_prefix *= std::conj(rep.steps[j].mu);
  }
  rep.mu = suffix[0];
  rep.K = cplx(0.0, 1.0) * k;
  rep.modulus_defect = std::abs(std::abs(rep.mu) - 1.0);
  rep.K_scale = std::max(1.0, tsum);
  rep.type = classify_cusp(rep.mu, rep.K, rep.K_scale);
  return rep;
}

CuspReport cusp_holonomy(const Triangulation& t, const Decoration& d,
                         int puncture) {
  const int idx = t.cycle_of_puncture(puncture);
  return cusp_holonomy_from(t, d, t.corner_cycles()[idx].front());
}

HTPath cusp_loop(const Hexagonation& hx, const CuspReport& report) {
  HTPath p;
  for (const Corner& c : report.corners) {
    p.push_back({hx.transfer_edge(c.face, c.corner), false});
  }
  return p;
}

TorusParabolicity torus_parabolicity_check(const Triangulation& t,
                                           const Decoration& d) {
  auto al = align_with_canonical_torus(t);
  if (!al) {
    throw Error(ErrorCode::WrongTriangulation,
                "triangulation is not the two-triangle torus");
  }
  check_structure(t, d);
  auto inv_of = [&](int cf) { return face_invariants(t, d, al->face_map[cf]); };
  const TripleFlagInvariant i0 = inv_of(0), i1 = inv_of(1);
  const int r0 = al->rotation[0], r1 = al->rotation[1];
  auto d0 = [&](int i, int j, int k) {
    return i0.delta_of((i + r0) % 3, (j + r0) % 3, (k + r0) % 3);
  };
  auto d1 = [&](int i, int j, int k) {
    return i1.delta_of((i + r1) % 3, (j + r1) % 3, (k + r1) % 3);
  };
  TorusParabolicity out;
  out.lhs = std::abs(d0(0, 1, 2) * d0(1, 2, 0) * d0(2, 0, 1));
  out.rhs = std::abs(d1(0, 2, 1) * d1(2, 1, 0) * d1(1, 0, 2));
  out.satisfied =
      std::abs(out.lhs - out.rhs) < 1e-9 * std::max(out.lhs, out.rhs);
  CuspReport rep =
      cusp_holonomy_from(t, d, Corner{al->face_map[0], r0});
  out.K = rep.K;
  out.mu = rep.mu;
  return out;
}

}  // namespace fc
