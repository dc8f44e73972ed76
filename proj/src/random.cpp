#include "flagcoords/random.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <fmt/format.h>

#include "flagcoords/representation.hpp"

namespace fc {

namespace {

int prv(int i) { return (i + 2) % 3; }

Mat3 gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double re = n(rng);
      double im = n(rng);
      a(i, j) = cplx(re, im);
    }
  return a;
}

bool generic_enough(const TripleFlagInvariant& inv) {
  for (double p : inv.phi)
    if (std::abs(p - 1.0) < 1e-6) return false;
  return inv.Delta < 0;
}

// One-to-three split of face f around a new puncture.
void split_face(std::vector<std::array<int, 3>>& faces,
                std::vector<Gluing>& gluings, int f, int label) {
  const auto [a, b, c] = faces[f];
  const int g1 = static_cast<int>(faces.size()), g2 = g1 + 1;
  faces[f] = {a, b, label};
  faces.push_back({b, c, label});
  faces.push_back({c, a, label});
  for (Gluing& g : gluings) {
    for (Slot* s : {&g.a, &g.b}) {
      if (s->face != f) continue;
      if (s->slot == 1) *s = Slot{g1, 0};
      else if (s->slot == 2) *s = Slot{g2, 0};
    }
  }
  gluings.push_back({{f, 1}, {g1, 2}});
  gluings.push_back({{g1, 1}, {g2, 2}});
  gluings.push_back({{g2, 1}, {f, 2}});
}

}  // namespace

Mat3 random_su21(Rng& rng, double scale) {
  const Mat3 j = standard_J();
  Mat3 a = gaussian(rng) * scale;
  Mat3 x = a - j * a.adjoint() * j;
  x -= (x.trace() / 3.0) * Mat3::Identity();
  return su21_normalize(x.exp());
}

Flag random_flag(Rng& rng, double scale) {
  return Isometry::from_matrix_unchecked(random_su21(rng, scale))
      .apply(Flag::standard());
}

std::array<Flag, 3> random_generic_triple(Rng& rng, double scale) {
  for (int attempt = 0; attempt < RETRY_CAP; ++attempt) {
    try {
      std::array<Flag, 3> f = {random_flag(rng, scale), random_flag(rng, scale),
                               random_flag(rng, scale)};
      if (generic_enough(triple_invariants(f[0], f[1], f[2]))) return f;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::RetryCapExhausted, "no generic flag triple found");
}

Triangulation standard_triangulation(int genus, int punctures) {
  if (genus < 0 || punctures < 1 || 2 - 2 * genus - punctures >= 0) {
    throw Error(ErrorCode::InvalidComplex,
                fmt::format("need p >= 1 and 2 - 2g - p < 0, got g = {}, p = {}",
                            genus, punctures));
  }
  if (genus == 1 && punctures == 1) return Triangulation::canonical_torus();
  if (genus == 0 && punctures == 3) return Triangulation::thrice_punctured_sphere();

  std::vector<std::array<int, 3>> faces;
  std::vector<Gluing> gluings;
  int have = 0;
  if (genus == 0) {
    Triangulation s = Triangulation::thrice_punctured_sphere();
    faces = s.faces();
    gluings = s.gluings();
    have = 3;
  } else {
    // Fan from vertex 0 of the 4g-gon with sides a_i b_i a_i^-1 b_i^-1.
    const int n = 4 * genus;
    for (int k = 1; k <= n - 2; ++k) faces.push_back({0, 0, 0});
    auto side_slot = [&](int s) -> Slot {
      if (s == 0) return {0, 0};
      if (s == n - 1) return {n - 3, 2};
      return {s - 1, 1};
    };
    for (int i = 0; i < genus; ++i) {
      gluings.push_back({side_slot(4 * i), side_slot(4 * i + 2)});
      gluings.push_back({side_slot(4 * i + 1), side_slot(4 * i + 3)});
    }
    for (int k = 0; k + 1 < n - 2; ++k) gluings.push_back({{k, 2}, {k + 1, 0}});
    have = 1;
  }
  for (int label = have; label < punctures; ++label) {
    split_face(faces, gluings, (label - have) % static_cast<int>(faces.size()),
               label);
  }
  return Triangulation::make(genus, punctures, std::move(faces),
                             std::move(gluings));
}

RandomInstance random_decorated_instance(const Triangulation& t, Rng& rng,
                                         double scale, int retry_cap) {
  const int nf = t.num_faces();
  // Dual spanning tree from face 0.
  std::vector<char> tree(t.num_edges(), 0), seen(nf, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int s = 0; s < 3; ++s) {
      const SideRef& r = t.side(f, s);
      if (seen[r.other.face]) continue;
      seen[r.other.face] = 1;
      tree[r.edge] = 1;
      queue.push_back(r.other.face);
    }
  }

  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    std::vector<Mat3> h(t.num_edges(), Mat3::Identity());
    for (int e = 0; e < t.num_edges(); ++e)
      if (!tree[e]) h[e] = random_su21(rng, scale);

    std::vector<std::array<std::optional<Flag>, 3>> slots(nf);
    bool ok = true;
    for (const auto& cyc : t.corner_cycles()) {
      std::vector<Mat3> prefix{Mat3::Identity()};
      for (const Corner& c : cyc) {
        const SideRef& r = t.side(c.face, prv(c.corner));
        Mat3 step = r.side == 0 ? h[r.edge] : Mat3(h[r.edge].inverse());
        prefix.push_back(step * prefix.back());
      }
      Eigen::ComplexEigenSolver<Mat3> es(prefix.back());
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::abs(es.eigenvalues()(x)) < std::abs(es.eigenvalues()(y));
      });
      if (std::abs(std::abs(es.eigenvalues()(order[2])) - 1.0) < 1e-3) {
        ok = false;
        break;
      }
      const Vec3 u = es.eigenvectors().col(order[2]);
      const Vec3 pol = es.eigenvectors().col(order[1]);
      try {
        for (size_t i = 0; i < cyc.size(); ++i) {
          Vec3 c = prefix[i] * pol;
          Vec3 p = nearest_null_on_line(prefix[i] * u, c);
          slots[cyc[i].face][cyc[i].corner] = Flag(p, c);
        }
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    RandomInstance inst{t, {}, {}, attempt};
    for (auto& s : slots) inst.flags.push_back({*s[0], *s[1], *s[2]});
    try {
      bool generic = true;
      for (const auto& f : inst.flags)
        generic = generic && generic_enough(triple_invariants(f[0], f[1], f[2]));
      if (!generic) continue;
      inst.decoration = decorate_from_flags(t, inst.flags);
    } catch (const Error&) {
      continue;
    }
    if (!validate_decoration(t, inst.decoration).ok) continue;
    return inst;
  }
  throw Error(ErrorCode::RetryCapExhausted,
              fmt::format("no generic decoration after {} attempts", retry_cap));
}

}  // namespace fc
