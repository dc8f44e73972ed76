#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagcoords/cusp.hpp"
#include "flagcoords/io.hpp"
#include "flagcoords/random.hpp"
#include "flagcoords/representation.hpp"
#include "flagcoords/solver.hpp"

namespace py = pybind11;

namespace {

fc::Flag make_flag(const fc::Vec3& p, const fc::Vec3& c) { return fc::Flag(p, c); }

py::dict invariants_dict(const fc::TripleFlagInvariant& inv) {
  py::dict d;
  d["phi"] = inv.phi;
  d["Phi"] = inv.Phi123;
  d["delta_pos"] = inv.delta_pos;
  d["delta_neg"] = inv.delta_neg;
  d["m"] = inv.m;
  d["Delta"] = inv.Delta;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Flag invariants and decorated PU(2,1) representations";

  py::register_exception<fc::Error>(mod, "FlagError", PyExc_ValueError);

  mod.def("theta", &fc::theta);
  mod.def("exchange_matrix",
          [](fc::cplx m) { return fc::Mat3(fc::exchange_matrix(m).matrix()); });
  mod.def("transfer_matrix", [](fc::cplx mu, double t) {
    return fc::Mat3(fc::transfer_matrix(fc::TransferParams{mu, t}).matrix());
  });
  mod.def("pu_distance", &fc::pu_distance);

  mod.def(
      "triple_invariants",
      [](const fc::Vec3& p1, const fc::Vec3& c1, const fc::Vec3& p2,
         const fc::Vec3& c2, const fc::Vec3& p3, const fc::Vec3& c3) {
        return invariants_dict(fc::triple_invariants(
            make_flag(p1, c1), make_flag(p2, c2), make_flag(p3, c3)));
      },
      "Invariants of three flags given as (point, polar) pairs.");

  mod.def(
      "solve_triangle",
      [](fc::cplx m12, fc::cplx m23, fc::cplx m31, fc::cplx Phi) {
        auto sols = fc::solve_triangle({m12, m23, m31, Phi});
        std::vector<std::array<fc::cplx, 3>> out;
        for (const auto& s : sols.solutions) out.push_back(s.delta_pos);
        return out;
      },
      "delta^1_23, delta^2_31, delta^3_12 for each solution.");

  mod.def(
      "random_instance",
      [](int genus, int punctures, std::uint64_t seed) {
        fc::Triangulation t = fc::standard_triangulation(genus, punctures);
        fc::Rng rng(seed);
        auto inst = fc::random_decorated_instance(t, rng);
        py::dict d;
        d["triangulation"] = fc::dump(fc::to_json(t));
        d["decoration"] = fc::dump(fc::to_json(t, inst.decoration));
        d["m_decoration"] = fc::dump(fc::to_json(t, fc::project_to_m(inst.decoration, t)));
        return d;
      },
      py::arg("genus"), py::arg("punctures"), py::arg("seed") = 0);

  mod.def(
      "validate",
      [](const std::string& tri, const std::string& deco, double tol) {
        auto t = fc::triangulation_from_json(fc::parse_json(tri));
        auto d = fc::decoration_from_json(t, fc::parse_json(deco));
        return fc::dump(fc::to_json(fc::validate_decoration(t, d, tol)));
      },
      py::arg("triangulation"), py::arg("decoration"), py::arg("tol") = 1e-8);

  mod.def(
      "represent",
      [](const std::string& tri, const std::string& deco) {
        auto t = fc::triangulation_from_json(fc::parse_json(tri));
        auto d = fc::decoration_from_json(t, fc::parse_json(deco));
        auto hx = fc::build_hexagonation(t);
        auto loops = fc::align_with_canonical_torus(t)
                         ? fc::canonical_torus_loops(t, hx)
                         : fc::spanning_tree_loops(hx, 0);
        auto rep = fc::build_representation(t, d, loops);
        fc::json j = fc::to_json(rep);
        j["cusps"] = fc::json::array();
        for (int label : t.cycle_labels())
          j["cusps"].push_back(fc::to_json(fc::cusp_holonomy(t, d, label)));
        return fc::dump(j);
      },
      py::arg("triangulation"), py::arg("decoration"));
}
