// Command-line front end. Exit codes: 0 success, 1 domain failure,
// 2 usage, I/O or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "flagcoords/cusp.hpp"
#include "flagcoords/io.hpp"
#include "flagcoords/random.hpp"
#include "flagcoords/representation.hpp"
#include "flagcoords/solver.hpp"

namespace {

using fc::json;

struct RunConfig {
  std::string format = "text";
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string tri, deco, mdeco, loops, out;
  std::string branch = "all";
  int genus = 1, punctures = 1;
  std::optional<int> puncture;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(const fc::Error& e) {
  switch (e.code()) {
    case fc::ErrorCode::ParseError:
    case fc::ErrorCode::IoError:
    case fc::ErrorCode::InvalidComplex:
      return 2;
    default:
      return 1;
  }
}

std::string num(double x) { return fmt::format("{:.17g}", x); }
std::string num(fc::cplx z) {
  return fmt::format("{:.17g} {:+.17g}i", z.real(), z.imag());
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << fc::dump(j);
  } else {
    std::cout << text;
  }
}

fc::Triangulation load_tri(const RunConfig& cfg) {
  return fc::triangulation_from_json(fc::read_json_file(cfg.tri));
}

std::string cusp_text(const fc::CuspReport& r) {
  std::string s = fmt::format(
      "puncture {}: {}\n  mu = {} (|mu| = {})\n  K = {}\n", r.puncture,
      fc::to_string(r.type), num(r.mu), num(std::abs(r.mu)), num(r.K));
  for (size_t i = 0; i < r.steps.size(); ++i) {
    s += fmt::format("  step {} face {} corner {}: mu = {}, t = {}\n", i,
                     r.corners[i].face, r.corners[i].corner, num(r.steps[i].mu),
                     num(r.steps[i].t));
  }
  return s;
}

int cmd_validate(const RunConfig& cfg) {
  auto t = load_tri(cfg);
  auto d = fc::decoration_from_json(t, fc::read_json_file(cfg.deco));
  auto rep = fc::validate_decoration(t, d, cfg.tol);
  std::string text;
  for (const auto& r : rep.items) {
    text += fmt::format("{:4} {:<30} {:<20} residual {} (threshold {})\n",
                        r.ok ? "ok" : "FAIL", r.constraint, r.where,
                        num(r.value), num(r.threshold));
  }
  if (rep.degenerate) text += "note: some phi equals 1 (degenerate)\n";
  text += rep.ok ? "valid\n" : "invalid\n";
  emit(cfg, fc::to_json(rep), text);
  return rep.ok ? 0 : 1;
}

int cmd_project(const RunConfig& cfg) {
  auto t = load_tri(cfg);
  auto d = fc::decoration_from_json(t, fc::read_json_file(cfg.deco));
  auto md = fc::project_to_m(d, t, cfg.tol);
  json j = fc::to_json(t, md);
  if (!cfg.out.empty()) {
    fc::write_text_file(cfg.out, fc::dump(j));
    if (cfg.format == "text") std::cout << "wrote " << cfg.out << "\n";
  } else {
    std::cout << fc::dump(j);
  }
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  auto t = load_tri(cfg);
  auto md = fc::mdecoration_from_json(t, fc::read_json_file(cfg.mdeco));
  const std::string prefix = cfg.out.empty() ? "lift" : cfg.out;
  json files = json::array();
  std::string text;
  auto write = [&](const std::vector<int>& branch, const fc::Decoration& d) {
    const std::string path =
        fmt::format("{}_branch{}.json", prefix, fc::branch_string(branch));
    fc::write_text_file(path, fc::dump(fc::to_json(t, d)));
    files.push_back(path);
    text += "wrote " + path + "\n";
  };
  if (cfg.branch == "all") {
    fc::for_each_lift(t, md, write);
  } else {
    std::vector<int> branch;
    try {
      branch = fc::parse_branch(cfg.branch, t.num_faces());
    } catch (const fc::Error& e) {
      throw UsageError(e.detail());
    }
    write(branch, fc::lift_mdecoration(t, md, branch));
  }
  json j;
  j["files"] = files;
  emit(cfg, j, text);
  return 0;
}

int cmd_represent(const RunConfig& cfg) {
  auto t = load_tri(cfg);
  auto d = fc::decoration_from_json(t, fc::read_json_file(cfg.deco));
  auto hx = fc::build_hexagonation(t);
  fc::LoopSet loops;
  if (!cfg.loops.empty()) {
    loops = fc::loops_from_json(hx, fc::read_json_file(cfg.loops));
  } else if (fc::align_with_canonical_torus(t)) {
    loops = fc::canonical_torus_loops(t, hx);
  } else {
    loops = fc::spanning_tree_loops(hx, 0);
  }
  auto rep = fc::build_representation(t, d, loops);
  json j = fc::to_json(rep);
  j["cusps"] = json::array();
  std::string text = fmt::format("base vertex {}\n", rep.base_vertex);
  for (const auto& g : rep.generators) {
    text += fmt::format("rho({}) =\n", g.name);
    for (int i = 0; i < 3; ++i) {
      text += "  ";
      for (int k = 0; k < 3; ++k) text += fmt::format("[{}]  ", num(g.image.matrix()(i, k)));
      text += "\n";
    }
  }
  if (!rep.relator.empty()) {
    text += fmt::format("relator {} residual {}\n", rep.relator,
                        num(rep.relation_residual));
  }
  for (int label : t.cycle_labels()) {
    auto c = fc::cusp_holonomy(t, d, label);
    j["cusps"].push_back(fc::to_json(c));
    text += cusp_text(c);
  }
  emit(cfg, j, text);
  return 0;
}

int cmd_cusp(const RunConfig& cfg) {
  auto t = load_tri(cfg);
  auto d = fc::decoration_from_json(t, fc::read_json_file(cfg.deco));
  json j;
  j["cusps"] = json::array();
  std::string text;
  for (int label : t.cycle_labels()) {
    if (cfg.puncture && *cfg.puncture != label) continue;
    auto c = fc::cusp_holonomy(t, d, label);
    j["cusps"].push_back(fc::to_json(c));
    text += cusp_text(c);
  }
  if (cfg.puncture && j["cusps"].empty()) {
    throw UsageError(fmt::format("no puncture {}", *cfg.puncture));
  }
  if (fc::align_with_canonical_torus(t)) {
    auto tp = fc::torus_parabolicity_check(t, d);
    json k;
    k["satisfied"] = tp.satisfied;
    k["lhs"] = tp.lhs;
    k["rhs"] = tp.rhs;
    k["K"] = fc::complex_to_json(tp.K);
    j["torus_criterion"] = k;
    text += fmt::format("torus criterion: lhs {} rhs {} {}\n", num(tp.lhs),
                        num(tp.rhs), tp.satisfied ? "satisfied" : "not satisfied");
  }
  emit(cfg, j, text);
  return 0;
}

int cmd_random(const RunConfig& cfg) {
  fc::Triangulation t = [&] {
    try {
      return fc::standard_triangulation(cfg.genus, cfg.punctures);
    } catch (const fc::Error& e) {
      throw UsageError(e.detail());
    }
  }();
  fc::Rng rng(cfg.seed);
  auto inst = fc::random_decorated_instance(t, rng);
  auto md = fc::project_to_m(inst.decoration, t);
  const std::string prefix = cfg.out.empty() ? "random" : cfg.out;
  const std::string ft = prefix + ".tri.json", fd = prefix + ".deco.json",
                    fm = prefix + ".mdeco.json";
  fc::write_text_file(ft, fc::dump(fc::to_json(t)));
  fc::write_text_file(fd, fc::dump(fc::to_json(t, inst.decoration)));
  fc::write_text_file(fm, fc::dump(fc::to_json(t, md)));
  json j;
  j["triangulation"] = ft;
  j["decoration"] = fd;
  j["m_decoration"] = fm;
  j["attempts"] = inst.attempts;
  emit(cfg, j,
       fmt::format("wrote {}, {}, {} ({} attempts)\n", ft, fd, fm, inst.attempts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag invariants, decorations and PU(2,1) representations"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", cfg.tol, "Validation tolerance");

  auto* validate = app.add_subcommand("validate", "Check a decoration");
  validate->add_option("triangulation", cfg.tri)->required();
  validate->add_option("decoration", cfg.deco)->required();

  auto* project = app.add_subcommand("project", "Forget delta: decoration to m-decoration");
  project->add_option("triangulation", cfg.tri)->required();
  project->add_option("decoration", cfg.deco)->required();
  project->add_option("-o,--out", cfg.out, "Output file");

  auto* solve = app.add_subcommand("solve", "Lift an m-decoration to decorations");
  solve->add_option("triangulation", cfg.tri)->required();
  solve->add_option("m_decoration", cfg.mdeco)->required();
  solve->add_option("--branch", cfg.branch, "'all' or one bit per face");
  solve->add_option("-o,--out", cfg.out, "Output prefix");

  auto* represent = app.add_subcommand("represent", "Generator images and cusps");
  represent->add_option("triangulation", cfg.tri)->required();
  represent->add_option("decoration", cfg.deco)->required();
  represent->add_option("loops", cfg.loops, "Loops file");

  auto* cusp = app.add_subcommand("cusp", "Holonomy around punctures");
  cusp->add_option("triangulation", cfg.tri)->required();
  cusp->add_option("decoration", cfg.deco)->required();
  cusp->add_option("--puncture", cfg.puncture, "Only this puncture");

  auto* random = app.add_subcommand("random", "Random decorated instance");
  random->add_option("--genus", cfg.genus)->required();
  random->add_option("--punctures", cfg.punctures)->required();
  random->add_option("--seed", cfg.seed);
  random->add_option("-o,--out", cfg.out, "Output prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*project) return cmd_project(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*represent) return cmd_represent(cfg);
    if (*cusp) return cmd_cusp(cfg);
    if (*random) return cmd_random(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const fc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return 2;
}
