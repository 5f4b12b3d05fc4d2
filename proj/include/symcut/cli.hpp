#pragma once

// Command-line front end.  Subcommands parse a JSON input file, call into
// the exact or numerical layers, and print machine-readable JSON on standard
// output (SVG for `plot`).  Exit codes: 0 all checks passed, 1 a predicate
// came back false, 2 malformed input or usage error.
//
// The default verification seed is the fixed constant 20260814; pass --seed
// to change it.  The pass threshold of `verify` can be overridden with
// --tol, or, when that flag is absent, with a JSON file {"verify_max_residual":
// <float>} named by the SYMCUT_TOL_FILE environment variable.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "symcut/json_io.hpp"
#include "symcut/svg.hpp"

namespace symcut {

inline constexpr std::uint64_t kDefaultSeed = 20260814ULL;

namespace cli_detail {

inline Json face_to_json(const Face& f) {
  Json out;
  Json active = Json::array();
  for (std::size_t i : f.active) active.push_back(i);
  out["active"] = std::move(active);
  out["dim"] = f.dim();
  out["point"] = ratvec_to_json(f.point);
  return out;
}

inline Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

inline void attach_universality(Json& out, const UniversalityResult& u) {
  if (u.nonsimple_face) {
    out["nonsimple_face"] = face_to_json(*u.nonsimple_face);
  }
  if (u.wall_violation) {
    Json w;
    w["face_active"] = index_list(u.wall_violation->face_active);
    w["wall_vanishing"] = index_list(u.wall_violation->wall_vanishing);
    out["wall_violation"] = std::move(w);
  }
}

// emit to stdout and optionally to a file, byte-identically
inline void emit(const std::string& text, std::ostream& out,
                 const std::string& path) {
  out << text;
  if (!path.empty()) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
}

inline std::vector<IntVec> betas_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("\"betas\" must be an array of integer vectors");
  }
  std::vector<IntVec> betas;
  for (const auto& row : j) betas.push_back(intvec_from_json(row, "betas"));
  return betas;
}

inline double verify_tolerance_override(double tol_flag, bool tol_set) {
  if (tol_set) return tol_flag;
  if (const char* path = std::getenv("SYMCUT_TOL_FILE")) {
    Json j = read_json_file(path);
    detail::check_keys(j, "tolerance file", {}, {"verify_max_residual"});
    if (j.contains("verify_max_residual")) {
      return j["verify_max_residual"].get<double>();
    }
  }
  return -1.0;  // no override
}

inline void apply_override(VerifyReport& r, double tol) {
  if (tol >= 0.0) r.pass = r.max_residual <= tol;
}

}  // namespace cli_detail

// Run one command; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"exact chamber geometry and numerical cut verification"};
  app.require_subcommand(1);

  std::string input, output;
  auto add_io = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) {
      sub->add_option("input", input, "JSON input file")->required();
    }
    sub->add_option("-o,--output", output,
                    "also write the result to this file");
  };

  auto* c_check = app.add_subcommand(
      "check", "simplicity / outward positivity / universality of a polyhedron");
  add_io(c_check);
  auto* c_extend = app.add_subcommand(
      "extend", "Weyl-invariant extension of an outward-positive polyhedron");
  add_io(c_extend);
  auto* c_fan = app.add_subcommand("fan", "stacky normal fan of a polyhedron");
  add_io(c_fan);
  auto* c_delzant = app.add_subcommand(
      "delzant", "Delzant lattice sequence and torus moment image");
  add_io(c_delzant);
  auto* c_vinberg = app.add_subcommand(
      "vinberg-cone", "monoid cone of a root datum and its abelianization");
  add_io(c_vinberg);
  auto* c_extcone = app.add_subcommand(
      "extended-cone", "extended cone for a beta family, optionally sliced");
  add_io(c_extcone);
  auto* c_cut = app.add_subcommand(
      "cut", "admissibility-checked intersection with a Kirwan polytope");
  add_io(c_cut);
  auto* c_strata = app.add_subcommand(
      "strata", "eigenvalue strata of the cut-at-epsilon decomposition");
  add_io(c_strata);
  auto* c_isdelzant =
      app.add_subcommand("is-delzant", "Delzant condition at every vertex");
  add_io(c_isdelzant);

  auto* c_verify =
      app.add_subcommand("verify", "numerical verification suites");
  std::string suite = "all";
  int verify_n = 2;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  double tol_flag = -1.0;
  c_verify
      ->add_option("--suite", suite,
                   "lagrangian | fiber-orbit-u2 | fiber-orbit-su2 | sl2 | all")
      ->check(CLI::IsMember(
          {"lagrangian", "fiber-orbit-u2", "fiber-orbit-su2", "sl2", "all"}));
  c_verify->add_option("--n", verify_n, "matrix size for lagrangian (1..6)");
  c_verify->add_option("--trials", trials, "trials per suite");
  auto* seed_opt = c_verify->add_option("--seed", seed, "64-bit seed");
  auto* tol_opt = c_verify->add_option(
      "--tol", tol_flag, "override the pass threshold on max_residual");
  add_io(c_verify, false);

  auto* c_plot = app.add_subcommand("plot", "deterministic SVG for rank 2");
  PlotOptions plot_opts;
  bool no_normals = false;
  bool with_fan = false;
  c_plot->add_option("--width", plot_opts.width, "drawing width in pixels");
  c_plot->add_option("--margin", plot_opts.margin, "margin in pixels");
  c_plot->add_flag("--no-normals", no_normals, "suppress facet normal arrows");
  c_plot->add_flag("--fan", with_fan, "overlay the stacky normal fan");
  add_io(c_plot);

  try {
    std::vector<const char*> argv;
    argv.push_back("symcut");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    using cli_detail::emit;

    if (c_check->parsed()) {
      LabeledPolyhedron p = polyhedron_from_json(read_json_file(input));
      Json result;
      bool all = true;
      SimplicityResult s = is_simple(p);
      result["simple"] = s.simple;
      all = all && s.simple;
      if (s.violating_face) {
        result["violating_face"] = cli_detail::face_to_json(*s.violating_face);
      }
      if (p.ambient == Ambient::Chamber) {
        bool op = is_outward_positive(p);
        result["outward_positive"] = op;
        all = all && op;
        UniversalityResult u = is_universal(p);
        result["universal"] = u.holds;
        all = all && u.holds;
        cli_detail::attach_universality(result, u);
      }
      emit(dump_json(result), out, output);
      return all ? 0 : 1;
    }

    if (c_extend->parsed()) {
      LabeledPolyhedron p = polyhedron_from_json(read_json_file(input));
      emit(dump_json(polyhedron_to_json(w_invariant_extension(p))), out,
           output);
      return 0;
    }

    if (c_fan->parsed()) {
      LabeledPolyhedron p = polyhedron_from_json(read_json_file(input));
      emit(dump_json(stacky_fan_to_json(stacky_normal_fan(p))), out, output);
      return 0;
    }

    if (c_delzant->parsed()) {
      Json j = read_json_file(input);
      detail::check_keys(j, "delzant input", {"betas"}, {"xi"});
      auto betas = cli_detail::betas_from_json(j["betas"]);
      Json result;
      result["sequence"] = delzant_sequence_to_json(delzant_sequence(betas));
      if (j.contains("xi")) {
        RatVec xi = ratvec_from_json(j["xi"], "xi");
        result["moment_image"] =
            polyhedron_to_json(delzant_moment_image(betas, xi));
      }
      emit(dump_json(result), out, output);
      return 0;
    }

    if (c_vinberg->parsed()) {
      Json j = read_json_file(input);
      detail::check_keys(j, "vinberg-cone input", {"root_datum"});
      RootDatum rd = build_root_datum(j["root_datum"].get<std::string>());
      Json result;
      result["cone"] = cone_to_json(vinberg_cone(rd));
      AbelianizationCone ab = abelianization_cone(rd);
      Json abj;
      abj["cone"] = cone_to_json(ab.cone);
      abj["smooth"] = ab.smooth;
      result["abelianization"] = std::move(abj);
      emit(dump_json(result), out, output);
      return 0;
    }

    if (c_extcone->parsed()) {
      Json j = read_json_file(input);
      detail::check_keys(j, "extended-cone input", {"root_datum", "betas"},
                         {"xi"});
      RootDatum rd = build_root_datum(j["root_datum"].get<std::string>());
      auto betas = cli_detail::betas_from_json(j["betas"]);
      Json result;
      result["cone"] = cone_to_json(extended_cone(rd, betas));
      if (j.contains("xi")) {
        RatVec xi = ratvec_from_json(j["xi"], "xi");
        result["slice"] =
            linear_system_to_json(extended_cone_slice(rd, betas, xi));
      }
      emit(dump_json(result), out, output);
      return 0;
    }

    if (c_cut->parsed()) {
      Json j = read_json_file(input);
      detail::check_keys(j, "cut input", {"kirwan", "polytope"});
      LabeledPolyhedron kirwan = polyhedron_from_json(j["kirwan"]);
      LabeledPolyhedron p = polyhedron_from_json(j["polytope"]);
      KirwanCut cut = kirwan_cut(kirwan, p);
      Json result;
      result["admissible"] = cut.admissible;
      cli_detail::attach_universality(result, cut.admissibility);
      if (cut.polytope.empty_marker) {
        result["empty"] = true;
      } else {
        result["polytope"] = polyhedron_to_json(cut.polytope);
      }
      emit(dump_json(result), out, output);
      return cut.admissible ? 0 : 1;
    }

    if (c_strata->parsed()) {
      Json j = read_json_file(input);
      detail::check_keys(j, "strata input", {"n", "epsilon"});
      std::size_t n = j["n"].get<std::size_t>();
      Rat eps = rat_from_json(j["epsilon"], "epsilon");
      Json result;
      Json strata = Json::array();
      for (const auto& s : weitsman_strata(n, eps)) {
        Json item;
        item["k"] = s.k;
        item["system"] = linear_system_to_json(s.system);
        strata.push_back(std::move(item));
      }
      result["strata"] = std::move(strata);
      result["closure"] = linear_system_to_json(weitsman_closure(n, eps));
      emit(dump_json(result), out, output);
      return 0;
    }

    if (c_isdelzant->parsed()) {
      Json j = read_json_file(input);
      std::optional<RatMat> lattice;
      bool verdict;
      if (j.is_object() && j.contains("vertices")) {
        detail::check_keys(j, "is-delzant input", {"vertices"}, {"lattice"});
        std::vector<RatVec> vertices;
        for (const auto& v : j["vertices"]) {
          vertices.push_back(ratvec_from_json(v, "vertex"));
        }
        if (j.contains("lattice")) {
          std::vector<RatVec> rows;
          for (const auto& v : j["lattice"]) {
            rows.push_back(ratvec_from_json(v, "lattice row"));
          }
          lattice = RatMat::from_rows(rows);
        }
        verdict = is_delzant(vertices, lattice);
      } else {
        verdict = is_delzant(polyhedron_from_json(j), lattice);
      }
      Json result;
      result["delzant"] = verdict;
      emit(dump_json(result), out, output);
      return verdict ? 0 : 1;
    }

    if (c_verify->parsed()) {
      (void)seed_opt;
      double tol = cli_detail::verify_tolerance_override(
          tol_flag, tol_opt->count() > 0);
      std::vector<VerifyReport> reports;
      if (suite == "lagrangian") {
        reports.push_back(verify_lagrangian_fibers(verify_n, trials, seed));
      } else if (suite == "fiber-orbit-u2") {
        reports.push_back(
            verify_fiber_is_orbit(2, AlgebraTag::Unitary, trials, seed));
      } else if (suite == "fiber-orbit-su2") {
        reports.push_back(
            verify_fiber_is_orbit(2, AlgebraTag::SpecialUnitary, trials, seed));
      } else if (suite == "sl2") {
        reports.push_back(verify_sl2_hamiltonian(trials, seed));
      } else {  // all
        for (int n : {2, 3, 4}) {
          reports.push_back(verify_lagrangian_fibers(n, trials, seed));
        }
        reports.push_back(
            verify_fiber_is_orbit(2, AlgebraTag::Unitary, trials, seed));
        reports.push_back(
            verify_fiber_is_orbit(2, AlgebraTag::SpecialUnitary, trials, seed));
        reports.push_back(verify_sl2_hamiltonian(trials, seed));
      }
      bool all_pass = true;
      for (auto& r : reports) {
        cli_detail::apply_override(r, tol);
        all_pass = all_pass && r.pass;
      }
      Json result;
      if (reports.size() == 1) {
        result = report_to_json(reports.front());
      } else {
        result = Json::array();
        for (const auto& r : reports) result.push_back(report_to_json(r));
      }
      emit(dump_json(result), out, output);
      return all_pass ? 0 : 1;
    }

    if (c_plot->parsed()) {
      Json j = read_json_file(input);
      RootDatum rd;
      std::vector<LabeledPolyhedron> polys;
      if (j.is_object() && j.contains("polyhedra")) {
        detail::check_keys(j, "plot input", {"root_datum", "polyhedra"},
                           {"fan"});
        rd = build_root_datum(j["root_datum"].get<std::string>());
        for (const auto& pj : j["polyhedra"]) {
          polys.push_back(polyhedron_from_json(pj));
        }
        if (j.contains("fan")) with_fan = with_fan || j["fan"].get<bool>();
      } else {
        LabeledPolyhedron p = polyhedron_from_json(j);
        rd = p.datum;
        polys.push_back(std::move(p));
      }
      plot_opts.show_normals = !no_normals;
      emit(plot_rank2(rd, polys, with_fan, plot_opts), out, output);
      return 0;
    }
  } catch (const JsonParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand dispatched\n";
  return 2;
}

}  // namespace symcut
