#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symcut/cli.hpp"

using namespace symcut;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// write JSON text to a unique file under the test temp directory
std::string input_file(const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "symcut_cli_tests";
  fs::create_directories(dir);
  fs::path path = dir / name;
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  return path.string();
}

const std::string kInterval = R"({
  "root_datum": "A1",
  "ambient": "chamber",
  "facets": [{"beta": ["1"], "xi": "2"}]
})";

const std::string kWedge = R"({
  "root_datum": "A2",
  "ambient": "chamber",
  "facets": [
    {"beta": ["2", "1"], "xi": "4"},
    {"beta": ["1", "2"], "xi": "4"}
  ]
})";

// x1 <= 2 meets the second wall at a slant: simple, but neither outward
// positive nor universal
const std::string kSkewed = R"({
  "root_datum": "A2",
  "ambient": "chamber",
  "facets": [{"beta": ["1", "0"], "xi": "2"}]
})";

}  // namespace

TEST_CASE("check classifies the unit interval fully") {
  std::string path = input_file("interval.json", kInterval);
  CliRun r = run({"check", path});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  Json j = parse_json_text(r.out);
  CHECK(j["simple"] == true);
  CHECK(j["outward_positive"] == true);
  CHECK(j["universal"] == true);
  CHECK(j.size() == 3);

  // agrees with direct library calls
  LabeledPolyhedron p = polyhedron_from_json(parse_json_text(kInterval));
  CHECK(is_simple(p).simple == j["simple"].get<bool>());
  CHECK(is_outward_positive(p) == j["outward_positive"].get<bool>());
  CHECK(is_universal(p).holds == j["universal"].get<bool>());
}

TEST_CASE("check reports certificates and exit 1 on failure") {
  std::string path = input_file("skewed.json", kSkewed);
  CliRun r = run({"check", path});
  CHECK(r.code == 1);
  Json j = parse_json_text(r.out);
  CHECK(j["simple"] == true);
  CHECK(j["outward_positive"] == false);
  CHECK(j["universal"] == false);
  // the universality certificate is serialized
  CHECK((j.contains("nonsimple_face") || j.contains("wall_violation")));
}

TEST_CASE("check on a full-ambient polyhedron reports simplicity only") {
  std::string path = input_file("full.json", R"({
    "root_datum": "A2",
    "ambient": "full",
    "facets": [
      {"beta": ["1", "0"], "xi": "1"},
      {"beta": ["-1", "0"], "xi": "0"},
      {"beta": ["0", "1"], "xi": "1"},
      {"beta": ["0", "-1"], "xi": "0"}
    ]
  })");
  CliRun r = run({"check", path});
  CHECK(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j.size() == 1);
  CHECK(j["simple"] == true);
}

TEST_CASE("extend emits the full-ambient invariant extension") {
  std::string path = input_file("wedge.json", kWedge);
  CliRun r = run({"extend", path});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["ambient"] == "full");

  LabeledPolyhedron p = polyhedron_from_json(parse_json_text(kWedge));
  CHECK(j == polyhedron_to_json(w_invariant_extension(p)));

  // precondition failure: not outward positive -> usage error, not a crash
  std::string bad = input_file("skew2.json", kSkewed);
  CliRun rbad = run({"extend", bad});
  CHECK(rbad.code == 2);
  CHECK_THAT(rbad.err, ContainsSubstring("outward"));
}

TEST_CASE("fan matches the library serialization") {
  std::string path = input_file("wedge_fan.json", kWedge);
  CliRun r = run({"fan", path});
  REQUIRE(r.code == 0);
  LabeledPolyhedron p = polyhedron_from_json(parse_json_text(kWedge));
  CHECK(parse_json_text(r.out) == stacky_fan_to_json(stacky_normal_fan(p)));
}

TEST_CASE("delzant subcommand produces sequence and optional image") {
  std::string path = input_file("delzant.json", R"({
    "betas": [[1, 0], [0, 1], [-1, -1]],
    "xi": ["1", "1", "1"]
  })");
  CliRun r = run({"delzant", path});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["sequence"]["kernel_basis"] == Json::array({Json::array({"1", "1", "1"})}));
  CHECK(j["sequence"]["exact_on_right"] == true);
  CHECK(j.contains("moment_image"));

  std::string no_xi = input_file("delzant2.json", R"({"betas": [[1], [-1]]})");
  CliRun r2 = run({"delzant", no_xi});
  REQUIRE(r2.code == 0);
  CHECK_FALSE(parse_json_text(r2.out).contains("moment_image"));
}

TEST_CASE("vinberg-cone and extended-cone emit cone data") {
  std::string path = input_file("vc.json", R"({"root_datum": "A1"})");
  CliRun r = run({"vinberg-cone", path});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["cone"]["dim"] == 2);
  CHECK(j["abelianization"].contains("smooth"));

  std::string ec = input_file("ec.json", R"({
    "root_datum": "A1",
    "betas": [[1], [2]],
    "xi": ["1", "2"]
  })");
  CliRun r2 = run({"extended-cone", ec});
  REQUIRE(r2.code == 0);
  Json j2 = parse_json_text(r2.out);
  CHECK(j2["cone"]["dim"] == 3);
  CHECK(j2.contains("slice"));
}

TEST_CASE("cut reports admissibility and the empty marker") {
  // disjoint: [0, 1] cut against [3, 4] -- admissible, empty output
  std::string disjoint = input_file("cut_disjoint.json", R"({
    "kirwan": {
      "root_datum": "A1",
      "ambient": "chamber",
      "facets": [{"beta": ["1"], "xi": "1"}]
    },
    "polytope": {
      "root_datum": "A1",
      "ambient": "chamber",
      "facets": [{"beta": ["1"], "xi": "4"}, {"beta": ["-1"], "xi": "-3"}]
    }
  })");
  CliRun r = run({"cut", disjoint});
  CHECK(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["admissible"] == true);
  CHECK(j["empty"] == true);
  CHECK_FALSE(j.contains("polytope"));

  // overlapping intervals: nonempty polytope comes back
  std::string overlap = input_file("cut_overlap.json", R"({
    "kirwan": {
      "root_datum": "A1",
      "ambient": "chamber",
      "facets": [{"beta": ["1"], "xi": "3"}]
    },
    "polytope": {
      "root_datum": "A1",
      "ambient": "chamber",
      "facets": [{"beta": ["1"], "xi": "4"}, {"beta": ["-1"], "xi": "-1"}]
    }
  })");
  CliRun r2 = run({"cut", overlap});
  CHECK(r2.code == 0);
  Json j2 = parse_json_text(r2.out);
  CHECK(j2["admissible"] == true);
  REQUIRE(j2.contains("polytope"));
  LabeledPolyhedron cutp = polyhedron_from_json(j2["polytope"]);
  CHECK_FALSE(cutp.empty_marker);
  CHECK(cutp.facets.size() == 2);  // the implied bound x <= 4 is pruned
}

TEST_CASE("strata emits one system per stratum plus the closure") {
  std::string path = input_file("strata.json", R"({"n": 2, "epsilon": "1/2"})");
  CliRun r = run({"strata", path});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["strata"].size() == 3);
  CHECK(j["strata"][0]["k"] == 0);
  CHECK(j.contains("closure"));
}

TEST_CASE("is-delzant accepts vertex lists and polyhedra") {
  std::string square = input_file("square.json", R"({
    "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]
  })");
  CliRun r = run({"is-delzant", square});
  CHECK(r.code == 0);
  CHECK(parse_json_text(r.out)["delzant"] == true);

  // right triangle with a non-unimodular corner
  std::string tri = input_file("triangle.json", R"({
    "vertices": [["0", "0"], ["2", "0"], ["0", "1"]]
  })");
  CliRun r2 = run({"is-delzant", tri});
  CHECK(r2.code == 1);
  CHECK(parse_json_text(r2.out)["delzant"] == false);

  // a doubled lattice direction makes the same triangle unimodular
  std::string scaled = input_file("triangle_lattice.json", R"({
    "vertices": [["0", "0"], ["2", "0"], ["0", "1"]],
    "lattice": [["2", "0"], ["0", "1"]]
  })");
  CHECK(run({"is-delzant", scaled}).code == 0);

  std::string poly = input_file("interval_d.json", kInterval);
  CHECK(run({"is-delzant", poly}).code == 0);
}

TEST_CASE("verify runs a named suite deterministically") {
  CliRun r = run({"verify", "--suite", "lagrangian", "--n", "2", "--trials",
                  "100", "--seed", "1"});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  CHECK(j["suite"] == "lagrangian_fibers");
  CHECK(j["seed"] == 1);
  CHECK(j["trials"] == 100);
  CHECK(j["pass"] == true);

  CliRun again = run({"verify", "--suite", "lagrangian", "--n", "2",
                      "--trials", "100", "--seed", "1"});
  CHECK(again.out == r.out);  // byte-identical rerun

  CliRun other = run({"verify", "--suite", "lagrangian", "--n", "2",
                      "--trials", "100", "--seed", "2"});
  CHECK(other.out != r.out);
}

TEST_CASE("verify all aggregates six reports") {
  CliRun r = run({"verify", "--suite", "all", "--trials", "8", "--seed", "7"});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 6);
  CHECK(j[0]["suite"] == "lagrangian_fibers");
  CHECK(j[3]["suite"] == "fiber_is_orbit_u2");
  CHECK(j[4]["suite"] == "fiber_is_orbit_su2");
  CHECK(j[5]["suite"] == "sl2_hamiltonian");
  for (const auto& rep : j) CHECK(rep["pass"] == true);
}

TEST_CASE("verify tolerance overrides gate the verdict") {
  // an impossible threshold flips pass to false and the exit code to 1
  CliRun strict = run({"verify", "--suite", "lagrangian", "--trials", "8",
                       "--seed", "1", "--tol", "0"});
  CHECK(strict.code == 1);
  CHECK(parse_json_text(strict.out)["pass"] == false);

  // a generous threshold keeps it passing
  CliRun loose = run({"verify", "--suite", "lagrangian", "--trials", "8",
                      "--seed", "1", "--tol", "0.5"});
  CHECK(loose.code == 0);

  // the same override can come from a tolerance file via the environment
  std::string tolfile =
      input_file("tol.json", R"({"verify_max_residual": 0.0})");
  ::setenv("SYMCUT_TOL_FILE", tolfile.c_str(), 1);
  CliRun via_env = run({"verify", "--suite", "lagrangian", "--trials", "8",
                        "--seed", "1"});
  CHECK(via_env.code == 1);
  // an explicit flag wins over the environment
  CliRun flag_wins = run({"verify", "--suite", "lagrangian", "--trials", "8",
                          "--seed", "1", "--tol", "0.5"});
  CHECK(flag_wins.code == 0);
  ::unsetenv("SYMCUT_TOL_FILE");
}

TEST_CASE("plot writes SVG and honors options") {
  std::string path = input_file("wedge_plot.json", kWedge);
  CliRun r = run({"plot", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);

  CliRun again = run({"plot", path});
  CHECK(again.out == r.out);

  CliRun fan = run({"plot", path, "--fan"});
  CHECK_THAT(fan.out, ContainsSubstring("#2a7a2a"));
  CliRun plain = run({"plot", path, "--no-normals"});
  CHECK(plain.out.find("#a03030") == std::string::npos);

  // scene form: datum plus several polyhedra
  std::string scene = input_file("scene.json", R"({
    "root_datum": "A2",
    "polyhedra": [
      {
        "root_datum": "A2",
        "ambient": "chamber",
        "facets": [{"beta": ["1", "1"], "xi": "3"}]
      }
    ],
    "fan": true
  })");
  CliRun sr = run({"plot", scene});
  REQUIRE(sr.code == 0);
  CHECK_THAT(sr.out, ContainsSubstring("#2a7a2a"));

  // rank-1 input cannot be plotted
  std::string inter = input_file("interval_plot.json", kInterval);
  CHECK(run({"plot", inter}).code == 2);
}

TEST_CASE("output files duplicate standard output exactly") {
  namespace fs = std::filesystem;
  std::string path = input_file("wedge_out.json", kWedge);
  fs::path dst = fs::temp_directory_path() / "symcut_cli_tests" / "out.json";
  CliRun r = run({"check", path, "-o", dst.string()});
  REQUIRE(r.code == 0);
  std::ifstream f(dst, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == r.out);
}

TEST_CASE("check agrees with direct library calls on the golden corpus") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(SYMCUT_SOURCE_DIR) / "data" / "corpus";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  REQUIRE(files.size() == 12);

  for (const auto& file : files) {
    INFO(file.filename().string());
    CliRun r = run({"check", file.string()});
    REQUIRE(r.code != 2);
    Json j = parse_json_text(r.out);

    LabeledPolyhedron p = polyhedron_from_json(read_json_file(file.string()));
    SimplicityResult s = is_simple(p);
    CHECK(j["simple"].get<bool>() == s.simple);
    bool expect_all = s.simple;
    if (p.ambient == Ambient::Chamber) {
      bool op = is_outward_positive(p);
      UniversalityResult u = is_universal(p);
      CHECK(j["outward_positive"].get<bool>() == op);
      CHECK(j["universal"].get<bool>() == u.holds);
      CHECK(j.contains("wall_violation") == u.wall_violation.has_value());
      CHECK(j.contains("nonsimple_face") == u.nonsimple_face.has_value());
      expect_all = expect_all && op && u.holds;
    } else {
      CHECK(j.size() == 1);
    }
    CHECK(r.code == (expect_all ? 0 : 1));
  }
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);  // missing input argument
  CHECK(run({"check", "/nonexistent/input.json"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);

  // malformed JSON: diagnostic carries the position
  std::string bad = input_file("bad.json", "{\n  \"root_datum\": \"A1\",\n  !\n}");
  CliRun r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK_THAT(r.err, ContainsSubstring("line 3"));

  // schema violation: unknown key
  std::string odd = input_file("odd.json", R"({
    "root_datum": "A1",
    "ambient": "chamber",
    "facets": [],
    "flavor": "sour"
  })");
  CHECK(run({"check", odd}).code == 2);

  // help is not an error
  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK_THAT(help.out, ContainsSubstring("verify"));
}
