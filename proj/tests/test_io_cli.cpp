#include "spectile/cli.hpp"
#include "spectile/io.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace spectile;
using geometry::Polytope;
namespace fs = std::filesystem;

namespace {

fs::path make_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("spectile_" + name);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  os << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string triangle_json() {
  return R"({"dim":2,"vertices":[["0","0"],["2","0"],["0","1"]]})";
}

std::string square_json() {
  return R"({"dim":2,"vertices":[["-1/2","-1/2"],["1/2","-1/2"],["-1/2","1/2"],["1/2","1/2"]]})";
}

std::string zd_json() { return R"({"basis":[["1","0"],["0","1"]]})"; }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3.5") == Rational(-7, 2));
  CHECK(parse_rational("42") == 42);
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-8, 2)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(parse_rational(format_rational(Rational(-355, 113))) == Rational(-355, 113));
}

TEST_CASE("polytope json round trip reduces on load") {
  const Polytope t = fixtures::triangle_unit_area();
  const auto j = io::polytope_to_json(t);
  CHECK(io::polytope_from_json(j) == t);

  // Interior points in the file are dropped by the hull.
  const auto j2 = io::json::parse(
      R"({"dim":2,"vertices":[["0","0"],["2","0"],["0","1"],["1/4","1/4"]]})");
  CHECK(io::polytope_from_json(j2) == t);
}

TEST_CASE("lattice and point set json round trips") {
  Mat m(2, 2);
  m.at(0, 0) = Rational(3, 2);
  m.at(1, 0) = Rational(1, 2);
  m.at(1, 1) = Rational(2, 3);
  const lattice::Lattice l(m);
  CHECK(io::lattice_from_json(io::lattice_to_json(l)) == l);

  lattice::PointSet s;
  s.dim = 2;
  s.points = {{Rational(0), Rational(0)}, {Rational(1, 3), Rational(-2)}};
  s.window = Box{{Rational(-2), Rational(-2)}, {Rational(2), Rational(2)}};
  const auto back = io::pointset_from_json(io::pointset_to_json(s));
  CHECK(back.points == s.points);
  CHECK(back.window.lo == s.window.lo);
  CHECK(back.window.hi == s.window.hi);
}

TEST_CASE("certificate json round trip stays consistent") {
  const auto c = certify::certify_nonspectral(fixtures::triangle_unit_area());
  const auto j = io::certificate_to_json(c);
  const auto back = io::certificate_from_json(j);
  CHECK(back.vol_H == c.vol_H);
  CHECK(back.rho_pow_d == c.rho_pow_d);
  CHECK(back.contradiction_margin == c.contradiction_margin);
  CHECK(certify::certificate_consistency_check(back).ok);
  CHECK(io::certificate_to_json(back) == j);
}

TEST_CASE("grid csv round trip") {
  const auto g = fourier::sample_autocorrelation(fixtures::unit_square_origin(),
                                                 Rational(1, 4));
  std::stringstream ss;
  io::write_grid_csv(ss, g);
  const auto back = io::read_grid_csv(ss);
  CHECK(back.grid.extent == g.grid.extent);
  CHECK(back.grid.origin == g.grid.origin);
  CHECK(back.grid.spacing == g.grid.spacing);
  REQUIRE(back.values.size() == g.values.size());
  for (size_t i = 0; i < g.values.size(); ++i)
    CHECK(back.values[i] == g.values[i]);  // repr round trip is exact
}

TEST_CASE("cli certify issues the triangle certificate") {
  const auto dir = make_dir("cli_certify");
  write_file(dir / "triangle.json", triangle_json());
  const auto out = (dir / "cert.json").string();
  const int code = cli::run_command(
      {"certify", "--body", (dir / "triangle.json").string(), "--out", out});
  CHECK(code == 0);
  const auto rep = io::load_json_file(out);
  CHECK(rep.at("certificate").at("contradiction_margin") == "3/8");
  CHECK(rep.at("certificate").at("rho_pow_d") == "5/6");
  CHECK(rep.at("consistency_check") == true);
}

TEST_CASE("cli certify refuses the square with exit 2") {
  const auto dir = make_dir("cli_refuse");
  write_file(dir / "square.json", square_json());
  const auto out = (dir / "refusal.json").string();
  const int code = cli::run_command(
      {"certify", "--body", (dir / "square.json").string(), "--out", out});
  CHECK(code == 2);
  const auto rep = io::load_json_file(out);
  CHECK(rep.at("error") == "SymmetricBody");
  CHECK(rep.contains("suggestion"));
}

TEST_CASE("cli verify-tiling accepts the cube tiling") {
  const auto dir = make_dir("cli_tiling");
  write_file(dir / "square.json", square_json());
  write_file(dir / "zd.json", zd_json());
  const auto out = (dir / "tiling.json").string();
  const int code = cli::run_command({"verify-tiling", "--body",
                                     (dir / "square.json").string(), "--lattice",
                                     (dir / "zd.json").string(), "--core", "-1,1",
                                     "--h", "1/16", "--out", out});
  CHECK(code == 0);
  const auto rep = io::load_json_file(out);
  CHECK(rep.at("is_tiling") == true);
  CHECK(rep.at("expected_level") == "1");
  CHECK(rep.at("tiling").at("max_deviation") == 0.0);
  CHECK(rep.at("support_condition_necessary").at("holds") == true);
}

TEST_CASE("cli verify-tiling refutes the triangle with exit 2") {
  const auto dir = make_dir("cli_tiling_bad");
  write_file(dir / "triangle.json", triangle_json());
  write_file(dir / "zd.json", zd_json());
  const auto out = (dir / "tiling.json").string();
  const int code = cli::run_command({"verify-tiling", "--body",
                                     (dir / "triangle.json").string(), "--lattice",
                                     (dir / "zd.json").string(), "--core", "-1,1",
                                     "--h", "1/16", "--out", out});
  CHECK(code == 2);
  const auto rep = io::load_json_file(out);
  CHECK(rep.at("is_tiling") == false);
  CHECK(rep.at("support_condition_necessary").at("holds") == false);
  CHECK(rep.at("support_condition_necessary").contains("witness"));
}

TEST_CASE("cli verify-spectrum verdicts and exit codes") {
  const auto dir = make_dir("cli_spectrum");
  write_file(dir / "square.json", square_json());
  write_file(dir / "triangle.json", triangle_json());
  write_file(dir / "zd.json", zd_json());

  const auto good = (dir / "good.json").string();
  CHECK(cli::run_command({"verify-spectrum", "--body", (dir / "square.json").string(),
                          "--spectrum", (dir / "zd.json").string(), "--window", "10",
                          "--probes", "-0.5,0.5,7", "--out", good}) == 0);
  CHECK(io::load_json_file(good).at("report").at("verdict") == "verified-on-window");

  const auto bad = (dir / "bad.json").string();
  CHECK(cli::run_command({"verify-spectrum", "--body", (dir / "triangle.json").string(),
                          "--spectrum", (dir / "zd.json").string(), "--window", "8",
                          "--probes", "-0.5,0.5,5", "--out", bad}) == 2);
  const auto rep = io::load_json_file(bad);
  CHECK(rep.at("report").at("verdict") == "refuted");
  CHECK(rep.at("report").contains("witness"));
}

TEST_CASE("cli analyze composes the pipeline") {
  const auto dir = make_dir("cli_analyze");
  write_file(dir / "triangle.json", triangle_json());
  write_file(dir / "square.json", square_json());
  write_file(dir / "segment.json",
             R"({"dim":2,"vertices":[["0","0"],["1","1"]]})");

  const auto tri_out = (dir / "tri.json").string();
  CHECK(cli::run_command({"analyze", "--body", (dir / "triangle.json").string(),
                          "--out", tri_out}) == 0);
  const auto tri = io::load_json_file(tri_out);
  CHECK(tri.at("symmetry").at("is_symmetric") == false);
  CHECK(tri.at("bm_gap") == "1/2");
  CHECK(tri.at("certificate").at("contradiction_margin") == "3/8");

  const auto sq_out = (dir / "sq.json").string();
  CHECK(cli::run_command({"analyze", "--body", (dir / "square.json").string(),
                          "--window", "10", "--out", sq_out}) == 0);
  const auto sq = io::load_json_file(sq_out);
  CHECK(sq.at("symmetry").at("is_symmetric") == true);
  CHECK(sq.at("bm_gap") == "0");
  CHECK(sq.at("spectrum_report").at("verdict") == "verified-on-window");

  CHECK(cli::run_command({"analyze", "--body", (dir / "segment.json").string(),
                          "--out", (dir / "seg.json").string()}) == 1);
}

TEST_CASE("cli reports are byte-deterministic") {
  const auto dir = make_dir("cli_determinism");
  write_file(dir / "triangle.json", triangle_json());
  const auto out1 = (dir / "c1.json").string();
  const auto out2 = (dir / "c2.json").string();
  CHECK(cli::run_command(
            {"certify", "--body", (dir / "triangle.json").string(), "--out", out1}) ==
        0);
  CHECK(cli::run_command(
            {"certify", "--body", (dir / "triangle.json").string(), "--out", out2}) ==
        0);
  CHECK(read_file(out1) == read_file(out2));
  CHECK(!read_file(out1).empty());
}

TEST_CASE("cli ft-eval and autocorr emit values and grids") {
  const auto dir = make_dir("cli_ft");
  write_file(dir / "square.json", square_json());
  const auto out = (dir / "ft.json").string();
  CHECK(cli::run_command({"ft-eval", "--body", (dir / "square.json").string(),
                          "--xi", "1,0", "--out", out}) == 0);
  const auto rep = io::load_json_file(out);
  CHECK(rep.at("value").at("is_zero") == true);

  const auto aout = (dir / "ac.json").string();
  const auto csv = (dir / "ac.csv").string();
  CHECK(cli::run_command({"autocorr", "--body", (dir / "square.json").string(),
                          "--x", "1/2,1/2", "--grid-h", "1/4", "--grid-out", csv,
                          "--out", aout}) == 0);
  const auto arep = io::load_json_file(aout);
  CHECK(arep.at("value").at("value") == "1/4");
  std::ifstream is(csv);
  const auto grid = io::read_grid_csv(is);
  CHECK(grid.grid.dim() == 2);

  CHECK(cli::run_command({"ft-eval", "--body", (dir / "missing.json").string()}) == 1);
  CHECK(cli::run_command({"bogus-subcommand"}) != 0);
}

TEST_CASE("config validation") {
  io::AnalysisConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tolerance_zero = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.tolerance_zero = 1e-9;
  cfg.point_cap = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("cli verify-spectrum accepts a points file") {
  const auto dir = make_dir("cli_points");
  write_file(dir / "square.json", square_json());
  // Sparse explicit candidate set: refuted by the completeness sum.
  write_file(dir / "points.json",
             R"({"dim":2,"points":[["0","0"],["2","0"],["0","2"],["2","2"]],)"
             R"("window":{"lo":["-6","-6"],"hi":["6","6"]}})");
  const auto out = (dir / "spec.json").string();
  const int code = cli::run_command(
      {"verify-spectrum", "--body", (dir / "square.json").string(), "--spectrum",
       (dir / "points.json").string(), "--probes", "-0.25,0.25,3", "--out", out});
  CHECK(code == 2);
  CHECK(io::load_json_file(out).at("report").at("verdict") == "refuted");
}
