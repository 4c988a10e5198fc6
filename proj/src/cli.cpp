#include "spectile/cli.hpp"

#include "spectile/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace spectile::cli {

namespace {

using io::AnalysisConfig;
using io::json;
using geometry::Polytope;
using lattice::Lattice;
using lattice::PointSet;

void emit(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw Error("cannot write " + out_path);
  os << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// "lo,hi" (same on every axis) or "lo1,hi1;lo2,hi2;...".
Box parse_box_spec(const std::string& spec, int dim) {
  const auto groups = split(spec, ';');
  Point lo(dim), hi(dim);
  if (groups.size() == 1) {
    const auto parts = split(groups[0], ',');
    if (parts.size() != 2) throw ParseError("box spec wants \"lo,hi\"");
    const Rational a = parse_rational(parts[0]);
    const Rational b = parse_rational(parts[1]);
    for (int i = 0; i < dim; ++i) {
      lo[i] = a;
      hi[i] = b;
    }
  } else {
    if (static_cast<int>(groups.size()) != dim)
      throw ParseError("box spec must have one lo,hi group per axis");
    for (int i = 0; i < dim; ++i) {
      const auto parts = split(groups[static_cast<size_t>(i)], ',');
      if (parts.size() != 2) throw ParseError("box spec wants \"lo,hi\" per axis");
      lo[i] = parse_rational(parts[0]);
      hi[i] = parse_rational(parts[1]);
    }
  }
  return Box{std::move(lo), std::move(hi)};
}

// "lo,hi,count" applied to every axis.
fourier::GridSpec parse_grid_spec(const std::string& spec, int dim) {
  const auto parts = split(spec, ',');
  if (parts.size() != 3) throw ParseError("grid spec wants \"lo,hi,count\"");
  const Rational lo = parse_rational(parts[0]);
  const Rational hi = parse_rational(parts[1]);
  const long long count = std::stoll(parts[2]);
  if (count < 2 || hi <= lo) throw ParseError("grid spec needs hi > lo, count >= 2");
  fourier::GridSpec g;
  g.origin.assign(dim, lo);
  g.spacing.assign(dim, (hi - lo) / (count - 1));
  g.extent.assign(dim, static_cast<size_t>(count));
  return g;
}

std::vector<double> parse_freq(const std::string& spec) {
  std::vector<double> xi;
  for (const auto& s : split(spec, ',')) xi.push_back(std::stod(s));
  return xi;
}

json header(const std::string& command, const AnalysisConfig& cfg) {
  json j;
  j["command"] = command;
  j["config"] = io::config_to_json(cfg);
  return j;
}

double body_diameter(const Polytope& p) {
  double best = 0;
  const auto& vs = p.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      double acc = 0;
      for (int c = 0; c < p.dim(); ++c) {
        const double dcoord = to_double(vs[i][c] - vs[j][c]);
        acc += dcoord * dcoord;
      }
      best = std::max(best, std::sqrt(acc));
    }
  return best;
}

// Window with enough slack on every side: covers all translates that can
// reach the core and keeps the reported margin at least the body diameter.
Box tiling_window(const Polytope& body, const Box& core, const Rational& h) {
  const Box bb = body.bounding_box();
  Rational slack(0);
  for (int i = 0; i < body.dim(); ++i) {
    const Rational a = bb.lo[i] < 0 ? Rational(-bb.lo[i]) : bb.lo[i];
    const Rational b = bb.hi[i] < 0 ? Rational(-bb.hi[i]) : bb.hi[i];
    if (a > slack) slack = a;
    if (b > slack) slack = b;
  }
  const Rational diam = rational_from_double(std::ceil(body_diameter(body)));
  if (diam > slack) slack = diam;
  slack += h;
  Point lo(body.dim()), hi(body.dim());
  for (int i = 0; i < body.dim(); ++i) {
    lo[i] = core.lo[i] - slack;
    hi[i] = core.hi[i] + slack;
  }
  return Box{std::move(lo), std::move(hi)};
}

int cmd_ft_eval(const std::string& body_path, const std::string& xi_spec,
                const std::string& grid_spec, const std::string& grid_out,
                const std::string& out, const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  json rep = header("ft-eval", cfg);
  rep["body"] = io::polytope_to_json(body);
  rep["volume"] = format_rational(body.volume());
  if (!xi_spec.empty()) {
    const auto xi = parse_freq(xi_spec);
    const Complex v = fourier::ft_indicator(body, xi);
    json jx;
    jx["xi"] = xi_spec;
    jx["re"] = v.real();
    jx["im"] = v.imag();
    jx["abs"] = std::abs(v);
    jx["is_zero"] = fourier::zero_test(body, xi, cfg.tolerance_zero);
    rep["value"] = jx;
  }
  if (!grid_spec.empty()) {
    if (grid_out.empty()) throw Error("--grid needs --grid-out");
    const fourier::GridSpec gs = parse_grid_spec(grid_spec, body.dim());
    fourier::GridFunction gf;
    gf.grid = gs;
    gf.is_real = false;
    gf.values.resize(gs.count());
    for (size_t f = 0; f < gf.values.size(); ++f) {
      const Point x = gs.point_at(gs.unflatten(f));
      gf.values[f] = fourier::ft_indicator(body, to_doubles(x));
    }
    std::ofstream os(grid_out, std::ios::binary);
    if (!os) throw Error("cannot write " + grid_out);
    io::write_grid_csv(os, gf);
    rep["grid_csv"] = grid_out;
  }
  emit(rep, out);
  return 0;
}

int cmd_autocorr(const std::string& body_path, const std::string& x_spec,
                 const std::string& grid_h, const std::string& grid_out,
                 const std::string& out, const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  json rep = header("autocorr", cfg);
  rep["body"] = io::polytope_to_json(body);
  rep["vol_H"] = format_rational(body.volume());
  rep["transform_at_zero"] = format_rational(body.volume() * body.volume());
  if (!x_spec.empty()) {
    Point x;
    for (const auto& s : split(x_spec, ',')) x.push_back(parse_rational(s));
    const Rational v = fourier::autocorrelation(body, x);
    json jv;
    jv["x"] = io::point_to_json(x);
    jv["value"] = format_rational(v);
    jv["value_float"] = to_double(v);
    rep["value"] = jv;
  }
  if (!grid_h.empty()) {
    if (grid_out.empty()) throw Error("--grid-h needs --grid-out");
    const fourier::GridFunction gf =
        fourier::sample_autocorrelation(body, parse_rational(grid_h));
    std::ofstream os(grid_out, std::ios::binary);
    if (!os) throw Error("cannot write " + grid_out);
    io::write_grid_csv(os, gf);
    rep["grid_csv"] = grid_out;
  }
  emit(rep, out);
  return 0;
}

int cmd_verify_tiling(const std::string& body_path, const std::string& lattice_path,
                      const std::string& core_spec, const std::string& h_spec,
                      const std::string& out, const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  const Lattice lat = io::lattice_from_json(io::load_json_file(lattice_path));
  if (lat.dim() != body.dim()) throw DimensionMismatch("body/lattice dimension");
  const Box core = parse_box_spec(core_spec, body.dim());
  const Rational h = h_spec.empty() ? cfg.grid_spacing : parse_rational(h_spec);

  const Box window = tiling_window(body, core, h);
  const PointSet s = lat.enumerate_window(window, cfg.point_cap);
  const auto report = tiling::verify_tiling(body, s, core, h);
  const Rational expected = tiling::tiling_level_exact(body.volume(), lat);
  const auto necessary =
      tiling::support_condition_necessary(body, lat, cfg.tolerance_zero);

  const bool is_tiling = report.max_deviation <= cfg.tolerance_zero;
  json rep = header("verify-tiling", cfg);
  rep["body"] = io::polytope_to_json(body);
  rep["lattice"] = io::lattice_to_json(lat);
  rep["h"] = format_rational(h);
  rep["expected_level"] = format_rational(expected);
  rep["is_tiling"] = is_tiling;
  rep["tiling"] = io::tiling_report_to_json(report);
  rep["support_condition_necessary"] = io::necessity_report_to_json(necessary);
  emit(rep, out);
  return is_tiling ? 0 : 2;
}

int cmd_verify_spectrum(const std::string& body_path, const std::string& spectrum_path,
                        double window_radius, const std::string& probes_spec,
                        const std::string& out, const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  const json spec_json = io::load_json_file(spectrum_path);

  PointSet s;
  if (spec_json.contains("basis")) {
    const Lattice lat = io::lattice_from_json(spec_json);
    if (lat.dim() != body.dim()) throw DimensionMismatch("body/spectrum dimension");
    const Rational w = rational_from_double(window_radius);
    Point lo(body.dim(), -w), hi(body.dim(), w);
    s = lat.enumerate_window(Box{std::move(lo), std::move(hi)}, cfg.point_cap);
  } else {
    s = io::pointset_from_json(spec_json);
  }

  const fourier::GridSpec probes =
      parse_grid_spec(probes_spec.empty() ? "-0.5,0.5,33" : probes_spec, body.dim());
  const auto report = spectral::verify_spectrum_window(
      body, s, probes, cfg.tolerance_completeness, cfg.tolerance_zero);

  json rep = header("verify-spectrum", cfg);
  rep["body"] = io::polytope_to_json(body);
  rep["spectrum_source"] = spectrum_path;
  rep["node_count"] = s.points.size();
  rep["report"] = io::spectrum_report_to_json(report);
  emit(rep, out);
  return report.verdict == spectral::SpectrumVerdict::VerifiedOnWindow ? 0 : 2;
}

int cmd_certify(const std::string& body_path, const std::string& out,
                const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  json rep = header("certify", cfg);
  rep["body"] = io::polytope_to_json(body);
  try {
    const auto cert = certify::certify_nonspectral(body);
    const auto consistency = certify::certificate_consistency_check(cert);
    rep["certificate"] = io::certificate_to_json(cert);
    rep["consistency_check"] = consistency.ok;
    if (!consistency.ok) rep["consistency_failing_field"] = consistency.failing_field;
    emit(rep, out);
    return consistency.ok ? 0 : 2;
  } catch (const SymmetricBody& e) {
    rep["error"] = "SymmetricBody";
    rep["message"] = e.what();
    rep["symmetry"] = io::symmetry_to_json(geometry::symmetry_report(body));
    rep["suggestion"] =
        "body is centrally symmetric; run verify-tiling or verify-spectrum "
        "against candidate lattices instead";
    emit(rep, out);
    return 2;
  }
}

int cmd_analyze(const std::string& body_path, double window_radius,
                const std::string& out, const AnalysisConfig& cfg) {
  const Polytope body = io::polytope_from_json(io::load_json_file(body_path));
  json rep = header("analyze", cfg);
  rep["body"] = io::polytope_to_json(body);
  rep["volume"] = format_rational(body.volume());

  const auto sym = geometry::symmetry_report(body);
  rep["symmetry"] = io::symmetry_to_json(sym);
  const auto [vol_h, gap] = certify::brunn_minkowski_gap(body);
  rep["vol_H"] = format_rational(vol_h);
  rep["bm_gap"] = format_rational(gap);

  if (!sym.is_symmetric) {
    const auto cert = certify::certify_nonspectral(body);
    const auto consistency = certify::certificate_consistency_check(cert);
    rep["certificate"] = io::certificate_to_json(cert);
    rep["consistency_check"] = consistency.ok;
    emit(rep, out);
    return consistency.ok ? 0 : 2;
  }

  // Symmetric: no certificate applies; check the integer-lattice spectrum
  // candidate on a finite window.
  Mat eye = Mat::identity(body.dim());
  const Lattice zd(std::move(eye));
  const Rational w = rational_from_double(window_radius);
  Point lo(body.dim(), -w), hi(body.dim(), w);
  const PointSet s = zd.enumerate_window(Box{std::move(lo), std::move(hi)},
                                         cfg.point_cap);
  const fourier::GridSpec probes = parse_grid_spec("-0.5,0.5,17", body.dim());
  const auto report = spectral::verify_spectrum_window(
      body, s, probes, cfg.tolerance_completeness, cfg.tolerance_zero);
  rep["spectrum_candidate"] = "integer lattice";
  rep["spectrum_report"] = io::spectrum_report_to_json(report);
  emit(rep, out);
  return report.verdict == spectral::SpectrumVerdict::VerifiedOnWindow ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"spectral-set and tiling analysis for convex polytopes"};
  app.require_subcommand(1);

  AnalysisConfig cfg;
  std::string out, body_path, lattice_path, spectrum_path;
  std::string xi_spec, x_spec, grid_spec, grid_out, grid_h, core_spec, h_spec,
      probes_spec;
  double window_radius = cfg.window_radius;

  app.add_option("--tau-zero", cfg.tolerance_zero, "zero-test tolerance");
  app.add_option("--tau-completeness", cfg.tolerance_completeness,
                 "completeness tolerance");
  app.add_option("--point-cap", cfg.point_cap, "lattice enumeration cap");

  auto* ft = app.add_subcommand("ft-eval", "evaluate the indicator transform");
  ft->add_option("--body", body_path)->required();
  ft->add_option("--xi", xi_spec, "frequency, comma-separated");
  ft->add_option("--grid", grid_spec, "frequency grid lo,hi,count");
  ft->add_option("--grid-out", grid_out, "CSV path for --grid");
  ft->add_option("--out", out);

  auto* ac = app.add_subcommand("autocorr", "autocorrelation of a body");
  ac->add_option("--body", body_path)->required();
  ac->add_option("--x", x_spec, "offset point, comma-separated rationals");
  ac->add_option("--grid-h", grid_h, "sample spacing for a CSV dump");
  ac->add_option("--grid-out", grid_out, "CSV path for --grid-h");
  ac->add_option("--out", out);

  auto* vt = app.add_subcommand("verify-tiling", "grid-check a lattice tiling");
  vt->set_help_flag("--help", "print help");  // frees -h for the spacing flag
  vt->add_option("--body", body_path)->required();
  vt->add_option("--lattice", lattice_path)->required();
  vt->add_option("--core", core_spec)->required();
  vt->add_option("-h,--h", h_spec, "grid spacing (rational)");
  vt->add_option("--out", out);

  auto* vs = app.add_subcommand("verify-spectrum", "finite-window spectrum check");
  vs->add_option("--body", body_path)->required();
  vs->add_option("--spectrum", spectrum_path, "lattice or point-set JSON")
      ->required();
  vs->add_option("--window", window_radius, "window radius for lattice spectra");
  vs->add_option("--probes", probes_spec, "probe grid lo,hi,count");
  vs->add_option("--out", out);

  auto* ce = app.add_subcommand("certify", "non-spectrality certificate");
  ce->add_option("--body", body_path)->required();
  ce->add_option("--out", out);

  auto* an = app.add_subcommand("analyze", "symmetry, volume gap, certificate");
  an->add_option("--body", body_path)->required();
  an->add_option("--window", window_radius, "spectrum window for symmetric bodies");
  an->add_option("--out", out);

  try {
    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    cfg.validate();
    if (ft->parsed())
      return cmd_ft_eval(body_path, xi_spec, grid_spec, grid_out, out, cfg);
    if (ac->parsed())
      return cmd_autocorr(body_path, x_spec, grid_h, grid_out, out, cfg);
    if (vt->parsed())
      return cmd_verify_tiling(body_path, lattice_path, core_spec, h_spec, out, cfg);
    if (vs->parsed())
      return cmd_verify_spectrum(body_path, spectrum_path, window_radius,
                                 probes_spec, out, cfg);
    if (ce->parsed()) return cmd_certify(body_path, out, cfg);
    if (an->parsed()) return cmd_analyze(body_path, window_radius, out, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace spectile::cli
