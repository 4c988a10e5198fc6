#include "spectile/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spectile::io {

void AnalysisConfig::validate() const {
  if (tolerance_zero <= 0 || tolerance_completeness <= 0)
    throw Error("tolerances must be positive");
  if (grid_spacing <= 0) throw Error("grid spacing must be positive");
  if (point_cap < 1) throw Error("point cap must be at least 1");
}

json config_to_json(const AnalysisConfig& c) {
  json j;
  j["tolerance_zero"] = c.tolerance_zero;
  j["tolerance_completeness"] = c.tolerance_completeness;
  j["grid_spacing"] = format_rational(c.grid_spacing);
  j["window_radius"] = c.window_radius;
  j["point_cap"] = c.point_cap;
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw ParseError("expected a rational (string \"p/q\" or number)");
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coordinate array");
  Point p;
  p.reserve(j.size());
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

json point_to_json(const Point& p) {
  json j = json::array();
  for (const auto& c : p) j.push_back(format_rational(c));
  return j;
}

json polytope_to_json(const Polytope& p) {
  json j;
  j["dim"] = p.dim();
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = verts;
  return j;
}

Polytope polytope_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs \"dim\" and \"vertices\"");
  const int dim = j.at("dim").get<int>();
  std::vector<Point> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(point_from_json(v));
  return Polytope::hull(dim, std::move(verts));
}

json lattice_to_json(const Lattice& l) {
  json j;
  json rows = json::array();
  // Row k of the JSON is generator k (column k of the basis matrix).
  for (int k = 0; k < l.dim(); ++k) {
    json row = json::array();
    for (int i = 0; i < l.dim(); ++i)
      row.push_back(format_rational(l.basis().at(i, k)));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

Lattice lattice_from_json(const json& j) {
  if (!j.contains("basis")) throw ParseError("lattice JSON needs \"basis\"");
  const auto& rows = j.at("basis");
  const int d = static_cast<int>(rows.size());
  Mat basis(d, d);
  for (int k = 0; k < d; ++k) {
    const auto& row = rows.at(k);
    if (static_cast<int>(row.size()) != d)
      throw ParseError("lattice basis must be square");
    for (int i = 0; i < d; ++i) basis.at(i, k) = rational_from_json(row.at(i));
  }
  return Lattice(std::move(basis));
}

json box_to_json(const Box& b) {
  json j;
  j["lo"] = point_to_json(b.lo);
  j["hi"] = point_to_json(b.hi);
  return j;
}

namespace {

Box box_from_json(const json& j) {
  return Box{point_from_json(j.at("lo")), point_from_json(j.at("hi"))};
}

Box bounding_box_of(const std::vector<Point>& pts, int dim) {
  if (pts.empty()) {
    Point z(dim, Rational(0));
    return Box{z, z};
  }
  Point lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (int i = 0; i < dim; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  return Box{std::move(lo), std::move(hi)};
}

}  // namespace

json pointset_to_json(const PointSet& s) {
  json j;
  j["dim"] = s.dim;
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(point_to_json(p));
  j["points"] = pts;
  j["window"] = box_to_json(s.window);
  return j;
}

PointSet pointset_from_json(const json& j) {
  if (!j.contains("points")) throw ParseError("point set JSON needs \"points\"");
  PointSet s;
  for (const auto& p : j.at("points")) s.points.push_back(point_from_json(p));
  if (s.points.empty()) throw ParseError("point set is empty");
  s.dim = j.contains("dim") ? j.at("dim").get<int>()
                            : static_cast<int>(s.points[0].size());
  for (const auto& p : s.points)
    if (static_cast<int>(p.size()) != s.dim)
      throw ParseError("point arity mismatch in point set");
  s.window = j.contains("window") ? box_from_json(j.at("window"))
                                  : bounding_box_of(s.points, s.dim);
  return s;
}

json symmetry_to_json(const geometry::SymmetryReport& s) {
  json j;
  j["is_symmetric"] = s.is_symmetric;
  if (s.center) j["center"] = point_to_json(*s.center);
  return j;
}

json tiling_report_to_json(const tiling::TilingReport& r) {
  json j;
  j["level_estimate"] = r.level_estimate;
  j["max_deviation"] = r.max_deviation;
  j["core_window"] = box_to_json(r.core_window);
  j["translate_count"] = r.translate_count;
  j["margin"] = r.margin;
  j["grid_points"] = r.grid_points;
  j["excluded_points"] = r.excluded_points;
  return j;
}

json necessity_report_to_json(const tiling::NecessityReport& r) {
  json j;
  j["holds"] = r.holds;
  j["radius"] = r.radius;
  j["tau"] = r.tau;
  j["points_checked"] = r.points_checked;
  if (r.witness) {
    j["witness"] = point_to_json(*r.witness);
    j["witness_value"] = r.witness_value;
  }
  return j;
}

json sufficiency_report_to_json(const tiling::SufficiencyReport& r) {
  json j;
  j["holds"] = r.holds;
  if (r.holds) j["level"] = r.level;
  j["radius"] = r.radius;
  j["delta"] = format_rational(r.delta);
  j["points_checked"] = r.points_checked;
  if (r.witness_dual) j["witness_dual"] = point_to_json(*r.witness_dual);
  if (r.witness_probe) j["witness_probe"] = point_to_json(*r.witness_probe);
  return j;
}

json spectrum_report_to_json(const spectral::SpectrumReport& r) {
  json j;
  j["verdict"] = spectral::verdict_name(r.verdict);
  j["is_orthogonal"] = r.is_orthogonal;
  j["completeness_deviation"] = r.completeness_deviation;
  j["probe_window"] = box_to_json(r.probe_window);
  j["node_count"] = r.node_count;
  j["probe_count"] = r.probe_count;
  j["window_distance"] = r.window_distance;
  j["tail_constant"] = r.tail_constant;
  j["tail_bound"] = r.tail_bound;
  j["tau_completeness"] = r.tau_completeness;
  j["tau_zero"] = r.tau_zero;
  if (r.witness) {
    json w;
    if (r.witness->is_pair) {
      w["type"] = "non-orthogonal-pair";
      w["a"] = point_to_json(r.witness->a);
      w["b"] = point_to_json(r.witness->b);
    } else {
      w["type"] = "completeness-deviation";
      w["probe"] = point_to_json(r.witness->probe);
    }
    w["value"] = r.witness->value;
    j["witness"] = w;
  }
  return j;
}

json certificate_to_json(const NonSpectralityCertificate& c) {
  json j;
  j["dim"] = c.dim;
  j["normalization"] = c.normalized_exactly ? "exact-scaling" : "homogeneous-ratio";
  j["body"] = polytope_to_json(c.body);
  j["vol_body"] = format_rational(c.vol_body);
  j["vol_H"] = format_rational(c.vol_H);
  j["bm_gap"] = format_rational(c.bm_gap);
  j["rho_pow_d"] = format_rational(c.rho_pow_d);
  j["level_from_tiling"] = format_rational(c.level_from_tiling);
  j["level_from_value_at_zero"] = format_rational(c.level_from_value_at_zero);
  j["contradiction_margin"] = format_rational(c.contradiction_margin);
  j["symmetry"] = symmetry_to_json(c.symmetry);
  return j;
}

NonSpectralityCertificate certificate_from_json(const json& j) {
  NonSpectralityCertificate c(polytope_from_json(j.at("body")));
  c.dim = j.at("dim").get<int>();
  c.normalized_exactly = j.at("normalization").get<std::string>() == "exact-scaling";
  c.vol_body = rational_from_json(j.at("vol_body"));
  c.vol_H = rational_from_json(j.at("vol_H"));
  c.bm_gap = rational_from_json(j.at("bm_gap"));
  c.rho_pow_d = rational_from_json(j.at("rho_pow_d"));
  c.level_from_tiling = rational_from_json(j.at("level_from_tiling"));
  c.level_from_value_at_zero = rational_from_json(j.at("level_from_value_at_zero"));
  c.contradiction_margin = rational_from_json(j.at("contradiction_margin"));
  c.symmetry.is_symmetric = j.at("symmetry").at("is_symmetric").get<bool>();
  if (j.at("symmetry").contains("center"))
    c.symmetry.center = point_from_json(j.at("symmetry").at("center"));
  return c;
}

namespace {

std::string double_repr(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_grid_csv(std::ostream& os, const GridFunction& g) {
  const int d = g.grid.dim();
  os << "# spectile-grid dim=" << d << " kind=" << (g.is_real ? "real" : "complex")
     << "\n# origin=";
  for (int i = 0; i < d; ++i)
    os << (i ? "," : "") << format_rational(g.grid.origin[i]);
  os << " spacing=";
  for (int i = 0; i < d; ++i)
    os << (i ? "," : "") << format_rational(g.grid.spacing[i]);
  os << " extent=";
  for (int i = 0; i < d; ++i) os << (i ? "," : "") << g.grid.extent[i];
  os << "\n";
  for (int i = 0; i < d; ++i) os << "x" << i << ",";
  os << (g.is_real ? "value" : "re,im") << "\n";
  const size_t n = g.grid.count();
  for (size_t f = 0; f < n; ++f) {
    const Point x = g.grid.point_at(g.grid.unflatten(f));
    for (int i = 0; i < d; ++i) os << format_rational(x[i]) << ",";
    os << double_repr(g.values[f].real());
    if (!g.is_real) os << "," << double_repr(g.values[f].imag());
    os << "\n";
  }
}

namespace {

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

std::string meta_field(const std::string& line, const std::string& key) {
  const auto pos = line.find(key + "=");
  if (pos == std::string::npos) throw ParseError("grid CSV missing " + key);
  auto end = line.find(' ', pos);
  if (end == std::string::npos) end = line.size();
  return line.substr(pos + key.size() + 1, end - pos - key.size() - 1);
}

}  // namespace

GridFunction read_grid_csv(std::istream& is) {
  std::string line1, line2, header;
  if (!std::getline(is, line1) || !std::getline(is, line2) ||
      !std::getline(is, header))
    throw ParseError("grid CSV truncated");
  const int d = std::stoi(meta_field(line1, "dim"));
  const bool real = meta_field(line1, "kind") == "real";
  GridFunction g;
  g.is_real = real;
  for (const auto& s : split(meta_field(line2, "origin"), ','))
    g.grid.origin.push_back(parse_rational(s));
  for (const auto& s : split(meta_field(line2, "spacing"), ','))
    g.grid.spacing.push_back(parse_rational(s));
  for (const auto& s : split(meta_field(line2, "extent"), ','))
    g.grid.extent.push_back(std::stoull(s));
  if (static_cast<int>(g.grid.origin.size()) != d)
    throw ParseError("grid CSV dimension mismatch");
  const size_t n = g.grid.count();
  g.values.reserve(n);
  std::string row;
  while (std::getline(is, row)) {
    if (row.empty()) continue;
    const auto cells = split(row, ',');
    const size_t want = static_cast<size_t>(d) + (real ? 1 : 2);
    if (cells.size() != want) throw ParseError("grid CSV row arity");
    const double re = std::stod(cells[d]);
    const double im = real ? 0.0 : std::stod(cells[d + 1]);
    g.values.emplace_back(re, im);
  }
  if (g.values.size() != n) throw ParseError("grid CSV value count mismatch");
  return g;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace spectile::io
