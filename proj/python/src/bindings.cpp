#include "spectile/certify.hpp"
#include "spectile/cli.hpp"
#include "spectile/fourier.hpp"
#include "spectile/geometry.hpp"
#include "spectile/io.hpp"
#include "spectile/lattice.hpp"
#include "spectile/spectral.hpp"
#include "spectile/tiling.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spectile;
using geometry::Polytope;
using lattice::Lattice;
using lattice::PointSet;

namespace {

Rational rational_from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  if (py::isinstance<py::float_>(h)) return rational_from_double(h.cast<double>());
  // Fraction and friends: anything with numerator/denominator.
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    const auto num = py::str(h.attr("numerator")).cast<std::string>();
    const auto den = py::str(h.attr("denominator")).cast<std::string>();
    return parse_rational(num + "/" + den);
  }
  throw ParseError("expected a rational: str 'p/q', int, float, or Fraction");
}

Point point_from_py(const py::handle& h) {
  Point p;
  for (const auto& c : h.cast<py::sequence>()) p.push_back(rational_from_py(c));
  return p;
}

std::vector<Point> points_from_py(const py::handle& h) {
  std::vector<Point> pts;
  for (const auto& row : h.cast<py::sequence>()) pts.push_back(point_from_py(row));
  return pts;
}

py::list point_to_py(const Point& p) {
  py::list out;
  for (const auto& c : p) out.append(format_rational(c));
  return out;
}

py::object json_to_py(const io::json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& e : j) out.append(json_to_py(e));
    return out;
  }
  py::dict out;
  for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
  return out;
}

io::json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    io::json j = io::json::object();
    for (const auto& item : h.cast<py::dict>())
      j[item.first.cast<std::string>()] = py_to_json(item.second);
    return j;
  }
  io::json j = io::json::array();
  for (const auto& e : h.cast<py::sequence>()) j.push_back(py_to_json(e));
  return j;
}

Box box_from_py(const py::handle& lo, const py::handle& hi) {
  return Box{point_from_py(lo), point_from_py(hi)};
}

fourier::GridSpec grid_spec_from_py(int dim, const py::handle& lo,
                                    const py::handle& hi, size_t count) {
  if (count < 2) throw ParseError("probe grid needs count >= 2");
  fourier::GridSpec g;
  const Point plo = point_from_py(lo);
  const Point phi = point_from_py(hi);
  for (int i = 0; i < dim; ++i) {
    g.origin.push_back(plo[i]);
    g.spacing.push_back((phi[i] - plo[i]) / static_cast<long long>(count - 1));
    g.extent.push_back(count);
  }
  return g;
}

PointSet pointset_from_parts(int dim, const py::handle& points,
                             const py::object& window_lo,
                             const py::object& window_hi) {
  PointSet s;
  s.dim = dim;
  s.points = points_from_py(points);
  if (!window_lo.is_none() && !window_hi.is_none()) {
    s.window = box_from_py(window_lo, window_hi);
  } else {
    if (s.points.empty()) throw ParseError("empty point set needs a window");
    Point lo = s.points[0], hi = s.points[0];
    for (const auto& p : s.points)
      for (int i = 0; i < dim; ++i) {
        if (p[i] < lo[i]) lo[i] = p[i];
        if (p[i] > hi[i]) hi[i] = p[i];
      }
    s.window = Box{lo, hi};
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Spectral sets and translational tilings for convex polytopes: exact "
      "rational geometry, closed-form indicator transforms, tiling and "
      "spectrum verification, and non-spectrality certificates.";

  py::register_exception<DegenerateBody>(m, "DegenerateBodyError");
  py::register_exception<SymmetricBody>(m, "SymmetricBodyError");
  py::register_exception<InsufficientWindow>(m, "InsufficientWindowError");
  py::register_exception<WindowTooLarge>(m, "WindowTooLargeError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<Polytope>(m, "Polytope")
      .def_static(
          "hull",
          [](int dim, const py::sequence& pts) {
            return Polytope::hull(dim, points_from_py(pts));
          },
          py::arg("dim"), py::arg("points"),
          "Convex hull; reduces to the extreme points.")
      .def_static(
          "box",
          [](const py::sequence& lo, const py::sequence& hi) {
            return Polytope::box(point_from_py(lo), point_from_py(hi));
          },
          py::arg("lo"), py::arg("hi"))
      .def_static(
          "simplex",
          [](const py::sequence& pts) {
            return Polytope::simplex(points_from_py(pts));
          },
          py::arg("vertices"))
      .def_static("unit_cube", &Polytope::unit_cube, py::arg("dim"))
      .def_property_readonly("dim", &Polytope::dim)
      .def("vertices",
           [](const Polytope& p) {
             py::list out;
             for (const auto& v : p.vertices()) out.append(point_to_py(v));
             return out;
           })
      .def("volume", [](const Polytope& p) { return format_rational(p.volume()); })
      .def("volume_float", [](const Polytope& p) { return to_double(p.volume()); })
      .def("centroid", [](const Polytope& p) { return point_to_py(p.centroid()); })
      .def(
          "contains",
          [](const Polytope& p, const py::sequence& x, bool strictly) {
            return p.contains(point_from_py(x), strictly);
          },
          py::arg("point"), py::arg("strictly") = false)
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope d=" + std::to_string(p.dim()) + " vertices=" +
               std::to_string(p.vertices().size()) + " volume=" +
               format_rational(p.volume()) + ">";
      });

  m.def(
      "minkowski_sum",
      [](const Polytope& a, const Polytope& b) { return geometry::minkowski_sum(a, b); },
      py::arg("p"), py::arg("q"));
  m.def(
      "translate",
      [](const Polytope& p, const py::sequence& t) {
        return geometry::translate(p, point_from_py(t));
      },
      py::arg("p"), py::arg("t"));
  m.def(
      "reflect",
      [](const Polytope& p, const py::sequence& c) {
        return geometry::reflect(p, point_from_py(c));
      },
      py::arg("p"), py::arg("center"));
  m.def(
      "scale",
      [](const Polytope& p, const py::handle& rho, const py::sequence& c) {
        return geometry::scale(p, rational_from_py(rho), point_from_py(c));
      },
      py::arg("p"), py::arg("rho"), py::arg("center"));
  m.def("difference_body", &geometry::difference_body, py::arg("p"),
        "Minkowski difference P - P, symmetric about the origin.");
  m.def(
      "symmetry_report",
      [](const Polytope& p) {
        return json_to_py(io::symmetry_to_json(geometry::symmetry_report(p)));
      },
      py::arg("p"));
  m.def(
      "intersection",
      [](const Polytope& a, const Polytope& b) -> py::object {
        auto r = geometry::intersection(a, b);
        if (!r) return py::none();
        return py::cast(*r);
      },
      py::arg("p"), py::arg("q"),
      "Full-dimensional intersection or None when interiors are disjoint.");

  m.def(
      "ft_indicator",
      [](const Polytope& p, const std::vector<double>& xi) {
        return fourier::ft_indicator(p, xi);
      },
      py::arg("p"), py::arg("xi"));
  m.def(
      "autocorrelation",
      [](const Polytope& h, const py::sequence& x) {
        return format_rational(fourier::autocorrelation(h, point_from_py(x)));
      },
      py::arg("h"), py::arg("x"), "Exact overlap volume vol(H & (H + x)).");
  m.def(
      "autocorrelation_float",
      [](const Polytope& h, const py::sequence& x) {
        return to_double(fourier::autocorrelation(h, point_from_py(x)));
      },
      py::arg("h"), py::arg("x"));
  m.def(
      "ft_autocorrelation",
      [](const Polytope& h, const std::vector<double>& xi) {
        return fourier::ft_autocorrelation(h, xi);
      },
      py::arg("h"), py::arg("xi"));
  m.def(
      "dft_oracle",
      [](const Polytope& p, const std::vector<double>& xi, const py::handle& h,
         const std::string& mode) {
        const auto m_ = mode == "clipped" ? fourier::DftMode::Clipped
                                          : fourier::DftMode::Midpoint;
        return fourier::dft_oracle(p, xi, rational_from_py(h), m_);
      },
      py::arg("p"), py::arg("xi"), py::arg("h"), py::arg("mode") = "midpoint");
  m.def(
      "zero_test",
      [](const Polytope& p, const std::vector<double>& xi, double tau) {
        return fourier::zero_test(p, xi, tau);
      },
      py::arg("p"), py::arg("xi"), py::arg("tau") = 1e-9);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init([](int dim, const py::sequence& points,
                       const py::object& window_lo, const py::object& window_hi) {
             return pointset_from_parts(dim, points, window_lo, window_hi);
           }),
           py::arg("dim"), py::arg("points"), py::arg("window_lo") = py::none(),
           py::arg("window_hi") = py::none())
      .def_readonly("dim", &PointSet::dim)
      .def("points",
           [](const PointSet& s) {
             py::list out;
             for (const auto& p : s.points) out.append(point_to_py(p));
             return out;
           })
      .def("__len__", [](const PointSet& s) { return s.points.size(); })
      .def("window", [](const PointSet& s) {
        return py::make_tuple(point_to_py(s.window.lo), point_to_py(s.window.hi));
      });

  py::class_<Lattice>(m, "Lattice")
      .def(py::init([](const py::sequence& basis_rows) {
             const auto rows = points_from_py(basis_rows);
             const int d = static_cast<int>(rows.size());
             Mat basis(d, d);
             for (int k = 0; k < d; ++k) {
               if (static_cast<int>(rows[k].size()) != d)
                 throw ParseError("lattice basis must be square");
               for (int i = 0; i < d; ++i) basis.at(i, k) = rows[k][i];
             }
             return Lattice(std::move(basis));
           }),
           py::arg("basis"), "Rows are the generator vectors.")
      .def_property_readonly("dim", &Lattice::dim)
      .def("dual", &Lattice::dual)
      .def("density", [](const Lattice& l) { return format_rational(l.density()); })
      .def("density_float", [](const Lattice& l) { return to_double(l.density()); })
      .def("basis",
           [](const Lattice& l) {
             py::list rows;
             for (int k = 0; k < l.dim(); ++k) {
               py::list row;
               for (int i = 0; i < l.dim(); ++i)
                 row.append(format_rational(l.basis().at(i, k)));
               rows.append(row);
             }
             return rows;
           })
      .def(
          "contains",
          [](const Lattice& l, const py::sequence& p) {
            return l.contains(point_from_py(p));
          },
          py::arg("point"))
      .def(
          "enumerate_window",
          [](const Lattice& l, const py::sequence& lo, const py::sequence& hi,
             size_t cap) { return l.enumerate_window(box_from_py(lo, hi), cap); },
          py::arg("lo"), py::arg("hi"), py::arg("cap") = size_t{10'000'000})
      .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; });

  m.def("difference_set", &lattice::difference_set, py::arg("points"));

  m.def(
      "verify_tiling",
      [](const Polytope& body, const PointSet& s, const py::sequence& core_lo,
         const py::sequence& core_hi, const py::handle& h) {
        const auto r = tiling::verify_tiling(body, s, box_from_py(core_lo, core_hi),
                                             rational_from_py(h));
        return json_to_py(io::tiling_report_to_json(r));
      },
      py::arg("body"), py::arg("translates"), py::arg("core_lo"),
      py::arg("core_hi"), py::arg("h"));
  m.def(
      "tiling_level",
      [](const py::handle& f_integral, const Lattice& l) {
        return format_rational(
            tiling::tiling_level_exact(rational_from_py(f_integral), l));
      },
      py::arg("f_integral"), py::arg("lattice"));
  m.def(
      "support_condition_necessary",
      [](const Polytope& body, const Lattice& l, double tau,
         const py::object& radius) {
        std::optional<double> r;
        if (!radius.is_none()) r = radius.cast<double>();
        return json_to_py(io::necessity_report_to_json(
            tiling::support_condition_necessary(body, l, tau, r)));
      },
      py::arg("body"), py::arg("lattice"), py::arg("tau") = 1e-9,
      py::arg("radius") = py::none());
  m.def(
      "support_condition_sufficient",
      [](const py::function& fhat_is_zero, double fhat_at_zero, const Lattice& l,
         const py::handle& delta, double radius) {
        auto probe = [&fhat_is_zero](const Point& p) {
          py::list coords;
          for (const auto& c : p) coords.append(format_rational(c));
          return fhat_is_zero(coords).cast<bool>();
        };
        return json_to_py(io::sufficiency_report_to_json(
            tiling::support_condition_sufficient(probe, fhat_at_zero, l,
                                                 rational_from_py(delta), radius)));
      },
      py::arg("fhat_is_zero"), py::arg("fhat_at_zero"), py::arg("lattice"),
      py::arg("delta"), py::arg("radius"),
      "fhat_is_zero receives one probe point as a list of rational strings.");

  m.def(
      "inner_product",
      [](const Polytope& omega, const std::vector<double>& lam,
         const std::vector<double>& mu) {
        return spectral::inner_product(omega, lam, mu);
      },
      py::arg("omega"), py::arg("lam"), py::arg("mu"));
  m.def(
      "orthogonality_graph",
      [](const Polytope& omega, const PointSet& cands, double tau) {
        const auto g = spectral::orthogonality_graph(omega, cands, tau);
        py::dict out;
        py::list nodes, edges;
        for (const auto& p : g.nodes.points) nodes.append(point_to_py(p));
        for (const auto& [i, j] : g.edges) edges.append(py::make_tuple(i, j));
        out["nodes"] = nodes;
        out["edges"] = edges;
        out["tau"] = g.tau;
        return out;
      },
      py::arg("omega"), py::arg("candidates"), py::arg("tau") = 1e-9);
  m.def(
      "verify_spectrum_window",
      [](const Polytope& omega, const PointSet& s, const py::sequence& probe_lo,
         const py::sequence& probe_hi, size_t probe_count, double tau_completeness,
         double tau_zero) {
        const auto probes =
            grid_spec_from_py(omega.dim(), probe_lo, probe_hi, probe_count);
        return json_to_py(io::spectrum_report_to_json(spectral::verify_spectrum_window(
            omega, s, probes, tau_completeness, tau_zero)));
      },
      py::arg("omega"), py::arg("spectrum"), py::arg("probe_lo"),
      py::arg("probe_hi"), py::arg("probe_count") = size_t{9},
      py::arg("tau_completeness") = 1e-6, py::arg("tau_zero") = 1e-9);

  m.def("normalize_volume", &certify::normalize_volume, py::arg("p"));
  m.def("can_normalize_exactly", &certify::can_normalize_exactly, py::arg("p"));
  m.def(
      "brunn_minkowski_gap",
      [](const Polytope& p) {
        const auto [vol_h, gap] = certify::brunn_minkowski_gap(p);
        return py::make_tuple(format_rational(vol_h), format_rational(gap));
      },
      py::arg("p"), "Returns (vol_H, vol_H - vol_P) as exact rational strings.");
  m.def(
      "certify_nonspectral",
      [](const Polytope& p) {
        return json_to_py(
            io::certificate_to_json(certify::certify_nonspectral(p)));
      },
      py::arg("p"));
  m.def(
      "certificate_consistency_check",
      [](const py::dict& cert) {
        const auto c = io::certificate_from_json(py_to_json(cert));
        const auto r = certify::certificate_consistency_check(c);
        return py::make_tuple(r.ok, r.failing_field);
      },
      py::arg("certificate"));

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) { return cli::run_command(args); },
      py::arg("args"),
      "Runs one CLI subcommand; returns the process exit code.");
}
