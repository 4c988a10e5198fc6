#pragma once

#include "spectile/certify.hpp"
#include "spectile/fourier.hpp"
#include "spectile/lattice.hpp"
#include "spectile/spectral.hpp"
#include "spectile/tiling.hpp"

#include <json.hpp>

#include <iosfwd>

namespace spectile::io {

// Reports keep insertion order so identical inputs give byte-identical bytes.
using json = nlohmann::ordered_json;

using certify::NonSpectralityCertificate;
using fourier::GridFunction;
using geometry::Polytope;
using lattice::Lattice;
using lattice::PointSet;

// Defaults used by every pipeline; echoed into each report header.
struct AnalysisConfig {
  double tolerance_zero = 1e-9;
  double tolerance_completeness = 1e-6;
  Rational grid_spacing{1, 64};
  double window_radius = 12.0;
  size_t point_cap = 10'000'000;

  void validate() const;
};

json config_to_json(const AnalysisConfig& c);

Rational rational_from_json(const json& j);
Point point_from_json(const json& j);
json point_to_json(const Point& p);

json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const json& j);

json box_to_json(const Box& b);

json symmetry_to_json(const geometry::SymmetryReport& s);
json tiling_report_to_json(const tiling::TilingReport& r);
json necessity_report_to_json(const tiling::NecessityReport& r);
json sufficiency_report_to_json(const tiling::SufficiencyReport& r);
json spectrum_report_to_json(const spectral::SpectrumReport& r);
json certificate_to_json(const NonSpectralityCertificate& c);
NonSpectralityCertificate certificate_from_json(const json& j);

void write_grid_csv(std::ostream& os, const GridFunction& g);
GridFunction read_grid_csv(std::istream& is);

json load_json_file(const std::string& path);

}  // namespace spectile::io
