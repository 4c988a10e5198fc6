#pragma once

#include "spectile/geometry.hpp"

namespace spectile::certify {

using geometry::Polytope;
using geometry::SymmetryReport;

// Quantitative record of the level contradiction for a non-symmetric convex
// body: the half-difference body H has vol_H > 1 after volume normalization,
// and shrinking its autocorrelation support by rho forces two incompatible
// tiling levels, vol_H versus rho^d * vol_H^2. All fields are exact
// rationals; every inequality is strict in exact arithmetic.
struct NonSpectralityCertificate {
  explicit NonSpectralityCertificate(Polytope b) : body(std::move(b)) {}

  int dim = 0;
  Polytope body;
  // True when the body stored is scaled to volume exactly 1; otherwise the
  // certificate uses the scale-invariant ratio vol(H)/vol(body), which equals
  // the normalized vol_H without taking irrational roots.
  bool normalized_exactly = false;
  Rational vol_body;
  Rational vol_H;        // > 1
  Rational bm_gap;       // vol_H - 1
  Rational rho_pow_d;    // in (1/vol_H, 1); rho^d is carried, never rho itself
  Rational level_from_tiling;         // = vol_H
  Rational level_from_value_at_zero;  // = rho_pow_d * vol_H^2
  Rational contradiction_margin;      // difference of the two levels, > 0
  SymmetryReport symmetry;
};

struct ConsistencyResult {
  bool ok = true;
  std::string failing_field;  // empty when ok

  explicit operator bool() const { return ok; }
};

// Isotropic scaling about the centroid to volume exactly 1 when the needed
// d-th root is rational; otherwise returns the body unchanged (callers fall
// back to the scale-invariant certificate form).
Polytope normalize_volume(const Polytope& p);
bool can_normalize_exactly(const Polytope& p);

// vol(H) and vol(H) - vol(P) for H = (P - P)/2. The gap is zero exactly for
// centrally symmetric bodies and strictly positive otherwise.
std::pair<Rational, Rational> brunn_minkowski_gap(const Polytope& p);

// Refuses symmetric bodies (SymmetricBody); degenerate input never gets here
// because Polytope construction already rejects it.
NonSpectralityCertificate certify_nonspectral(const Polytope& p);

// Recomputes every certificate quantity from scratch through the geometry
// and transform routes and re-checks the support containment rho*K inside K.
ConsistencyResult certificate_consistency_check(const NonSpectralityCertificate& c);

}  // namespace spectile::certify
