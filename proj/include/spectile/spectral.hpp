#pragma once

#include "spectile/fourier.hpp"
#include "spectile/lattice.hpp"

namespace spectile::spectral {

using fourier::GridSpec;
using geometry::Polytope;
using lattice::PointSet;

// <e_lambda, e_mu> over the body: equals ft_indicator(omega, mu - lambda).
Complex inner_product(const Polytope& omega, std::span<const double> lambda,
                      std::span<const double> mu);

// Edge (i, j) iff the transform vanishes (under tau) at lambda_i - lambda_j.
struct OrthogonalityGraph {
  PointSet nodes;
  std::vector<std::pair<int, int>> edges;  // i < j
  double tau = 0;
};
OrthogonalityGraph orthogonality_graph(const Polytope& omega,
                                       const PointSet& candidates, double tau);

enum class SpectrumVerdict { VerifiedOnWindow, Refuted, Inconclusive };

std::string verdict_name(SpectrumVerdict v);

struct SpectrumWitness {
  bool is_pair = false;  // else a completeness probe
  Point a, b;            // the non-orthogonal pair
  Point probe;           // probe point with deviation beyond tolerance
  double value = 0;      // |ft| for pairs, the completeness sum for probes
};

struct SpectrumReport {
  bool is_orthogonal = true;
  double completeness_deviation = 0;  // max over probes of |sum - 1|
  Box probe_window;
  SpectrumVerdict verdict = SpectrumVerdict::Inconclusive;
  std::optional<SpectrumWitness> witness;
  // Empirical decay envelope |ft| <= C/|xi| and the L2 tail of the
  // completeness sum over the excluded window complement.
  double tail_constant = 0;
  double tail_bound = 0;
  double tau_completeness = 0;
  double tau_zero = 0;
  size_t node_count = 0;
  size_t probe_count = 0;
  double window_distance = 0;  // probe box to window boundary
};

// Finite-window check of the two spectral-pair conditions: pairwise
// orthogonality on S and the completeness sum over the probe grid. A window
// can refute; it can only ever verify *on the window*, which the verdict
// says explicitly.
SpectrumReport verify_spectrum_window(const Polytope& omega, const PointSet& s,
                                      const GridSpec& probes,
                                      double tau_completeness = 1e-6,
                                      double tau_zero = 1e-9);

}  // namespace spectile::spectral
