#ifndef CHAINBANDS_QUANTUM_MAP_HPP
#define CHAINBANDS_QUANTUM_MAP_HPP

#include <vector>

#include "chainbands/band_analysis.hpp"
#include "chainbands/graph.hpp"

namespace chainbands {

/// Energy range [0, e_max] for lifted quantum-graph energies.
struct EnergyWindow {
  double e_max = 0.0;
};

/// Lifted spectrum of the equilateral quantum graph at one quasi-momentum.
/// `dirichlet_energies` lists the points (nπ)², n ≥ 1, inside the window,
/// where the discrete correspondence does not determine the spectrum.
struct QuantumBandPoint {
  double k = 0.0;
  std::vector<double> energies;
  std::vector<double> dirichlet_energies;
};

/// All E in the window with cos(√E) = lambda, ascending and deduplicated:
/// E = (±arccos λ + 2πn)². |lambda| up to 1 + 1e-12 is clamped; larger
/// values throw LambdaOutOfRange.
std::vector<double> discrete_to_quantum(double lambda, EnergyWindow window);

/// Points (nπ)², n ≥ 1, not above e_max.
std::vector<double> dirichlet_energies(EnergyWindow window);

QuantumBandPoint quantum_bands(const PeriodicChainGraph& g, double k, EnergyWindow window);

/// arccos(λ)², the principal-branch energy in [0, π²].
double principal_energy(double lambda);

/// Edges of the principal-branch quantum band E(k) = arccos(λ_j(k))² for the
/// discrete band `band`. The lift reverses order, so a discrete max becomes a
/// quantum min at the same k.
BandEdges principal_branch_edges(const PeriodicChainGraph& g, int band,
                                 int n_coarse = kDefaultSamples, const Tolerances& tol = {});

}  // namespace chainbands

#endif  // CHAINBANDS_QUANTUM_MAP_HPP
