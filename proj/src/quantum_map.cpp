#include "chainbands/quantum_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace chainbands {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e-12;

double clamped_arccos(double lambda) {
  if (!(std::abs(lambda) <= 1.0 + kClamp)) {
    throw Error(ErrorCode::LambdaOutOfRange,
                "lambda " + std::to_string(lambda) + " is outside [-1, 1]");
  }
  return std::acos(std::clamp(lambda, -1.0, 1.0));
}

void check_window(EnergyWindow window) {
  if (!(window.e_max >= 0.0) || !std::isfinite(window.e_max)) {
    throw Error(ErrorCode::InvalidArgument, "energy window must have finite e_max >= 0");
  }
}

}  // namespace

std::vector<double> discrete_to_quantum(double lambda, EnergyWindow window) {
  check_window(window);
  const double theta = clamped_arccos(lambda);
  const double root_max = std::sqrt(window.e_max);
  std::vector<double> roots;
  // √E runs over θ + 2πn and 2π(n+1) - θ, both increasing in n.
  for (int n = 0;; ++n) {
    const double up = theta + 2.0 * kPi * n;
    const double down = 2.0 * kPi * (n + 1) - theta;
    if (up > root_max && down > root_max) break;
    if (up <= root_max) roots.push_back(up);
    if (down <= root_max) roots.push_back(down);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + b); }),
              roots.end());
  std::vector<double> energies;
  energies.reserve(roots.size());
  for (double r : roots) {
    const double e = r * r;
    if (e <= window.e_max) energies.push_back(e);
  }
  return energies;
}

std::vector<double> dirichlet_energies(EnergyWindow window) {
  check_window(window);
  std::vector<double> points;
  for (int n = 1;; ++n) {
    const double e = (n * kPi) * (n * kPi);
    if (e > window.e_max) break;
    points.push_back(e);
  }
  return points;
}

QuantumBandPoint quantum_bands(const PeriodicChainGraph& g, double k, EnergyWindow window) {
  QuantumBandPoint point{k, {}, dirichlet_energies(window)};
  const auto lambdas = band_functions(g, k).lambdas;
  for (double lambda : lambdas) {
    const auto lifted = discrete_to_quantum(lambda, window);
    point.energies.insert(point.energies.end(), lifted.begin(), lifted.end());
  }
  std::sort(point.energies.begin(), point.energies.end());
  return point;
}

double principal_energy(double lambda) {
  const double theta = clamped_arccos(lambda);
  return theta * theta;
}

BandEdges principal_branch_edges(const PeriodicChainGraph& g, int band, int n_coarse,
                                 const Tolerances& tol) {
  if (band < 1 || band > g.vertex_count()) {
    throw Error(ErrorCode::BadBandIndex, "band index " + std::to_string(band) + " out of range");
  }
  return locate_function_edges(
      [&g, band](double k) { return principal_energy(band_functions(g, k).lambdas(band - 1)); },
      band, n_coarse, tol);
}

}  // namespace chainbands
