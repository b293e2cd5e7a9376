#ifndef CHAINBANDS_FLOQUET_HPP
#define CHAINBANDS_FLOQUET_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "chainbands/graph.hpp"

namespace chainbands {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Floquet matrix of the normalized adjacency operator
///   (Δf)(v) = d_v^{-1/2} Σ_{u~v} d_u^{-1/2} f(u)
/// at quasi-momentum k. Each connecting edge u -> v (v in the next cell)
/// contributes e^{ik}/sqrt(d_u d_v) at (u, v) and the conjugate at (v, u).
/// Entries accumulate, so a connecting loop u -> u adds 2cos(k)/d_u on the
/// diagonal and an intra edge plus a connecting edge on the same pair add up.
template <typename Real>
ComplexMatrix<Real> floquet_matrix(const PeriodicChainGraph& g, Real k) {
  using Complex = std::complex<Real>;
  const auto n = g.vertex_count();
  ComplexMatrix<Real> delta = ComplexMatrix<Real>::Zero(n, n);
  const Complex phase = std::polar(Real(1), std::remainder(k, Real(2) * std::numbers::pi_v<Real>));
  const auto d = g.degrees();
  for (const Edge& e : g.edges()) {
    const Real w = Real(1) / std::sqrt(Real(d[e.u]) * Real(d[e.v]));
    if (e.connecting()) {
      delta(e.u, e.v) += w * phase;
      delta(e.v, e.u) += w * std::conj(phase);
    } else {
      delta(e.u, e.v) += Complex(w);
      delta(e.v, e.u) += Complex(w);
    }
  }
  return delta;
}

/// Eigenvalues λ_1(k) ≤ … ≤ λ_n(k) of the Floquet matrix at one quasi-momentum.
template <typename Real>
struct BandValues {
  Real k{};
  RealVector<Real> lambdas;
};

/// Sorted spectrum of a Hermitian matrix. Throws EigensolverFailure.
template <typename Real>
RealVector<Real> hermitian_eigenvalues(const ComplexMatrix<Real>& matrix) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure,
                "Hermitian eigensolver did not converge on a " + std::to_string(matrix.rows()) +
                    "x" + std::to_string(matrix.rows()) + " matrix");
  }
  return solver.eigenvalues();
}

template <typename Real>
BandValues<Real> band_functions(const PeriodicChainGraph& g, Real k) {
  return {k, hermitian_eigenvalues<Real>(floquet_matrix<Real>(g, k))};
}

/// Band functions sampled on a strictly increasing quasi-momentum grid.
/// Row i of `values` holds λ_1..λ_n at grid[i].
struct BandTable {
  std::vector<double> grid;
  Eigen::MatrixXd values;

  Eigen::Index band_count() const noexcept { return values.cols(); }
  Eigen::Index size() const noexcept { return values.rows(); }
  auto band(Eigen::Index j) const { return values.col(j); }
};

/// Throws InvalidArgument if the grid is empty or not strictly increasing.
BandTable sample_bands(const PeriodicChainGraph& g, std::span<const double> grid);

/// `count` equispaced points on [lo, hi], endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, int count);

/// `count` equispaced points on the half zone [0, π].
std::vector<double> half_zone_grid(int count);

}  // namespace chainbands

#endif  // CHAINBANDS_FLOQUET_HPP
