#ifndef CHAINBANDS_BAND_ANALYSIS_HPP
#define CHAINBANDS_BAND_ANALYSIS_HPP

#include <functional>
#include <span>
#include <vector>

#include "chainbands/floquet.hpp"
#include "chainbands/graph.hpp"

namespace chainbands {

inline constexpr int kDefaultSamples = 401;
inline constexpr int kMinCoarseSamples = 41;

struct Tolerances {
  double refine_k = 1e-6;    // golden-section bracket width
  double symmetry_k = 1e-6;  // distance to 0 or π that counts as a symmetry point
  double value = 1e-10;      // values this close to the extremum also attain it
  double flat = 1e-9;        // band spread below this is a flat band
};

enum class ExtremumKind { Min, Max };
enum class EdgeClass { SymmetryPoint, Interior, FlatBand };

const char* to_string(ExtremumKind kind) noexcept;
const char* to_string(EdgeClass cls) noexcept;

struct BandEdge {
  int band = 0;  // 1-based
  ExtremumKind kind = ExtremumKind::Min;
  double value = 0.0;
  std::vector<double> attained_at;  // ascending, in [0, π]; a plateau appears as its two ends
  double band_spread = 0.0;         // max - min of the band
  EdgeClass classification = EdgeClass::SymmetryPoint;
};

struct BandEdges {
  BandEdge min;
  BandEdge max;
};

struct Extremum {
  double k = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of `f` on [lo, hi] down to a bracket of width
/// `tol`. Returns the best point evaluated, endpoints included.
Extremum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                 double tol);

/// Edges of an arbitrary even, 2π-periodic function of k, searched on [0, π].
/// Used for both discrete bands and lifted quantum bands; `band` only labels
/// the result.
BandEdges locate_function_edges(const std::function<double(double)>& f, int band,
                                int n_coarse = kDefaultSamples, const Tolerances& tol = {});

/// Global min and max of λ_j (`band` is 1-based) with every attaining
/// quasi-momentum in [0, π] and their classification.
/// Throws BadBandIndex, or InvalidArgument when n_coarse < 41 or a tolerance is not positive.
BandEdges locate_band_edges(const PeriodicChainGraph& g, int band, int n_coarse = kDefaultSamples,
                            const Tolerances& tol = {});

/// Edges of all bands, ascending band index.
std::vector<BandEdges> locate_all_band_edges(const PeriodicChainGraph& g,
                                             int n_coarse = kDefaultSamples,
                                             const Tolerances& tol = {});

/// FlatBand if the band spread is below `tol_flat`, otherwise SymmetryPoint
/// if any attaining k is within `tol_k` of 0 or π, otherwise Interior.
EdgeClass classify_edge(const BandEdge& edge, double tol_k, double tol_flat);

/// Quasi-momenta used to certify a flat value: Δ(k)x = λx checked at each.
std::vector<double> flat_certification_ks();

/// The set D of constant band values, ascending, one entry per distinct value:
/// values that are eigenvalues (to within `tol_flat`) at every probe. With
/// empty `probe_ks` the probes are 0, 1/2, π(√5-1)/2 and the default coarse
/// grid. A value is reported only if an eigenvector of Δ(k) reaches residual
/// below 1e-8 for it at every certification k.
std::vector<double> detect_flat_bands(const PeriodicChainGraph& g,
                                      std::span<const double> probe_ks = {},
                                      double tol_flat = Tolerances{}.flat);

/// Smallest residual ‖Δ(k)x - λx‖ over the unit eigenvectors x of Δ(k).
double eigenpair_residual(const PeriodicChainGraph& g, double k, double lambda);

struct FermiSet {
  bool all_of_torus = false;   // lambda is a flat band value
  std::vector<double> points;  // ascending, in (-π, π]; empty when all_of_torus
};

/// Band data cached for repeated level-set queries on one graph.
class DispersionRelation {
 public:
  explicit DispersionRelation(const PeriodicChainGraph& g, int samples = 2001,
                              double tol_flat = Tolerances{}.flat);

  const BandTable& table() const noexcept { return table_; }
  const std::vector<double>& flat_values() const noexcept { return flat_; }

  /// All k in (-π, π] with λ_j(k) = lambda (within `tol`) for some j.
  FermiSet fermi_set(double lambda, double tol = 1e-9) const;

 private:
  PeriodicChainGraph graph_;
  BandTable table_;
  std::vector<double> flat_;
  double tol_flat_;
};

FermiSet fermi_set(const PeriodicChainGraph& g, double lambda, double tol = 1e-9);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted union of closed intervals; overlapping or touching ones merge.
/// Throws InvalidArgument if some lo > hi.
std::vector<Interval> spectrum_union(std::span<const Interval> bands);

/// Spectrum as the union of all band ranges.
std::vector<Interval> spectrum(const PeriodicChainGraph& g, int n_coarse = kDefaultSamples);

/// True iff the samples of λ_j on a uniform [0, π] grid that fall inside
/// `window` form a strictly monotone sequence. Throws WindowIntersectsFlatBand
/// if a flat value lies in the window.
bool check_monotonic(const PeriodicChainGraph& g, int band, Interval window,
                     int samples = kDefaultSamples, double tol_flat = Tolerances{}.flat);

}  // namespace chainbands

#endif  // CHAINBANDS_BAND_ANALYSIS_HPP
