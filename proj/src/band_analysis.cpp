#include "chainbands/band_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace chainbands {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCertificationResidual = 1e-8;

void check_band_index(const PeriodicChainGraph& g, int band) {
  if (band < 1 || band > g.vertex_count()) {
    throw Error(ErrorCode::BadBandIndex, "band index " + std::to_string(band) +
                                             " is not in 1.." +
                                             std::to_string(g.vertex_count()));
  }
}

void check_tolerances(int n_coarse, const Tolerances& tol) {
  if (n_coarse < kMinCoarseSamples) {
    throw Error(ErrorCode::InvalidArgument,
                "coarse grid needs at least " + std::to_string(kMinCoarseSamples) + " points");
  }
  if (!(tol.refine_k > 0 && tol.symmetry_k > 0 && tol.value > 0 && tol.flat > 0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
}

bool near_symmetry_point(double k, double tol_k) {
  return std::abs(k) <= tol_k || std::abs(k - kPi) <= tol_k;
}

double eigenvalue(const PeriodicChainGraph& g, int band, double k) {
  return band_functions(g, k).lambdas(band - 1);
}

// Minimum of `f` over [0, π] together with every point that attains it.
// Candidates are the two endpoints plus a golden-section refinement of every
// coarse local minimum. Nearby attainers are merged, keeping an exact endpoint
// when the cluster has one; a plateau is reported by its two ends.
struct MinSearch {
  double value;
  std::vector<double> attained_at;
};

MinSearch search_minimum(const std::function<double(double)>& f, std::span<const double> grid,
                         std::span<const double> samples, const Tolerances& tol) {
  const std::size_t n = grid.size();
  struct Candidate {
    double k;
    double value;
    bool exact_endpoint;
  };
  std::vector<Candidate> candidates{{grid.front(), samples.front(), true},
                                    {grid.back(), samples.back(), true}};
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || samples[i] <= samples[i - 1];
    const bool right_ok = i + 1 == n || samples[i] <= samples[i + 1];
    if (!left_ok || !right_ok) continue;
    const double lo = grid[i == 0 ? 0 : i - 1];
    const double hi = grid[i + 1 == n ? n - 1 : i + 1];
    const Extremum e = golden_section_minimize(f, lo, hi, tol.refine_k);
    candidates.push_back({e.k, e.value, false});
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best = std::min(best, c.value);

  std::vector<Candidate> attaining;
  for (const auto& c : candidates) {
    if (c.value <= best + tol.value) attaining.push_back(c);
  }
  std::sort(attaining.begin(), attaining.end(),
            [](const Candidate& a, const Candidate& b) { return a.k < b.k; });

  // Two attainers belong to the same feature if they are within one grid
  // spacing or every coarse sample between them also attains (a plateau).
  const double spacing = grid[1] - grid[0];
  auto plateau_between = [&](double a, double b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (grid[i] > a && grid[i] < b && samples[i] > best + tol.value) return false;
    }
    return true;
  };
  MinSearch result{best, {}};
  std::size_t start = 0;
  while (start < attaining.size()) {
    std::size_t stop = start + 1;
    while (stop < attaining.size() &&
           (attaining[stop].k - attaining[stop - 1].k <= spacing ||
            plateau_between(attaining[stop - 1].k, attaining[stop].k))) {
      ++stop;
    }
    if (attaining[stop - 1].k - attaining[start].k > 2 * spacing) {
      result.attained_at.push_back(attaining[start].k);  // plateau: report both ends
      result.attained_at.push_back(attaining[stop - 1].k);
    } else {
      const Candidate* pick = &attaining[start];
      for (std::size_t i = start; i < stop; ++i) {
        const Candidate& c = attaining[i];
        if (c.exact_endpoint && !pick->exact_endpoint) {
          pick = &c;
        } else if (c.exact_endpoint == pick->exact_endpoint && c.value < pick->value) {
          pick = &c;
        }
      }
      result.attained_at.push_back(pick->k);
    }
    start = stop;
  }
  return result;
}

}  // namespace

const char* to_string(ExtremumKind kind) noexcept {
  return kind == ExtremumKind::Min ? "min" : "max";
}

const char* to_string(EdgeClass cls) noexcept {
  switch (cls) {
    case EdgeClass::SymmetryPoint: return "SymmetryPoint";
    case EdgeClass::Interior: return "Interior";
    case EdgeClass::FlatBand: return "FlatBand";
  }
  return "Unknown";
}

Extremum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                 double tol) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  Extremum best{lo, f(lo)};
  auto consider = [&best](double k, double value) {
    if (value < best.value) best = {k, value};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

BandEdges locate_function_edges(const std::function<double(double)>& f, int band, int n_coarse,
                                const Tolerances& tol) {
  check_tolerances(n_coarse, tol);
  const std::vector<double> grid = half_zone_grid(n_coarse);
  std::vector<double> samples(grid.size());
  std::transform(grid.begin(), grid.end(), samples.begin(), f);
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double coarse_spread = *hi_it - *lo_it;

  BandEdges edges;
  edges.min.band = edges.max.band = band;
  edges.min.kind = ExtremumKind::Min;
  edges.max.kind = ExtremumKind::Max;

  if (coarse_spread < tol.flat) {
    // A constant branch attains its value everywhere; report the half-zone ends.
    edges.min.value = *lo_it;
    edges.max.value = *hi_it;
    edges.min.attained_at = edges.max.attained_at = {grid.front(), grid.back()};
    edges.min.band_spread = edges.max.band_spread = coarse_spread;
  } else {
    const MinSearch low = search_minimum(f, grid, samples, tol);
    std::vector<double> negated(samples.size());
    std::transform(samples.begin(), samples.end(), negated.begin(), [](double v) { return -v; });
    const MinSearch high =
        search_minimum([&f](double k) { return -f(k); }, grid, negated, tol);
    edges.min.value = low.value;
    edges.min.attained_at = low.attained_at;
    edges.max.value = -high.value;
    edges.max.attained_at = high.attained_at;
    edges.min.band_spread = edges.max.band_spread = edges.max.value - edges.min.value;
  }
  edges.min.classification = classify_edge(edges.min, tol.symmetry_k, tol.flat);
  edges.max.classification = classify_edge(edges.max, tol.symmetry_k, tol.flat);
  return edges;
}

BandEdges locate_band_edges(const PeriodicChainGraph& g, int band, int n_coarse,
                            const Tolerances& tol) {
  check_band_index(g, band);
  return locate_function_edges([&g, band](double k) { return eigenvalue(g, band, k); }, band,
                               n_coarse, tol);
}

std::vector<BandEdges> locate_all_band_edges(const PeriodicChainGraph& g, int n_coarse,
                                             const Tolerances& tol) {
  std::vector<BandEdges> all;
  for (int j = 1; j <= g.vertex_count(); ++j) all.push_back(locate_band_edges(g, j, n_coarse, tol));
  return all;
}

EdgeClass classify_edge(const BandEdge& edge, double tol_k, double tol_flat) {
  if (edge.band_spread < tol_flat) return EdgeClass::FlatBand;
  const bool at_symmetry = std::any_of(edge.attained_at.begin(), edge.attained_at.end(),
                                       [tol_k](double k) { return near_symmetry_point(k, tol_k); });
  return at_symmetry ? EdgeClass::SymmetryPoint : EdgeClass::Interior;
}

std::vector<double> flat_certification_ks() {
  return {0.5, kPi * (std::sqrt(5.0) - 1.0) / 2.0, 1.0 + std::numbers::sqrt2 / 2.0};
}

double eigenpair_residual(const PeriodicChainGraph& g, double k, double lambda) {
  const ComplexMatrix<double> delta = floquet_matrix(g, k);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<double>> solver(delta);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "eigenvector computation did not converge");
  }
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < delta.cols(); ++i) {
    const Eigen::VectorXcd x = solver.eigenvectors().col(i);
    best = std::min(best, (delta * x - lambda * x).norm());
  }
  return best;
}

std::vector<double> detect_flat_bands(const PeriodicChainGraph& g, std::span<const double> probe_ks,
                                      double tol_flat) {
  std::vector<double> probes(probe_ks.begin(), probe_ks.end());
  if (probes.empty()) {
    probes = {0.0, 0.5, kPi * (std::sqrt(5.0) - 1.0) / 2.0};
    const auto coarse = half_zone_grid(kDefaultSamples);
    probes.insert(probes.end(), coarse.begin(), coarse.end());
  } else if (probes.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "flat-band detection needs at least three probes");
  }

  // A flat value is an eigenvalue at every probe. Sorted-index spreads are not
  // enough: a dispersive branch crossing the flat value splits it between
  // two sorted bands.
  std::vector<Eigen::VectorXd> spectra;
  spectra.reserve(probes.size());
  for (double k : probes) spectra.push_back(band_functions(g, k).lambdas);

  std::vector<double> flat;
  const auto certification = flat_certification_ks();
  for (const double candidate : spectra.front()) {
    double lo = candidate;
    double hi = candidate;
    bool present = true;
    for (const auto& lambdas : spectra) {
      const Eigen::Index nearest = [&] {
        Eigen::Index idx;
        (lambdas.array() - candidate).abs().minCoeff(&idx);
        return idx;
      }();
      lo = std::min(lo, lambdas(nearest));
      hi = std::max(hi, lambdas(nearest));
      if (hi - lo >= tol_flat) {
        present = false;
        break;
      }
    }
    if (!present) continue;
    const double value = 0.5 * (lo + hi);
    if (!flat.empty() && std::abs(value - flat.back()) <= tol_flat) continue;  // multiplicity
    const bool certified =
        std::all_of(certification.begin(), certification.end(), [&](double k) {
          return eigenpair_residual(g, k, value) < kCertificationResidual;
        });
    if (certified) flat.push_back(value);
  }
  return flat;
}

DispersionRelation::DispersionRelation(const PeriodicChainGraph& g, int samples, double tol_flat)
    : graph_(g),
      table_(sample_bands(g, half_zone_grid(samples))),
      flat_(detect_flat_bands(g, {}, tol_flat)),
      tol_flat_(tol_flat) {}

FermiSet DispersionRelation::fermi_set(double lambda, double tol) const {
  FermiSet result;
  for (double d : flat_) {
    if (std::abs(lambda - d) <= std::max(tol, tol_flat_)) {
      result.all_of_torus = true;
      return result;
    }
  }

  struct Root {
    double k;
    bool exact;
  };
  std::vector<Root> roots;
  const auto& grid = table_.grid;
  const std::size_t n = grid.size();
  for (Eigen::Index j = 0; j < table_.band_count(); ++j) {
    const int band = static_cast<int>(j) + 1;
    auto residual = [this, band, lambda](double k) { return eigenvalue(graph_, band, k) - lambda; };
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = table_.values(static_cast<Eigen::Index>(i), j) - lambda;

    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(r[i]) <= tol) roots.push_back({grid[i], true});
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(r[i]) <= tol || std::abs(r[i + 1]) <= tol || r[i] * r[i + 1] >= 0) continue;
      double a = grid[i];
      double b = grid[i + 1];
      double fa = r[i];
      for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = residual(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back({0.5 * (a + b), false});
    }
    // Tangential contacts never change sign; refine every coarse extremum.
    for (std::size_t i = 0; i < n; ++i) {
      const double here = r[i];
      const double left = i == 0 ? here : r[i - 1];
      const double right = i + 1 == n ? here : r[i + 1];
      const bool is_min = here <= left && here <= right;
      const bool is_max = here >= left && here >= right;
      if (!is_min && !is_max) continue;
      if (std::abs(here) > std::max(std::abs(here - left), std::abs(here - right)) + tol) {
        continue;  // too far from the level to touch it inside this bracket
      }
      const double lo = grid[i == 0 ? 0 : i - 1];
      const double hi = grid[i + 1 == n ? n - 1 : i + 1];
      const double sign = is_min ? 1.0 : -1.0;
      const Extremum e = golden_section_minimize(
          [&residual, sign](double k) { return sign * residual(k); }, lo, hi, 1e-12);
      if (std::abs(e.value) <= tol) roots.push_back({e.k, false});
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.k < b.k; });
  constexpr double kMerge = 1e-6;
  std::vector<double> half;
  std::size_t start = 0;
  while (start < roots.size()) {
    std::size_t stop = start + 1;
    while (stop < roots.size() && roots[stop].k - roots[stop - 1].k <= kMerge) ++stop;
    double k = roots[start].k;
    for (std::size_t i = start; i < stop; ++i) {
      if (roots[i].exact) {
        k = roots[i].k;
        break;
      }
    }
    if (k <= kMerge) k = 0.0;
    if (kPi - k <= kMerge) k = kPi;
    half.push_back(k);
    start = stop;
  }

  for (double k : half) {
    if (k != 0.0 && k != kPi) result.points.push_back(-k);
    result.points.push_back(k);
  }
  std::sort(result.points.begin(), result.points.end());
  return result;
}

FermiSet fermi_set(const PeriodicChainGraph& g, double lambda, double tol) {
  return DispersionRelation(g).fermi_set(lambda, tol);
}

std::vector<Interval> spectrum_union(std::span<const Interval> bands) {
  std::vector<Interval> sorted(bands.begin(), bands.end());
  for (const auto& b : sorted) {
    if (!(b.lo <= b.hi)) {
      throw Error(ErrorCode::InvalidArgument, "band interval has lo > hi");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  for (const auto& b : sorted) {
    if (!merged.empty() && b.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, b.hi);
    } else {
      merged.push_back(b);
    }
  }
  return merged;
}

std::vector<Interval> spectrum(const PeriodicChainGraph& g, int n_coarse) {
  std::vector<Interval> bands;
  for (const auto& e : locate_all_band_edges(g, n_coarse)) bands.push_back({e.min.value, e.max.value});
  return spectrum_union(bands);
}

bool check_monotonic(const PeriodicChainGraph& g, int band, Interval window, int samples,
                     double tol_flat) {
  check_band_index(g, band);
  for (double d : detect_flat_bands(g, {}, tol_flat)) {
    if (d >= window.lo - tol_flat && d <= window.hi + tol_flat) {
      throw Error(ErrorCode::WindowIntersectsFlatBand,
                  "flat band value " + std::to_string(d) + " lies in the window");
    }
  }
  std::vector<double> inside;
  for (double k : half_zone_grid(samples)) {
    const double v = eigenvalue(g, band, k);
    if (v >= window.lo && v <= window.hi) inside.push_back(v);
  }
  if (inside.size() < 2) return true;
  const bool increasing = inside[1] > inside[0];
  for (std::size_t i = 1; i < inside.size(); ++i) {
    const double step = inside[i] - inside[i - 1];
    if (increasing ? !(step > 0) : !(step < 0)) return false;
  }
  return true;
}

}  // namespace chainbands
