#include "chainbands/floquet.hpp"

#include <numbers>
#include <string>

namespace chainbands {

BandTable sample_bands(const PeriodicChainGraph& g, std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "quasi-momentum grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  "quasi-momentum grid is not strictly increasing at index " + std::to_string(i));
    }
  }
  BandTable table;
  table.grid.assign(grid.begin(), grid.end());
  table.values.resize(static_cast<Eigen::Index>(grid.size()), g.vertex_count());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.values.row(static_cast<Eigen::Index>(i)) = band_functions(g, grid[i]).lambdas.transpose();
  }
  return table;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "a grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
  }
  grid.back() = hi;
  return grid;
}

std::vector<double> half_zone_grid(int count) {
  return uniform_grid(0.0, std::numbers::pi, count);
}

}  // namespace chainbands
