#include "chainbands/builders.hpp"

#include <numeric>
#include <random>
#include <string>

namespace chainbands {

PeriodicChainGraph line_graph() { return validate({1, {{0, 0, 1}}}); }

PeriodicChainGraph folded_hksw_graph() {
  return validate({5,
                   {{0, 1, 0},
                    {0, 4, 0},
                    {1, 2, 0},
                    {2, 3, 0},
                    {2, 4, 0},
                    {3, 4, 0},
                    {0, 2, 1},
                    {1, 3, 1}}});
}

PeriodicChainGraph triangle_chain() {
  return validate({3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {2, 0, 1}}});
}

PeriodicChainGraph parallel_path_chain() {
  return validate({3, {{0, 1, 0}, {0, 2, 0}, {1, 0, 1}, {2, 0, 1}}});
}

namespace {

bool cell_connected(int n, const std::vector<EdgeSpec>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    const int a = find(static_cast<int>(e.u));
    const int b = find(static_cast<int>(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

PeriodicChainGraph random_m1_chain(std::uint64_t seed, int max_cell_vertices) {
  if (max_cell_vertices < 2 || max_cell_vertices > 6) {
    throw Error(ErrorCode::InvalidArgument, "max_cell_vertices must be in 2..6, got " +
                                                std::to_string(max_cell_vertices));
  }
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };
  auto coin = [&rng](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

  const int n = 2 + static_cast<int>(below(static_cast<std::uint64_t>(max_cell_vertices - 1)));
  GraphDescription cell{n, {}};
  do {
    cell.edges.clear();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(0.6)) cell.edges.push_back({u, v, 0});
      }
    }
  } while (!cell_connected(n, cell.edges));

  const auto from = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(n)));
  const auto to = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(n)));
  cell.edges.push_back({from, to, 1});
  return validate(cell);
}

}  // namespace chainbands
