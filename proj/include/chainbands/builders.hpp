#ifndef CHAINBANDS_BUILDERS_HPP
#define CHAINBANDS_BUILDERS_HPP

#include <cstdint>

#include "chainbands/graph.hpp"

namespace chainbands {

/// The line Z: one vertex joined to its own translate. λ_1(k) = cos k.
PeriodicChainGraph line_graph();

/// Five-vertex cell with two connecting edges, obtained by folding the
/// square-periodic graph with vertices labelled 1..5 (here 0..4) along the
/// diagonal period. Intra edges {0,1} {0,4} {1,2} {2,3} {2,4} {3,4};
/// connecting edges 0 -> 2 and 1 -> 3 (next cell). Degrees (3,3,4,3,3).
/// Bands 2 and 3 take their max and min strictly inside (0, π).
PeriodicChainGraph folded_hksw_graph();

/// Triangle A B C with one connecting edge C -> A(next). Degrees (3,2,3).
PeriodicChainGraph triangle_chain();

/// Hub H with midpoints M1, M2: H-M1, H-M2 intra and M1 -> H, M2 -> H into
/// the next cell. Degrees (4,2,2). (0, 1, -1) is an eigenvector with
/// eigenvalue 0 at every k, so 0 is a flat band.
PeriodicChainGraph parallel_path_chain();

/// Random connected cell of 2..max_cell_vertices vertices, intra edges drawn
/// independently with probability 0.6 until the cell is connected, plus one
/// connecting edge between uniformly chosen endpoints. Deterministic per seed
/// (std::mt19937_64, no library distributions).
PeriodicChainGraph random_m1_chain(std::uint64_t seed, int max_cell_vertices = 6);

}  // namespace chainbands

#endif  // CHAINBANDS_BUILDERS_HPP
