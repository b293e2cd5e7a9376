#ifndef CHAINBANDS_IO_HPP
#define CHAINBANDS_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "chainbands/band_analysis.hpp"
#include "chainbands/floquet.hpp"
#include "chainbands/graph.hpp"
#include "chainbands/quantum_map.hpp"

namespace chainbands::io {

// Graph description files are JSON objects:
//
//   { "vertices": 5,
//     "edges": [[0, 1, 0], [0, 2, 1], ...] }
//
// Each edge is [u, v, shift] with 0-based vertex ids; shift 0 joins two
// vertices of the cell, shift 1 joins u to v in the next cell (-1 is accepted
// and re-oriented). Optional string keys "name" and "comment" are ignored;
// any other key is an error. Comments (// and /* */) are allowed.

/// Throws Error(ParseError) naming the line/column or the offending element.
GraphDescription parse_graph_description(std::string_view text,
                                         std::string_view source = "<input>");

/// Reads `path`, or `path` + ".json" when `path` does not exist.
/// Throws Error(FileError) if neither can be read.
GraphDescription read_graph_file(const std::filesystem::path& path);

std::string to_json(const GraphDescription& description);

/// 17 significant digits; integral values keep a trailing ".0".
std::string format_real(double value);

/// Header `k,lambda_1,...,lambda_n`, one row per grid point.
std::string band_table_csv(const BandTable& table);

/// Header `band,kind,value,k_attained,classification`, two rows per band
/// (min then max). Multiple attaining k are joined with ';'. Ends with the
/// line `ALL_EDGES_AT_SYMMETRY_POINTS: yes|no` (yes iff nothing is Interior).
std::string band_edges_report(std::span<const BandEdges> edges);

/// One value per line.
std::string flat_band_report(std::span<const double> values);

/// Header `k,E`, one row per lifted energy; the window's Dirichlet points are
/// listed first as `#` comment lines.
std::string quantum_csv(std::span<const QuantumBandPoint> points);

/// Static SVG line plot: k on the horizontal axis, λ on the vertical, one
/// <polyline> per band.
std::string band_plot_svg(const BandTable& table);

}  // namespace chainbands::io

#endif  // CHAINBANDS_IO_HPP
