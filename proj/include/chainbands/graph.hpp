#ifndef CHAINBANDS_GRAPH_HPP
#define CHAINBANDS_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "chainbands/error.hpp"

namespace chainbands {

using VertexId = std::int32_t;

/// Raw edge as read from user input: `u` in the current cell joined to `v`
/// in the cell `shift` steps to the right. Only shifts -1, 0, +1 are accepted;
/// a -1 edge is re-oriented to +1 during validation.
struct EdgeSpec {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t shift = 0;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Unvalidated cell description: vertex count plus edge list.
struct GraphDescription {
  std::int64_t vertices = 0;
  std::vector<EdgeSpec> edges;

  friend bool operator==(const GraphDescription&, const GraphDescription&) = default;
};

/// Canonical edge of a validated graph. Intra-cell edges (shift 0) have u < v;
/// connecting edges (shift 1) join u in cell j to v in cell j+1.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  int shift = 0;

  bool connecting() const noexcept { return shift == 1; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A Z-periodic chain graph given by one fundamental cell and the edges that
/// join it to its right neighbour. Immutable once constructed; build it with
/// `validate`.
class PeriodicChainGraph {
 public:
  VertexId vertex_count() const noexcept { return static_cast<VertexId>(degrees_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> degrees() const noexcept { return degrees_; }

  /// Degree of `v` in the infinite graph. Throws BadVertexId.
  int degree(VertexId v) const;

  /// Number of edges joining consecutive cells.
  int connecting_multiplicity() const noexcept;

  /// Description that validates back to this graph.
  GraphDescription description() const;

  friend bool operator==(const PeriodicChainGraph&, const PeriodicChainGraph&) = default;

 private:
  friend PeriodicChainGraph validate(const GraphDescription& description);
  PeriodicChainGraph(std::vector<Edge> edges, std::vector<int> degrees)
      : edges_(std::move(edges)), degrees_(std::move(degrees)) {}

  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

/// Checks a raw description and computes degrees.
///
/// Rejects out-of-range ids (BadVertexId), shifts outside {-1,0,1} (BadShift),
/// intra-cell self-loops (SelfLoopIntraCell), repeated (min, max, shift)
/// triples (DuplicateEdge), cells without a connecting edge (NoConnectingEdge)
/// and descriptions whose infinite graph splits into several components
/// (DisconnectedGraph). Messages name the offending edge or vertex.
PeriodicChainGraph validate(const GraphDescription& description);

inline int connecting_multiplicity(const PeriodicChainGraph& g) noexcept {
  return g.connecting_multiplicity();
}

inline int degree(const PeriodicChainGraph& g, VertexId v) { return g.degree(v); }

}  // namespace chainbands

#endif  // CHAINBANDS_GRAPH_HPP
