#include "chainbands/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace chainbands {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoopIntraCell: return "SelfLoopIntraCell";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NoConnectingEdge: return "NoConnectingEdge";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::BadShift: return "BadShift";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileError: return "FileError";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::BadBandIndex: return "BadBandIndex";
    case ErrorCode::WindowIntersectsFlatBand: return "WindowIntersectsFlatBand";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t index, const EdgeSpec& e) {
  return "edge #" + std::to_string(index) + " [" + std::to_string(e.u) + ", " +
         std::to_string(e.v) + ", " + std::to_string(e.shift) + "]";
}

// The infinite graph is connected iff the quotient (cell) graph is connected
// and the net shifts around its cycles generate all of Z, i.e. their gcd is 1.
bool infinite_graph_connected(VertexId n, std::span<const Edge> edges) {
  struct Arc {
    VertexId to;
    int shift;
  };
  std::vector<std::vector<Arc>> adjacency(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adjacency[e.u].push_back({e.v, e.shift});
    adjacency[e.v].push_back({e.u, -e.shift});
  }

  std::vector<std::optional<long>> offset(static_cast<std::size_t>(n));
  long period_gcd = 0;
  std::queue<VertexId> pending;
  offset[0] = 0;
  pending.push(0);
  while (!pending.empty()) {
    const VertexId at = pending.front();
    pending.pop();
    for (const auto& arc : adjacency[at]) {
      const long reached = *offset[at] + arc.shift;
      if (!offset[arc.to]) {
        offset[arc.to] = reached;
        pending.push(arc.to);
      } else {
        period_gcd = std::gcd(period_gcd, reached - *offset[arc.to]);
      }
    }
  }
  const bool all_reached =
      std::all_of(offset.begin(), offset.end(), [](const auto& o) { return o.has_value(); });
  return all_reached && period_gcd == 1;
}

}  // namespace

int PeriodicChainGraph::degree(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " is not in 0.." +
                                            std::to_string(vertex_count() - 1));
  }
  return degrees_[static_cast<std::size_t>(v)];
}

int PeriodicChainGraph::connecting_multiplicity() const noexcept {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.connecting(); }));
}

GraphDescription PeriodicChainGraph::description() const {
  GraphDescription d;
  d.vertices = vertex_count();
  d.edges.reserve(edges_.size());
  for (const auto& e : edges_) d.edges.push_back({e.u, e.v, e.shift});
  return d;
}

PeriodicChainGraph validate(const GraphDescription& description) {
  if (description.vertices < 1 || description.vertices > (1 << 20)) {
    throw Error(ErrorCode::BadVertexId,
                "vertex count " + std::to_string(description.vertices) + " must be in 1..2^20");
  }
  const auto n = static_cast<VertexId>(description.vertices);

  std::vector<Edge> edges;
  edges.reserve(description.edges.size());
  std::set<std::tuple<VertexId, VertexId, int>> seen;
  for (std::size_t i = 0; i < description.edges.size(); ++i) {
    const EdgeSpec& raw = description.edges[i];
    for (const auto id : {raw.u, raw.v}) {
      if (id < 0 || id >= n) {
        throw Error(ErrorCode::BadVertexId, describe(i, raw) + ": vertex " + std::to_string(id) +
                                                " is not in 0.." + std::to_string(n - 1));
      }
    }
    if (raw.shift < -1 || raw.shift > 1) {
      throw Error(ErrorCode::BadShift, describe(i, raw) + ": shift must be -1, 0 or 1");
    }

    Edge e{static_cast<VertexId>(raw.u), static_cast<VertexId>(raw.v),
           static_cast<int>(raw.shift)};
    if (e.shift == -1) e = {e.v, e.u, 1};
    if (e.shift == 0) {
      if (e.u == e.v) {
        throw Error(ErrorCode::SelfLoopIntraCell,
                    describe(i, raw) + ": intra-cell self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    // Connecting edges keep their orientation: u_j -- v_{j+1} and v_j -- u_{j+1}
    // are different edges of the infinite graph.
    if (!seen.emplace(e.u, e.v, e.shift).second) {
      throw Error(ErrorCode::DuplicateEdge, describe(i, raw) + ": repeats an earlier edge");
    }
    edges.push_back(e);
  }

  if (std::none_of(edges.begin(), edges.end(), [](const Edge& e) { return e.connecting(); })) {
    throw Error(ErrorCode::NoConnectingEdge, "no edge with shift 1: the cell is not a chain");
  }

  std::vector<int> degrees(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    ++degrees[e.u];
    ++degrees[e.v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (degrees[v] == 0) {
      throw Error(ErrorCode::DisconnectedGraph, "vertex " + std::to_string(v) + " is isolated");
    }
  }
  if (!infinite_graph_connected(n, edges)) {
    throw Error(ErrorCode::DisconnectedGraph,
                "the periodic graph has more than one connected component");
  }
  return PeriodicChainGraph(std::move(edges), std::move(degrees));
}

}  // namespace chainbands
