#pragma once

// Morphological operators on hypergraphs.
//
// Four elementary operators move between the vertex lattice and the edge
// lattice:
//
//   edge_to_vertex_dilation   X× -> union of v(e), e in X×
//   vertex_to_edge_erosion    X• -> {e : v(e) ⊆ X•}
//   edge_to_vertex_erosion    X× -> vertices lying in no edge outside X×
//   vertex_to_edge_dilation   X• -> {e : v(e) ∩ X• non-empty}
//
// (vertex_to_edge_erosion, edge_to_vertex_dilation) and
// (edge_to_vertex_erosion, vertex_to_edge_dilation) are adjunctions, and
// every other operator here is a composition of these four. The
// compositions are templates over a MorphologyDomain so that the same code
// runs on a generic Hypergraph and on the fused pixel-grid domain in
// image.hpp.

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermorph/hypergraph.hpp"
#include "hypermorph/index_set.hpp"

namespace hypermorph {

VertexSet edge_to_vertex_dilation(const Hypergraph& h, const EdgeSet& x);
EdgeSet vertex_to_edge_erosion(const Hypergraph& h, const VertexSet& x);
/// With x = all edges the intersection is over an empty family and the
/// result is the whole vertex universe.
VertexSet edge_to_vertex_erosion(const Hypergraph& h, const EdgeSet& x);
EdgeSet vertex_to_edge_dilation(const Hypergraph& h, const VertexSet& x);

template <typename D>
concept MorphologyDomain = requires(const D& d, const VertexSet& v, const EdgeSet& e) {
  { d.vertex_count() } -> std::convertible_to<std::size_t>;
  { d.edge_count() } -> std::convertible_to<std::size_t>;
  { edge_to_vertex_dilation(d, e) } -> std::same_as<VertexSet>;
  { vertex_to_edge_erosion(d, v) } -> std::same_as<EdgeSet>;
  { edge_to_vertex_erosion(d, e) } -> std::same_as<VertexSet>;
  { vertex_to_edge_dilation(d, v) } -> std::same_as<EdgeSet>;
};

struct VertexEdgePair {
  VertexSet vertices;
  EdgeSet edges;

  friend bool operator==(const VertexEdgePair&, const VertexEdgePair&) = default;
};

// Vertex dilation and erosion.
template <MorphologyDomain D>
VertexSet vertex_dilation(const D& d, const VertexSet& x) {
  return edge_to_vertex_dilation(d, vertex_to_edge_dilation(d, x));
}

/// Vertices all of whose incident edges lie inside x. Isolated vertices
/// qualify vacuously, so they are always in the result.
template <MorphologyDomain D>
VertexSet vertex_erosion(const D& d, const VertexSet& x) {
  return edge_to_vertex_erosion(d, vertex_to_edge_erosion(d, x));
}

// Edge dilation and erosion.
template <MorphologyDomain D>
EdgeSet edge_dilation(const D& d, const EdgeSet& x) {
  return vertex_to_edge_dilation(d, edge_to_vertex_dilation(d, x));
}

template <MorphologyDomain D>
EdgeSet edge_erosion(const D& d, const EdgeSet& x) {
  return vertex_to_edge_erosion(d, edge_to_vertex_erosion(d, x));
}

template <MorphologyDomain D>
VertexEdgePair pair_dilation(const D& d, const VertexEdgePair& x) {
  return {vertex_dilation(d, x.vertices), edge_dilation(d, x.edges)};
}

template <MorphologyDomain D>
VertexEdgePair pair_erosion(const D& d, const VertexEdgePair& x) {
  return {vertex_erosion(d, x.vertices), edge_erosion(d, x.edges)};
}

// Openings and closings built from the dilation/erosion pairs above.
template <MorphologyDomain D>
VertexSet vertex_opening(const D& d, const VertexSet& x) {
  return vertex_dilation(d, vertex_erosion(d, x));
}

template <MorphologyDomain D>
VertexSet vertex_closing(const D& d, const VertexSet& x) {
  return vertex_erosion(d, vertex_dilation(d, x));
}

template <MorphologyDomain D>
EdgeSet edge_opening(const D& d, const EdgeSet& x) {
  return edge_dilation(d, edge_erosion(d, x));
}

template <MorphologyDomain D>
EdgeSet edge_closing(const D& d, const EdgeSet& x) {
  return edge_erosion(d, edge_dilation(d, x));
}

template <MorphologyDomain D>
VertexEdgePair pair_opening(const D& d, const VertexEdgePair& x) {
  return {vertex_opening(d, x.vertices), edge_opening(d, x.edges)};
}

template <MorphologyDomain D>
VertexEdgePair pair_closing(const D& d, const VertexEdgePair& x) {
  return {vertex_closing(d, x.vertices), edge_closing(d, x.edges)};
}

// Half-openings and half-closings: a single round trip through the other
// lattice. They are openings/closings in their own right.
template <MorphologyDomain D>
VertexSet half_opening(const D& d, const VertexSet& x) {
  return edge_to_vertex_dilation(d, vertex_to_edge_erosion(d, x));
}

template <MorphologyDomain D>
VertexSet half_closing(const D& d, const VertexSet& x) {
  return edge_to_vertex_erosion(d, vertex_to_edge_dilation(d, x));
}

template <MorphologyDomain D>
EdgeSet edge_half_opening(const D& d, const EdgeSet& x) {
  return vertex_to_edge_dilation(d, edge_to_vertex_erosion(d, x));
}

template <MorphologyDomain D>
EdgeSet edge_half_closing(const D& d, const EdgeSet& x) {
  return vertex_to_edge_erosion(d, edge_to_vertex_dilation(d, x));
}

template <MorphologyDomain D>
VertexEdgePair pair_half_opening(const D& d, const VertexEdgePair& x) {
  return {half_opening(d, x.vertices), edge_half_opening(d, x.edges)};
}

template <MorphologyDomain D>
VertexEdgePair pair_half_closing(const D& d, const VertexEdgePair& x) {
  return {half_closing(d, x.vertices), edge_half_closing(d, x.edges)};
}

enum class OperatorKind { dilate, erode, open, close, half_open, half_close, asf };

/// Which filter of each ASF stage runs first.
enum class AsfOrder { open_then_close, close_then_open };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::open;
  std::size_t iterations = 1;
  AsfOrder asf_order = AsfOrder::open_then_close;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

/// Names used by the --ops grammar: dilate, erode, open, close, halfopen,
/// halfclose, asf.
std::string_view operator_name(OperatorKind kind);
/// Throws std::invalid_argument for an unknown name.
OperatorKind parse_operator_kind(std::string_view name);

/// `stages` rounds of the configured stage filter, each fed the previous
/// output. open_then_close gives (closing ∘ opening)^stages.
template <MorphologyDomain D>
VertexSet alternating_sequential_filter(const D& d, const VertexSet& x,
                                        std::size_t stages,
                                        AsfOrder order = AsfOrder::open_then_close) {
  if (stages < 1) throw std::invalid_argument("ASF needs at least one stage");
  VertexSet cur = x;
  for (std::size_t s = 0; s < stages; ++s) {
    if (order == AsfOrder::open_then_close) {
      cur = vertex_closing(d, vertex_opening(d, cur));
    } else {
      cur = vertex_opening(d, vertex_closing(d, cur));
    }
  }
  return cur;
}

/// Applies op.kind `op.iterations` times to a vertex set. For asf the
/// iteration count is the number of stages.
template <MorphologyDomain D>
VertexSet iterate(const D& d, const OperatorSpec& op, const VertexSet& x) {
  if (op.iterations < 1) {
    throw std::invalid_argument("operator iterations must be >= 1");
  }
  if (op.kind == OperatorKind::asf) {
    return alternating_sequential_filter(d, x, op.iterations, op.asf_order);
  }
  VertexSet cur = x;
  for (std::size_t i = 0; i < op.iterations; ++i) {
    switch (op.kind) {
      case OperatorKind::dilate: cur = vertex_dilation(d, cur); break;
      case OperatorKind::erode: cur = vertex_erosion(d, cur); break;
      case OperatorKind::open: cur = vertex_opening(d, cur); break;
      case OperatorKind::close: cur = vertex_closing(d, cur); break;
      case OperatorKind::half_open: cur = half_opening(d, cur); break;
      case OperatorKind::half_close: cur = half_closing(d, cur); break;
      case OperatorKind::asf: break;
    }
  }
  return cur;
}

}  // namespace hypermorph
