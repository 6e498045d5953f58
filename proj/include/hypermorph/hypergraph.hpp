#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermorph/index_set.hpp"

namespace hypermorph {

class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite hypergraph H = (vertices, indexed family of hyperedges).
///
/// Vertices are the dense range [0, vertex_count). Edge k is the k-th vertex
/// set passed at construction; each is non-empty and duplicates are kept
/// (the family is indexed, not a set of sets). Immutable once built, so
/// concurrent queries are safe.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws HypergraphError naming the offending edge if it is empty or
  /// references a vertex >= vertex_count. Repeated vertices inside one edge
  /// are collapsed.
  Hypergraph(std::size_t vertex_count,
             const std::vector<std::vector<std::size_t>>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_offsets_.size() - 1; }

  /// Sorted members of v(e).
  std::span<const std::size_t> edge_members(EdgeId e) const;
  /// Sorted ids of the edges containing x.
  std::span<const std::size_t> incident_members(VertexId x) const;

  VertexSet edge_vertices(EdgeId e) const;
  EdgeSet incident_edges(VertexId x) const;
  bool is_isolated(VertexId x) const;
  VertexSet isolated_vertices() const;

  std::size_t rank(EdgeId e) const { return edge_members(e).size(); }
  /// True iff every edge has exactly k vertices; vacuously true without edges.
  bool is_k_uniform(std::size_t k) const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count_); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
  VertexSet no_vertices() const { return VertexSet(vertex_count_); }
  EdgeSet no_edges() const { return EdgeSet(edge_count()); }

  /// Edge lists in construction order, as accepted by the constructor.
  std::vector<std::vector<std::size_t>> edge_lists() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  void check_vertex(VertexId x) const;
  void check_edge(EdgeId e) const;

  std::size_t vertex_count_ = 0;
  // CSR storage of v(e) and of its transpose.
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<std::size_t> edge_vertices_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<std::size_t> vertex_edges_;
};

/// Result of a restriction that renumbers edges (and possibly vertices).
/// Maps are indexed by the old id; nullopt means "dropped".
struct RestrictedHypergraph {
  Hypergraph graph;
  std::vector<std::optional<std::size_t>> vertex_map;
  std::vector<std::optional<std::size_t>> edge_map;
};

/// Vertices and edges interchanged: vertex i of the result is e_i, and edge m
/// is {e_i : x_m in v(e_i)}. Throws HypergraphError naming a vertex if H has an
/// isolated vertex, since it would yield an empty dual edge.
Hypergraph dual(const Hypergraph& h);

/// Hypergraph on A with edges {e_i ∩ A : e_i ∩ A non-empty}. Vertices of A
/// are renumbered densely in increasing order.
RestrictedHypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& a);

/// Same vertex universe, edge family restricted to J.
RestrictedHypergraph partial_hypergraph(const Hypergraph& h, const EdgeSet& j);

// Text fixture format:
//   vertices N
//   edge 0: v v v
//   edge 1: v v
// Edge ids must appear as 0, 1, 2, ... ; '#' starts a comment.
Hypergraph parse_hypergraph_fixture(std::istream& in);
Hypergraph load_hypergraph_fixture(const std::string& path);
void write_hypergraph_fixture(std::ostream& out, const Hypergraph& h);

}  // namespace hypermorph
