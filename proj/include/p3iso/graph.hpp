#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "p3iso/vertex_set.hpp"

namespace p3iso {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on vertices 0..order-1 with bit-row adjacency.
class Graph {
 public:
  Graph() = default;
  /// Builds a graph from an edge list. Throws GraphError on self-loops or
  /// out-of-range endpoints; repeated edges are collapsed.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Copy with one extra edge. Throws GraphError if it already exists.
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// An induced subgraph together with the map from its labels to the parent's.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  /// Lifts a set of subgraph vertices to parent labels.
  VertexSet lift(const VertexSet& s, std::size_t parent_order) const;
};

/// Partition of V(G) into connected components, in order of smallest member.
struct ComponentPartition {
  std::vector<VertexSet> components;
  /// Indices into `components` of the parts that contain a 3-path.
  std::vector<std::size_t> p3_components;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// G[keep], relabeled in increasing order of parent label.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
/// G - s.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
/// G - N[s].
InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s);

ComponentPartition components(const Graph& g);
/// Components of G[within], as parent-labeled vertex sets.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
/// Vertices reachable from `start` inside `within`.
VertexSet reach(const Graph& g, Vertex start, const VertexSet& within);
bool is_connected(const Graph& g);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// Max degree of G[within].
std::size_t max_degree_within(const Graph& g, const VertexSet& within);

}  // namespace p3iso
