#include "p3iso/graph.hpp"

#include <algorithm>
#include <string>

namespace p3iso {

Graph::Graph(std::size_t order, std::span<const Edge> edges) {
  rows_.assign(order, VertexSet(order));
  for (auto [u, v] : edges) {
    if (u >= order || v >= order)
      throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v)) continue;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g;
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].order() != rows.size()) throw GraphError("row order mismatch");
    if (rows[u].contains(static_cast<Vertex>(u))) throw GraphError("self-loop in adjacency rows");
    rows[u].for_each([&](Vertex v) {
      if (!rows[v].contains(static_cast<Vertex>(u))) throw GraphError("asymmetric adjacency rows");
    });
    degree_sum += rows[u].size();
  }
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& r : rows_) d = std::max(d, r.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (rows_.empty()) return 0;
  std::size_t d = rows_.size();
  for (const auto& r : rows_) d = std::min(d, r.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order() || u == v) throw GraphError("invalid edge");
  if (adjacent(u, v)) throw GraphError("edge already present");
  Graph g = *this;
  g.rows_[u].insert(v);
  g.rows_[v].insert(u);
  ++g.edge_count_;
  return g;
}

VertexSet InducedSubgraph::lift(const VertexSet& s, std::size_t parent_order) const {
  VertexSet out(parent_order);
  s.for_each([&](Vertex v) { out.insert(to_parent[v]); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_parent = keep.to_vector();
  const std::size_t k = sub.to_parent.size();
  std::vector<Vertex> to_child(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) to_child[sub.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (std::size_t i = 0; i < k; ++i) {
    (g.neighbors(sub.to_parent[i]) & keep).for_each([&](Vertex w) { rows[i].insert(to_child[w]); });
  }
  sub.graph = Graph::from_rows(std::move(rows));
  return sub;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, g.vertices() - s);
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
  return delete_vertices(g, closed_neighborhood(g, s));
}

VertexSet reach(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen(g.order());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (auto v = left.first()) {
    VertexSet comp = reach(g, *v, within);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

ComponentPartition components(const Graph& g) {
  ComponentPartition part;
  part.components = components_within(g, g.vertices());
  for (std::size_t i = 0; i < part.components.size(); ++i) {
    if (max_degree_within(g, part.components[i]) >= 2) part.p3_components.push_back(i);
  }
  return part;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0, g.vertices()).size() == g.order();
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return 0;
  VertexSet seen(g.order());
  seen.insert(u);
  VertexSet frontier = seen;
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex w) { next |= g.neighbors(w); });
    next -= seen;
    if (next.contains(v)) return d;
    seen |= next;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::size_t max_degree_within(const Graph& g, const VertexSet& within) {
  std::size_t d = 0;
  within.for_each([&](Vertex v) { d = std::max(d, g.neighbors(v).intersection_size(within)); });
  return d;
}

}  // namespace p3iso
