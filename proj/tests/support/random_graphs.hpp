#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "p3iso/generators.hpp"
#include "p3iso/graph.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso::sample {

/// Random connected subcubic graph with no induced C6: a random tree of max
/// degree 3, then random extra edges that keep both properties.
inline Graph random_eligible_subcubic(std::size_t n, std::mt19937_64& rng, std::size_t extra_attempts) {
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (Vertex v = 1; v < n; ++v) {
    Vertex u;
    do {
      u = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    } while (degree[u] >= 3);
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  Graph g(n, edges);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < extra_attempts; ++t) {
    auto u = static_cast<Vertex>(pick(rng)), v = static_cast<Vertex>(pick(rng));
    if (u == v || g.adjacent(u, v) || g.degree(u) >= 3 || g.degree(v) >= 3) continue;
    Graph h = g.with_edge(u, v);
    if (!has_induced_cycle(h, 6)) g = std::move(h);
  }
  return g;
}

/// Random simple graph with each edge present with probability p.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// g with vertex v renamed perm[v]; perm is a uniformly random permutation.
inline Graph random_relabel(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* perm_out = nullptr) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  if (perm_out) *perm_out = perm;
  return Graph(g.order(), edges);
}

/// A graph whose vertex 0 has degree 3 and an exceptional graph H1 as a
/// component of G - N[0], linked to one or two neighbours of 0. The rest
/// hangs off the remaining neighbours as random trees with extra edges.
/// Neither connectivity-preserving edge additions nor C6-freeness is
/// guaranteed beyond what is checked; callers filter with the preconditions.
inline Graph random_attached_exceptional(std::mt19937_64& rng) {
  const auto& cat = catalog();
  const auto& h1 = cat[std::uniform_int_distribution<std::size_t>(0, cat.size() - 1)(rng)].graph;
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  std::vector<std::size_t> degree(4, 1);
  degree[0] = 3;
  std::size_t next = 4;
  auto grow = [&](std::size_t count) {
    const std::size_t first = next;
    degree.resize(next + count, 0);
    for (std::size_t i = 0; i < count; ++i, ++next) {
      if (i == 0) continue;
      Vertex u;
      do {
        u = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(first, next - 1)(rng));
      } while (degree[u] >= 3);
      edges.emplace_back(u, static_cast<Vertex>(next));
      ++degree[u];
      ++degree[next];
    }
    return first;
  };
  const std::size_t h_first = next;
  degree.resize(next + h1.order(), 0);
  for (auto [a, b] : h1.edges()) {
    edges.emplace_back(static_cast<Vertex>(h_first + a), static_cast<Vertex>(h_first + b));
    ++degree[h_first + a];
    ++degree[h_first + b];
  }
  next += h1.order();
  auto link = [&](Vertex x, std::size_t lo, std::size_t hi) {
    std::vector<Vertex> open;
    for (std::size_t u = lo; u < hi; ++u)
      if (degree[u] < 3) open.push_back(static_cast<Vertex>(u));
    if (open.empty() || degree[x] >= 3) return;
    Vertex y = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(x, y);
    ++degree[x];
    ++degree[y];
  };
  const std::size_t links = std::uniform_int_distribution<int>(1, 3)(rng);
  for (std::size_t k = 0; k < links; ++k) link(static_cast<Vertex>(1 + rng() % 3), h_first, h_first + h1.order());
  for (Vertex x = 1; x <= 3; ++x) {
    if (degree[x] >= 3 || rng() % 3 == 0) continue;
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    const std::size_t first = grow(size);
    link(x, first, first + size);
  }
  // Extra edges anywhere except between H1 and the rest beyond N(0).
  const std::size_t n = next;
  Graph g(n, edges);
  auto in_h = [&](Vertex u) { return u >= h_first && u < h_first + h1.order(); };
  for (std::size_t t = 0; t < 2 * n; ++t) {
    auto u = static_cast<Vertex>(1 + rng() % (n - 1)), v = static_cast<Vertex>(1 + rng() % (n - 1));
    if (u == v || g.adjacent(u, v) || g.degree(u) >= 3 || g.degree(v) >= 3) continue;
    if (in_h(u) != in_h(v) && !(u <= 3 || v <= 3)) continue;
    if (in_h(u) && in_h(v)) continue;
    Graph h = g.with_edge(u, v);
    if (!has_induced_cycle(h, 6)) g = std::move(h);
  }
  return g;
}

}  // namespace p3iso::sample
