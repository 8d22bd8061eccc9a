#include "p3iso/solver.hpp"

#include <algorithm>
#include <vector>

namespace p3iso {

bool is_isolating(const Graph& g, const IsolationFamily& fam, const VertexSet& d) {
  return !find_copy_within(g, fam, g.vertices() - closed_neighborhood(g, d));
}

namespace {

/// Number of copies whose candidate sets are pairwise disjoint; each needs
/// its own member of any isolating set.
std::size_t packing_bound(const Graph& g, const IsolationFamily& fam, VertexSet within, std::size_t cap) {
  std::size_t count = 0;
  while (count <= cap) {
    auto h = find_copy_within(g, fam, within);
    if (!h) break;
    ++count;
    within -= closed_neighborhood(g, closed_neighborhood(g, h->image(g.order())));
  }
  return count;
}

class Search {
 public:
  Search(const Graph& g, const IsolationFamily& fam) : g_(g), fam_(fam), chosen_(g.order()) {}

  std::optional<VertexSet> run(const VertexSet& alive, const VertexSet& allowed, std::size_t k) {
    if (!dfs(alive, allowed, k)) return std::nullopt;
    return chosen_;
  }

 private:
  bool dfs(const VertexSet& alive, VertexSet allowed, std::size_t k) {
    auto h = find_copy_within(g_, fam_, alive);
    if (!h) return true;
    if (k == 0) return false;
    VertexSet candidates = closed_neighborhood(g_, h->image(g_.order())) & allowed;
    if (candidates.empty()) return false;
    if (packing_bound(g_, fam_, alive, k) > k) return false;

    std::vector<std::pair<std::size_t, Vertex>> order;
    candidates.for_each([&](Vertex u) {
      order.emplace_back(closed_neighborhood(g_, u).intersection_size(alive), u);
    });
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (auto [gain, u] : order) {
      chosen_.insert(u);
      if (dfs(alive - closed_neighborhood(g_, u), allowed, k - 1)) return true;
      chosen_.erase(u);
      // Later siblings need not reconsider u: that subtree was exhausted.
      allowed.erase(u);
    }
    return false;
  }

  const Graph& g_;
  const IsolationFamily& fam_;
  VertexSet chosen_;
};

VertexSet lexicographic_min(const Graph& g, const IsolationFamily& fam, std::size_t k) {
  VertexSet prefix(g.order());
  VertexSet alive = g.vertices();
  VertexSet allowed = g.vertices();
  for (std::size_t left = k; left > 0; --left) {
    if (!find_copy_within(g, fam, alive)) break;
    bool placed = false;
    for (auto u = allowed.first(); u && !placed; u = allowed.next_from(*u + 1)) {
      VertexSet rest_allowed = allowed;
      for (Vertex w = 0; w <= *u; ++w) rest_allowed.erase(w);
      VertexSet rest_alive = alive - closed_neighborhood(g, *u);
      if (find_isolating_set(g, fam, rest_alive, rest_allowed, left - 1)) {
        prefix.insert(*u);
        alive = rest_alive;
        allowed = rest_allowed;
        placed = true;
      }
    }
  }
  return prefix;
}

}  // namespace

std::optional<VertexSet> find_isolating_set(const Graph& g, const IsolationFamily& fam, const VertexSet& alive,
                                            const VertexSet& allowed, std::size_t k) {
  Search search(g, fam);
  return search.run(alive, allowed, k);
}

Certificate isolation_number(const Graph& g, const IsolationFamily& fam, const SolveOptions& opts) {
  Certificate cert;
  cert.family = fam;
  const VertexSet all = g.vertices();
  for (std::size_t k = 0; k <= g.order(); ++k) {
    if (opts.budget && k > *opts.budget) {
      cert.set = all;
      cert.value = *opts.budget + 1;
      cert.exceeds_budget = true;
      return cert;
    }
    if (auto found = find_isolating_set(g, fam, all, all, k)) {
      cert.set = opts.lexicographic ? lexicographic_min(g, fam, k) : *found;
      cert.value = k;
      cert.exact = true;
      return cert;
    }
  }
  // Unreachable: V(g) always isolates.
  cert.set = all;
  cert.value = g.order();
  return cert;
}

Certificate isolation_number_additive(const Graph& g, const IsolationFamily& fam) {
  Certificate cert;
  cert.family = fam;
  cert.set = g.empty_set();
  cert.exact = true;
  for (const auto& comp : components(g).components) {
    auto sub = induced_subgraph(g, comp);
    auto part = isolation_number(sub.graph, fam);
    cert.set |= sub.lift(part.set, g.order());
    cert.value += part.value;
  }
  return cert;
}

}  // namespace p3iso
