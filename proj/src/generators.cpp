#include "p3iso/generators.hpp"

#include <algorithm>

#include "p3iso/solver.hpp"

namespace p3iso {

Graph path(std::size_t n) {
  if (n < 1) throw BadOrder("path requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw BadOrder("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw BadOrder("complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

ConstructionParams ConstructionParams::make(std::size_t n, std::size_t k) {
  ConstructionParams p{n, k, 0, 0};
  if (n >= k + 1) {
    p.a = n / (k + 1);
    p.b = n - k * p.a;
  }
  return p;
}

Graph construction_B(std::size_t n, const Graph& f) {
  if (n < 1) throw BadOrder("construction requires n >= 1");
  if (f.order() == 0 || !is_connected(f)) throw std::invalid_argument("attached graph must be connected");
  const std::size_t k = f.order();
  if (n <= k) return path(n);
  const auto p = ConstructionParams::make(n, k);
  std::vector<Edge> edges;
  // Internal labels are the 1-based ones minus one.
  for (Vertex i = 0; i + 1 < p.a; ++i) edges.emplace_back(i, i + 1);
  for (Vertex j = static_cast<Vertex>(p.a); j < p.b; ++j) edges.emplace_back(static_cast<Vertex>(p.a - 1), j);
  for (Vertex i = 0; i < p.a; ++i) {
    const auto base = static_cast<Vertex>(p.b + i * k);
    for (auto [u, v] : f.edges()) edges.emplace_back(base + u, base + v);
    for (Vertex u = 0; u < k; ++u) edges.emplace_back(i, base + u);
  }
  return Graph(n, edges);
}

namespace {

struct RawEntry {
  CatalogId id;
  std::string_view name;
  std::size_t order;
  std::vector<std::pair<int, int>> edges;  // printed 1-based labels
};

const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = [] {
    const std::vector<std::pair<int, int>> g71{{1, 7}, {2, 7}, {6, 7}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7}};
    auto plus = [](std::vector<std::pair<int, int>> base, std::initializer_list<std::pair<int, int>> more) {
      base.insert(base.end(), more);
      return base;
    };
    return std::vector<RawEntry>{
        {CatalogId::P3, "P3", 3, {{1, 2}, {2, 3}}},
        {CatalogId::C3, "C3", 3, {{1, 2}, {2, 3}, {1, 3}}},
        {CatalogId::C7, "C7", 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}}},
        {CatalogId::G71, "G71", 7, g71},
        {CatalogId::G72, "G72", 7, plus(g71, {{1, 2}})},
        {CatalogId::G73, "G73", 7, plus(g71, {{1, 4}})},
        {CatalogId::G74, "G74", 7, plus(g71, {{1, 2}, {1, 4}})},
        {CatalogId::G75, "G75", 7, {{6, 4}, {6, 7}, {6, 5}, {4, 3}, {3, 5}, {3, 2}, {2, 1}, {2, 7}, {1, 7}}},
        {CatalogId::G76, "G76", 7, {{6, 4}, {6, 7}, {6, 5}, {4, 3}, {4, 5}, {3, 5}, {3, 2}, {2, 1}, {2, 7}, {1, 7}}},
        {CatalogId::C11,
         "C11",
         11,
         {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {1, 11}}},
        {CatalogId::G11,
         "G11",
         11,
         {{1, 2}, {1, 11}, {2, 11}, {2, 3}, {3, 4}, {3, 9}, {4, 5}, {4, 10}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
          {10, 11}}},
        {CatalogId::G15,
         "G15",
         15,
         {{1, 2},  {1, 15},  {2, 15},  {2, 3},   {3, 4},   {3, 13},  {4, 5},   {5, 6},   {4, 14},  {6, 7},  {6, 11},
          {7, 8},  {7, 12},  {8, 9},   {8, 10},  {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}}},
    };
  }();
  return entries;
}

}  // namespace

std::string_view to_string(CatalogId id) {
  for (const auto& e : raw_entries())
    if (e.id == id) return e.name;
  return "?";
}

std::optional<CatalogId> parse_catalog_id(std::string_view name) {
  for (const auto& e : raw_entries())
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::vector<CatalogEntry> raw_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& e : raw_entries()) {
    std::vector<Edge> edges;
    for (auto [u, v] : e.edges) edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    const std::size_t max_degree = e.order == 3 || e.id == CatalogId::C7 || e.id == CatalogId::C11 ? 2 : 3;
    out.push_back(CatalogEntry{e.id, Graph(e.order, edges), (e.order + 1) / 4, e.order, max_degree, true});
  }
  return out;
}

std::vector<std::string> catalog_self_check(const std::vector<CatalogEntry>& entries) {
  std::vector<std::string> failures;
  auto fail = [&](const CatalogEntry& e, const std::string& what) {
    failures.push_back(std::string(to_string(e.id)) + ": " + what);
  };
  for (const auto& e : entries) {
    if (e.graph.order() != e.order) fail(e, "order " + std::to_string(e.graph.order()));
    if (!is_connected(e.graph)) fail(e, "not connected");
    if (e.graph.max_degree() != e.max_degree) fail(e, "max degree " + std::to_string(e.graph.max_degree()));
    if (e.induced_c6_free == has_induced_cycle(e.graph, 6).has_value()) fail(e, "induced C6 flag mismatch");
    const auto iota = isolation_number(e.graph, IsolationFamily::p3(), {.budget = std::nullopt, .lexicographic = false});
    if (iota.value != e.expected_iota) fail(e, "iota " + std::to_string(iota.value));
  }
  return failures;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto raw = raw_catalog();
    auto failures = catalog_self_check(raw);
    if (!failures.empty()) {
      std::string msg = "catalog self-check failed:";
      for (const auto& f : failures) msg += " [" + f + "]";
      throw CatalogSelfCheckFailed(msg);
    }
    return raw;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(CatalogId id) {
  const auto& all = catalog();
  return *std::find_if(all.begin(), all.end(), [id](const CatalogEntry& e) { return e.id == id; });
}

}  // namespace p3iso
