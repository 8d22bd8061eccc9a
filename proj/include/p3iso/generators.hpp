#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "p3iso/graph.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso {

class BadOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);

/// Spine/attachment sizes of the extremal construction for order n and a
/// k-vertex attached graph.
struct ConstructionParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t a = 0;  // floor(n / (k + 1)): spine length
  std::size_t b = 0;  // n - k * a: spine plus pendant vertices

  static ConstructionParams make(std::size_t n, std::size_t k);
};

/// The extremal graph B_{n,F}: P_n when n <= |F|; otherwise a spine 1..a,
/// vertex a joined to each of a+1..b, and spine vertex i fully joined to a
/// private copy F_i. Vertex labels: 1..b first, then F_1, F_2, ... in order.
Graph construction_B(std::size_t n, const Graph& f);

/// One of the twelve exceptional graphs, in its reference labeling
/// (internal label = printed label - 1).
struct CatalogEntry {
  CatalogId id;
  Graph graph;
  std::size_t expected_iota;
  std::size_t order;
  std::size_t max_degree;
  bool induced_c6_free;
};

class CatalogSelfCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view to_string(CatalogId id);
std::optional<CatalogId> parse_catalog_id(std::string_view name);

/// The transcribed catalog, without validation.
std::vector<CatalogEntry> raw_catalog();

/// Every documented property re-derived: connected, subcubic, no induced C6,
/// iota = (order + 1) / 4 by the exact solver. Returns one line per failure.
std::vector<std::string> catalog_self_check(const std::vector<CatalogEntry>& entries);

/// The validated catalog, built once. Throws CatalogSelfCheckFailed.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(CatalogId id);

}  // namespace p3iso
