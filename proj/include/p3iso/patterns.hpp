#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p3iso/graph.hpp"

namespace p3iso {

/// The pattern family whose copies an isolating set must destroy.
class IsolationFamily {
 public:
  enum class Kind { K1, K2, K3, P3, Cycle, AnyCycle, FiniteList };

  static IsolationFamily k1() { return IsolationFamily(Kind::K1); }
  static IsolationFamily k2() { return IsolationFamily(Kind::K2); }
  static IsolationFamily k3() { return IsolationFamily(Kind::K3); }
  static IsolationFamily p3() { return IsolationFamily(Kind::P3); }
  /// Any (not necessarily induced) k-cycle, k >= 3.
  static IsolationFamily cycle(std::size_t k);
  static IsolationFamily any_cycle() { return IsolationFamily(Kind::AnyCycle); }
  /// Copies of any listed graph; every listed graph must be connected and non-empty.
  static IsolationFamily finite(std::vector<Graph> graphs);

  /// Parses "k1", "k2", "k3", "p3", "cycle:K" or "anycycle".
  static IsolationFamily parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::size_t cycle_length() const { return cycle_length_; }
  const std::vector<Graph>& graphs() const { return graphs_; }
  std::string name() const;

  friend bool operator==(const IsolationFamily&, const IsolationFamily&) = default;

 private:
  explicit IsolationFamily(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::P3;
  std::size_t cycle_length_ = 0;
  std::vector<Graph> graphs_;
};

/// An embedding of a pattern into a host graph: mapping[p] is the host vertex
/// of pattern vertex p.
struct IsoWitness {
  enum class Mode { Subgraph, Induced, Isomorphism };
  std::vector<Vertex> mapping;
  Mode mode = Mode::Subgraph;

  VertexSet image(std::size_t host_order) const { return VertexSet::from_range(host_order, mapping); }
};

/// A copy of some family member inside G[within]. For P3 the witness is
/// (end, center, end) with the center of maximum degree in G[within], ties to
/// the smallest label, and the two smallest-labeled neighbors as ends.
std::optional<IsoWitness> find_copy_within(const Graph& g, const IsolationFamily& fam, const VertexSet& within);
std::optional<IsoWitness> contains_copy(const Graph& g, const IsolationFamily& fam);

/// An induced k-cycle, as a cyclic vertex sequence starting at its smallest
/// vertex, with the second vertex smaller than the last.
std::optional<IsoWitness> has_induced_cycle(const Graph& g, std::size_t k);

/// Subgraph (or induced-subgraph) embedding of `pattern` into `host`.
std::optional<IsoWitness> find_embedding(const Graph& pattern, const Graph& host, const VertexSet& within,
                                         bool induced);

/// Isomorphism h -> g, if any. Intended for orders up to ~16.
std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h);

/// Calls `visit` with every isomorphism h -> g until it returns false.
void for_each_isomorphism(const Graph& g, const Graph& h, const std::function<bool(const IsoWitness&)>& visit);

enum class CatalogId { P3, C3, C7, G71, G72, G73, G74, G75, G76, C11, G11, G15 };

struct CatalogMatch {
  CatalogId id;
  /// Catalog graph -> g.
  IsoWitness witness;
};

/// Which exceptional graph g is a copy of, if any.
std::optional<CatalogMatch> catalog_match(const Graph& g);

}  // namespace p3iso
