#pragma once

#include <cstddef>
#include <optional>

#include "p3iso/graph.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso {

struct Certificate {
  VertexSet set;
  /// Exact iota when `exact`; budget + 1 when `exceeds_budget`; otherwise an
  /// upper bound equal to |set|.
  std::size_t value = 0;
  bool exact = false;
  bool exceeds_budget = false;
  IsolationFamily family = IsolationFamily::p3();
};

struct SolveOptions {
  /// Stop after trying sets of this size.
  std::optional<std::size_t> budget;
  /// Return the lexicographically smallest minimum set (sorted-sequence
  /// order). Costs extra feasibility searches.
  bool lexicographic = true;
};

bool is_isolating(const Graph& g, const IsolationFamily& fam, const VertexSet& d);

/// Exact iota(g, fam) by iterative-deepening branch and bound. When the
/// budget is exhausted the result has exceeds_budget set, exact unset,
/// value = budget + 1 and set = V(g).
Certificate isolation_number(const Graph& g, const IsolationFamily& fam, const SolveOptions& opts = {});

/// Same value, computed per component and summed.
Certificate isolation_number_additive(const Graph& g, const IsolationFamily& fam);

/// Smallest isolating set of size <= k, drawing members only from
/// `allowed`, for the residual graph G[alive]. Deleting N[u] of a chosen u
/// acts on the whole of g. Empty optional when none exists.
std::optional<VertexSet> find_isolating_set(const Graph& g, const IsolationFamily& fam, const VertexSet& alive,
                                            const VertexSet& allowed, std::size_t k);

}  // namespace p3iso
