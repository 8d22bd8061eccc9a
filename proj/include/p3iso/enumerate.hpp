#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "p3iso/graph.hpp"
#include "p3iso/io.hpp"

namespace p3iso {

enum class EnumFilter { None, NoInducedC6 };

struct EnumSpec {
  std::size_t min_n = 1;
  std::size_t max_n = 1;
  std::size_t max_degree = 3;
  bool connected_only = true;
  EnumFilter filter = EnumFilter::None;
  /// Orders 10 and 11 take minutes to hours and must be requested explicitly.
  bool allow_large = false;
  /// Worker threads. Subtrees rooted at `split_order` are the work units.
  std::size_t jobs = 1;
  std::size_t split_order = 5;
  /// Serialized delivery holds a lock around every sink call; otherwise the
  /// sink is called concurrently from the workers.
  bool serialized = true;
  std::function<void(std::size_t units_done, std::size_t units_total)> progress;
};

struct EnumSummary {
  /// per_order[n] = graphs of order n delivered to the sink.
  std::vector<std::size_t> per_order;

  std::size_t total() const;
  EnumSummary& operator+=(const EnumSummary& other);
};

using GraphSink = std::function<void(const Graph&)>;

/// Every isomorphism class of (connected) graphs with max degree <= 3 and
/// min_n <= order <= max_n, each exactly once, by vertex augmentation with
/// canonical-deletion rejection. Throws std::invalid_argument when
/// max_n > 11, or max_n >= 10 without allow_large, or max_degree != 3.
EnumSummary enumerate_connected_subcubic(const EnumSpec& spec, const GraphSink& sink);

/// Lexicographically largest graph6-order adjacency bit string over all
/// labelings compatible with colour refinement of `colors` (defaults to
/// uniform). Equal for two graphs iff they are isomorphic (colour-preserving
/// when colours are given). Orders up to 11.
std::uint64_t canonical_code(const Graph& g, const std::vector<int>& colors = {});

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IngestSummary {
  std::size_t count = 0;
  std::vector<Graph6Reader::Diagnostic> diagnostics;
};

/// Forwards each well-formed graph6 line to the sink; malformed lines are
/// recorded and skipped. Throws IoFailure on a stream error.
IngestSummary ingest_graph6_stream(std::istream& in, const GraphSink& sink);

}  // namespace p3iso
