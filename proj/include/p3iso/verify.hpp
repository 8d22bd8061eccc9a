#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "p3iso/enumerate.hpp"
#include "p3iso/graph.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso {

struct ExceptionRecord {
  std::string graph6;
  CatalogId id;
};

struct OrderRow {
  std::size_t order = 0;
  std::size_t examined = 0;
  /// Connected, subcubic, no induced C6.
  std::size_t eligible = 0;
  std::size_t ineligible = 0;
  /// Eligible graphs above floor(n/4); each is a catalog graph.
  std::vector<ExceptionRecord> exceptions;
  /// Anything that contradicts the bound or a certificate check.
  std::vector<std::string> violations;
  /// Constructive runs performed and fallback steps seen.
  std::size_t constructive_runs = 0;
  std::size_t fallbacks = 0;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<OrderRow> rows;
  std::size_t malformed_lines = 0;

  bool passed() const;
  const OrderRow* row(std::size_t order) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  bool allow_large = false;
  /// Also run the constructive algorithm on every eligible non-catalog graph
  /// and check its certificate.
  bool check_constructive = false;
  std::function<void(const std::string&)> progress;
};

/// Enumerates every connected subcubic graph of each order in the range and
/// checks the floor(n/4) bound on the eligible ones.
VerificationReport verify_orders(std::size_t min_n, std::size_t max_n, const VerifyOptions& opts = {});

/// The same check over a graph6 stream; rows are created per order seen.
VerificationReport verify_stream(std::istream& in, const VerifyOptions& opts = {});

struct ObservationResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Machine checks of the catalog's documented structural properties.
std::vector<ObservationResult> check_observations();

}  // namespace p3iso
