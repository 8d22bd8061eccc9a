#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "p3iso/graph.hpp"
#include "p3iso/solver.hpp"

namespace p3iso {

enum class Precondition { NotConnected, NotSubcubic, InducedC6, ExceptionalGraph };
std::string_view to_string(Precondition p);

class PreconditionViolated : public std::invalid_argument {
 public:
  PreconditionViolated(Precondition which, const std::string& what)
      : std::invalid_argument(what), which_(which) {}
  Precondition which() const { return which_; }

 private:
  Precondition which_;
};

/// No case of the induction step produced a valid plan. Caught internally
/// and turned into a Fallback step.
class InternalCaseExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class CaseId {
  Base15,
  PathFormula,
  CycleFormula,
  NoExceptional,
  Case1,
  Case21,
  Case221,
  Case222,
  Case223,
  Case224,
  Fallback,
};

std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view s);

/// One step of the recursion. All vertex labels refer to the input graph.
/// `deleted` is the vertex set this step takes out of play; terminal steps
/// delete their whole subproblem, so the deleted sets of a trace partition
/// V(G).
struct TraceStep {
  CaseId case_id = CaseId::Base15;
  std::size_t depth = 0;
  std::size_t order = 0;
  std::optional<Vertex> center;
  std::vector<Vertex> chosen;
  std::vector<Vertex> deleted;
  std::vector<std::vector<Vertex>> targets;
  /// Catalog label (1-based) -> vertex, when the step fixed a normal form.
  std::vector<std::pair<std::size_t, Vertex>> relabel;
  std::string branch;
};

struct CaseTrace {
  std::vector<TraceStep> steps;

  std::size_t fallback_count() const;
  /// One JSON object per line, vertices 1-based.
  std::string to_json_lines() const;
};

struct IsolationResult {
  Certificate certificate;
  CaseTrace trace;
};

/// A P3-isolating set of size at most floor(n/4) for a connected subcubic
/// graph with no induced C6 outside the exceptional catalog.
IsolationResult isolate_p3_subcubic(const Graph& g);

/// Checks the preconditions of isolate_p3_subcubic; throws PreconditionViolated.
void check_isolate_preconditions(const Graph& g);

enum class LineKind { Path, Cycle };

/// Closed-form sets on the standard labeling of P_n / C_n: every fourth
/// vertex of a path, every fifth of a cycle. Paths shorter than 4 defer to
/// the solver.
Certificate path_cycle_isolating_set(std::size_t n, LineKind kind);

/// Independent recheck: the set isolates every P3 and respects the size
/// bound (the certificate value, and `max_size` when given).
bool verify_certificate(const Graph& g, const Certificate& cert, std::optional<std::size_t> max_size = {});

/// Structural checks of a trace against its graph. Returns one line per
/// problem.
std::vector<std::string> validate_trace(const Graph& g, const CaseTrace& trace);

}  // namespace p3iso
