#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "p3iso/graph.hpp"

namespace p3iso {

enum class ParseErrorKind {
  MalformedHeader,
  InvalidCharacter,
  TruncatedBits,
  TrailingData,
  DuplicateEdge,
  SelfLoop,
  OutOfRange,
  EdgeCountMismatch,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

struct Graph6Parse {
  Graph graph;
  /// Set when the final group carried non-zero padding bits. Not fatal.
  bool noncanonical_padding = false;
};

/// Decodes one graph6 line (optional ">>graph6<<" prefix, trailing CR/LF
/// tolerated). Throws ParseError.
Graph6Parse parse_graph6_checked(std::string_view line);
Graph parse_graph6(std::string_view line);

/// Encodes with zero padding. Orders >= 63 use the 4-byte extended header.
std::string emit_graph6(const Graph& g);

/// "n m" header then m lines "u v" (1-based). Blank lines and lines starting
/// with '#' are ignored. Throws ParseError.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Line-oriented graph6 reader. Never buffers more than one line.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  struct Diagnostic {
    std::size_t line_number;
    ParseErrorKind kind;
    std::string message;
  };

  /// Next well-formed graph; malformed lines are passed to `on_error` and
  /// skipped. Returns false at end of input. Throws std::ios_base::failure on
  /// a stream error other than EOF.
  bool next(Graph& out, const std::function<void(const Diagnostic&)>& on_error = {});
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace p3iso
