#include "p3iso/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace p3iso {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "MalformedHeader";
    case ParseErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ParseErrorKind::TruncatedBits: return "TruncatedBits";
    case ParseErrorKind::TrailingData: return "TrailingData";
    case ParseErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ParseErrorKind::SelfLoop: return "SelfLoop";
    case ParseErrorKind::OutOfRange: return "OutOfRange";
    case ParseErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
  }
  return "Unknown";
}

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int sixbits(char c, ParseErrorKind kind_if_bad, std::size_t pos) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw ParseError(kind_if_bad, "character out of graph6 range at offset " + std::to_string(pos));
  return u - 63;
}

}  // namespace

Graph6Parse parse_graph6_checked(std::string_view line) {
  line = strip_line_end(line);
  if (line.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) line.remove_prefix(kGraph6Prefix.size());
  if (line.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "empty graph6 line");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = static_cast<std::uint64_t>(sixbits(line[0], ParseErrorKind::MalformedHeader, 0));
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) != 126) {
    if (line.size() < 4) throw ParseError(ParseErrorKind::MalformedHeader, "truncated 18-bit order header");
    for (std::size_t i = 1; i < 4; ++i)
      n = (n << 6) | static_cast<std::uint64_t>(sixbits(line[i], ParseErrorKind::MalformedHeader, i));
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError(ParseErrorKind::MalformedHeader, "truncated 36-bit order header");
    for (std::size_t i = 2; i < 8; ++i)
      n = (n << 6) | static_cast<std::uint64_t>(sixbits(line[i], ParseErrorKind::MalformedHeader, i));
    pos = 8;
  }
  // Beyond any order this library can hold in memory.
  if (n > (1u << 20)) throw ParseError(ParseErrorKind::MalformedHeader, "order too large");

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  const std::uint64_t available = line.size() - pos;
  if (available < byte_count)
    throw ParseError(ParseErrorKind::TruncatedBits,
                     "expected " + std::to_string(byte_count) + " data bytes, found " + std::to_string(available));
  if (available > byte_count)
    throw ParseError(ParseErrorKind::TrailingData, "unexpected bytes after graph6 data");

  std::vector<Edge> edges;
  Graph6Parse out;
  // Column-major upper triangle: (i, j) with i < j, j ascending.
  std::uint64_t k = 0, i = 0, j = 1;
  for (std::uint64_t b = 0; b < byte_count; ++b) {
    const int val = sixbits(line[pos + b], ParseErrorKind::InvalidCharacter, pos + b);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = ((val >> bit) & 1) != 0;
      if (k >= bit_count) {
        if (set) out.noncanonical_padding = true;
        continue;
      }
      if (set) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  out.graph = Graph(static_cast<std::size_t>(n), edges);
  return out;
}

Graph parse_graph6(std::string_view line) { return parse_graph6_checked(line).graph; }

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

bool next_content_line(std::istringstream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

bool read_two(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ls(line);
  std::string extra;
  if (!(ls >> a >> b)) return false;
  return !(ls >> extra);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::uint64_t n = 0, m = 0;
  if (!next_content_line(in, line) || !read_two(line, n, m))
    throw ParseError(ParseErrorKind::MalformedHeader, "expected header line \"n m\"");
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::uint64_t e = 0; e < m; ++e) {
    std::uint64_t u = 0, v = 0;
    if (!next_content_line(in, line))
      throw ParseError(ParseErrorKind::EdgeCountMismatch,
                       "header announces " + std::to_string(m) + " edges, found " + std::to_string(e));
    if (!read_two(line, u, v)) throw ParseError(ParseErrorKind::MalformedHeader, "malformed edge line: " + line);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(ParseErrorKind::OutOfRange, "edge endpoint out of range: " + line);
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, "self-loop: " + line);
    const auto a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
    if (rows[a].contains(b)) throw ParseError(ParseErrorKind::DuplicateEdge, "duplicate edge: " + line);
    rows[a].insert(b);
    rows[b].insert(a);
  }
  if (next_content_line(in, line))
    throw ParseError(ParseErrorKind::EdgeCountMismatch, "more edge lines than announced");
  return Graph::from_rows(std::move(rows));
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

bool Graph6Reader::next(Graph& out, const std::function<void(const Diagnostic&)>& on_error) {
  while (true) {
    if (!std::getline(in_, buffer_)) {
      if (in_.bad()) throw std::ios_base::failure("graph6 stream read failure");
      return false;
    }
    ++line_;
    std::string_view view = strip_line_end(buffer_);
    if (view.empty()) continue;
    try {
      out = parse_graph6(view);
      return true;
    } catch (const ParseError& e) {
      if (on_error) on_error(Diagnostic{line_, e.kind(), e.what()});
    }
  }
}

}  // namespace p3iso
