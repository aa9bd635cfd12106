#include "pargi/graph_io.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace pargi {

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedByte: return "malformed-byte";
    case ParseErrorKind::kBadLength: return "bad-length";
    case ParseErrorKind::kVertexCountRange: return "vertex-count-range";
    case ParseErrorKind::kBadHeader: return "bad-header";
    case ParseErrorKind::kMalformedLine: return "malformed-line";
    case ParseErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kVertexOutOfRange: return "vertex-out-of-range";
    case ParseErrorKind::kUnknownColorVertex: return "unknown-color-vertex";
    case ParseErrorKind::kEdgeCountMismatch: return "edge-count-mismatch";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxGraph6Vertices = 258047;

std::string_view StripLineEnd(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int Graph6Value(std::string_view line, std::size_t offset) {
  if (offset >= line.size()) {
    throw ParseError(ParseErrorKind::kBadLength, offset,
                     "graph6 input ends at byte " + std::to_string(offset));
  }
  const auto c = static_cast<unsigned char>(line[offset]);
  if (c < 63 || c > 126) {
    throw ParseError(ParseErrorKind::kMalformedByte, offset,
                     "graph6 byte " + std::to_string(c) + " at offset " +
                         std::to_string(offset) + " is outside 63..126");
  }
  return c - 63;
}

}  // namespace

Graph ParseGraph6(std::string_view line) {
  line = StripLineEnd(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  std::size_t pos = 0;
  std::size_t n = 0;
  if (!line.empty() && line[0] == '~') {
    if (line.size() > 1 && line[1] == '~') {
      throw ParseError(ParseErrorKind::kVertexCountRange, 1,
                       "graph6 eight-byte size prefix (n >= 258048) is not "
                       "supported");
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | Graph6Value(line, i);
    if (n < 63) {
      throw ParseError(ParseErrorKind::kVertexCountRange, 1,
                       "four-byte graph6 prefix encodes n=" +
                           std::to_string(n) + " < 63");
    }
    pos = 4;
  } else {
    n = Graph6Value(line, 0);
    pos = 1;
  }
  if (n > kMaxGraph6Vertices) {
    throw ParseError(ParseErrorKind::kVertexCountRange, 0, "n out of range");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != pos + bytes) {
    throw ParseError(ParseErrorKind::kBadLength,
                     std::min(line.size(), pos + bytes),
                     "graph6 body has " + std::to_string(line.size() - pos) +
                         " bytes, expected " + std::to_string(bytes) +
                         " for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = Graph6Value(line, pos + bit / 6);
      if (value & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  // Validate the bytes of a body that has no edge bits left in it.
  for (std::size_t b = pos + bit / 6; b < line.size(); ++b) Graph6Value(line, b);
  return Graph::FromEdges(n, edges);
}

std::string ToGraph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxGraph6Vertices) {
    throw GraphError("graph too large for graph6: n=" + std::to_string(n));
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
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

std::vector<std::string_view> Split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t ParseNumber(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                     "line " + std::to_string(line_no) + ": '" +
                         std::string(token) + "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  std::vector<Edge> seen;  // normalized, for duplicate checks
  std::vector<std::size_t> seen_line;
  std::size_t line_no = 0;

  auto fail = [&](ParseErrorKind kind, const std::string& msg) {
    throw ParseError(kind, line_no,
                     "line " + std::to_string(line_no) + ": " + msg);
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = StripLineEnd(text.substr(start, end - start));
    start = end + 1;
    ++line_no;

    auto tok = Split(line);
    if (tok.empty() || tok[0].starts_with('#')) {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "p") {
      if (n) fail(ParseErrorKind::kBadHeader, "repeated 'p' header");
      if (tok.size() != 3) fail(ParseErrorKind::kBadHeader, "expected 'p <n> <m>'");
      n = ParseNumber(tok[1], line_no);
      declared_m = ParseNumber(tok[2], line_no);
      colors.assign(*n, 0);
    } else if (!n) {
      fail(ParseErrorKind::kBadHeader, "'p' header must come first");
    } else if (tok[0] == "e") {
      if (tok.size() != 3) fail(ParseErrorKind::kMalformedLine, "expected 'e <u> <v>'");
      const auto u = ParseNumber(tok[1], line_no);
      const auto v = ParseNumber(tok[2], line_no);
      if (u >= *n || v >= *n) {
        fail(ParseErrorKind::kVertexOutOfRange,
             "edge endpoint out of range for n=" + std::to_string(*n));
      }
      if (u == v) fail(ParseErrorKind::kSelfLoop, "self-loop at " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      seen.emplace_back(static_cast<Vertex>(std::min(u, v)),
                        static_cast<Vertex>(std::max(u, v)));
      seen_line.push_back(line_no);
    } else if (tok[0] == "c") {
      if (tok.size() != 3) fail(ParseErrorKind::kMalformedLine, "expected 'c <v> <color>'");
      const auto v = ParseNumber(tok[1], line_no);
      const auto c = ParseNumber(tok[2], line_no);
      if (v >= *n) {
        fail(ParseErrorKind::kUnknownColorVertex,
             "color given for unknown vertex " + std::to_string(v));
      }
      if (c > 0xffffffffu) fail(ParseErrorKind::kMalformedLine, "color too large");
      colors[v] = static_cast<Color>(c);
    } else {
      fail(ParseErrorKind::kMalformedLine, "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!n) {
    throw ParseError(ParseErrorKind::kBadHeader, line_no, "missing 'p' header");
  }

  std::vector<std::size_t> order(seen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return seen[a] != seen[b] ? seen[a] < seen[b] : a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] == seen[order[i - 1]]) {
      const auto [u, v] = seen[order[i]];
      const std::size_t at = seen_line[order[i]];
      throw ParseError(ParseErrorKind::kDuplicateEdge, at,
                       "line " + std::to_string(at) + ": duplicate edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    }
  }
  if (edges.size() != declared_m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, 1,
                     "header declares " + std::to_string(declared_m) +
                         " edges, found " + std::to_string(edges.size()));
  }
  return Graph::FromEdges(*n, edges, std::move(colors));
}

std::string ToEdgeList(const Graph& g) {
  std::string out = "p " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.color(v) != 0) {
      out += "c " + std::to_string(v) + " " + std::to_string(g.color(v)) + "\n";
    }
  }
  return out;
}

Graph ParseGraphAuto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                             text[i] == '\n' || text[i] == '\r')) {
    ++i;
  }
  if (i < text.size() && (text[i] == 'p' || text[i] == '#')) {
    return ParseEdgeList(text);
  }
  text.remove_prefix(i);
  const auto nl = text.find('\n');
  return ParseGraph6(text.substr(0, nl));
}

}  // namespace pargi
