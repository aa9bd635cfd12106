#ifndef PARGI_GRAPH_IO_H_
#define PARGI_GRAPH_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pargi/graph.h"

namespace pargi {

enum class ParseErrorKind {
  kMalformedByte,      // graph6 byte outside the printable range
  kBadLength,          // graph6 line too short or too long for its n
  kVertexCountRange,   // n outside what the encoding supports
  kBadHeader,          // missing, repeated or malformed `p` line
  kMalformedLine,      // unrecognized line or wrong field count
  kDuplicateEdge,
  kSelfLoop,
  kVertexOutOfRange,
  kUnknownColorVertex,
  kEdgeCountMismatch,
};

const char* ToString(ParseErrorKind kind);

// `position` is a byte offset for graph6 input and a 1-based line number for
// edge-list input.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

// Standard graph6. Supports the one-byte (n < 63) and four-byte
// (n < 258048) size prefixes. A trailing newline is ignored.
Graph ParseGraph6(std::string_view line);
std::string ToGraph6(const Graph& g);

// Line-oriented edge list:
//   p <n> <m>        header, exactly once, before anything else
//   e <u> <v>        m edge lines
//   c <v> <color>    optional vertex colors (default 0)
//   # ...            comment
Graph ParseEdgeList(std::string_view text);
std::string ToEdgeList(const Graph& g);

// Picks the format from content: edge list when the first meaningful line
// starts with `p` or `#`, graph6 otherwise.
Graph ParseGraphAuto(std::string_view text);

}  // namespace pargi

#endif  // PARGI_GRAPH_IO_H_
