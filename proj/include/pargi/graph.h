#ifndef PARGI_GRAPH_H_
#define PARGI_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pargi {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised when a graph would violate one of its structural invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected vertex-colored graph on the vertices 0..n-1.
//
// Adjacency is stored in compressed sparse rows with each neighbor list
// sorted ascending. Values are immutable once built, so a Graph can be shared
// between worker threads freely.
//
// Colors are kept exactly as supplied (small non-negative integers). Every
// refinement routine ranks them before use, so two graphs whose colors agree
// up to value keep the same color identity when compared side by side.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Each unordered pair may appear once in
  // either orientation. Throws GraphError on self-loops, endpoints >= n,
  // duplicate pairs, or a color array whose size is not n.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges,
                         std::vector<Color> colors = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph WithColors(std::vector<Color> colors) const;

  // The graph obtained by renaming every vertex v to perm[v].
  Graph Relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<Color> colors_;
};

// Vertices of `a` keep their indices; vertices of `b` are shifted by
// a.num_vertices(). Colors are copied verbatim.
Graph DisjointUnion(const Graph& a, const Graph& b);

}  // namespace pargi

#endif  // PARGI_GRAPH_H_
