#include "pargi/generators.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pargi {

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::Below(0)");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

namespace {

void RequirePositive(std::size_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

Graph DisjointTriangles() {
  const std::vector<Edge> es = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph::FromEdges(6, es);
}

Graph Rook4() {
  std::vector<Edge> es;
  for (Vertex a = 0; a < 16; ++a) {
    for (Vertex b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) es.emplace_back(a, b);
    }
  }
  return Graph::FromEdges(16, es);
}

// Cayley graph of Z_4 x Z_4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph Shrikhande() {
  std::vector<Edge> es;
  auto id = [](int x, int y) {
    return static_cast<Vertex>(((x + 4) % 4) * 4 + (y + 4) % 4);
  };
  const int dirs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (const auto& d : dirs) {
        Vertex a = id(x, y);
        Vertex b = id(x + d[0], y + d[1]);
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  }
  return Graph::FromEdges(16, es);
}

}  // namespace

Graph MakePath(std::size_t n) {
  RequirePositive(n, "MakePath");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::FromEdges(n, es);
}

Graph MakeCycle(std::size_t n) {
  RequirePositive(n, "MakeCycle");
  if (n < 3) return MakePath(n);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::FromEdges(n, es);
}

Graph MakeComplete(std::size_t n) {
  RequirePositive(n, "MakeComplete");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph::FromEdges(n, es);
}

Graph MakeRandom(std::size_t n, double edge_probability, std::uint64_t seed) {
  RequirePositive(n, "MakeRandom");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("MakeRandom: edge probability outside [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.Uniform() < edge_probability) es.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, es);
}

std::vector<Vertex> RandomPermutation(std::size_t n, SplitMix64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.Below(i)]);
  }
  return perm;
}

std::pair<Graph, Graph> HardPair(std::string_view id) {
  if (id == "c6-vs-2c3") return {MakeCycle(6), DisjointTriangles()};
  if (id == "k33-vs-prism") {
    std::vector<Edge> k33;
    for (Vertex a = 0; a < 3; ++a) {
      for (Vertex b = 3; b < 6; ++b) k33.emplace_back(a, b);
    }
    const std::vector<Edge> prism = {{0, 1}, {1, 2}, {0, 2}, {3, 4},
                                     {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return {Graph::FromEdges(6, k33), Graph::FromEdges(6, prism)};
  }
  if (id == "rook4-vs-shrikhande") return {Rook4(), Shrikhande()};
  throw std::invalid_argument("unknown hard pair '" + std::string(id) + "'");
}

std::vector<std::string> HardPairIds() {
  return {"c6-vs-2c3", "k33-vs-prism", "rook4-vs-shrikhande"};
}

}  // namespace pargi
