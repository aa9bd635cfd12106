#include "pargi/graph.h"

#include <algorithm>
#include <string>

namespace pargi {

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges,
                       std::vector<Color> colors) {
  if (colors.empty()) colors.assign(n, 0);
  if (colors.size() != n) {
    throw GraphError("color array has " + std::to_string(colors.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto dup = std::adjacent_find(normalized.begin(), normalized.end());
  if (dup != normalized.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  }

  Graph g;
  g.n_ = n;
  g.colors_ = std::move(colors);
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Pairs are sorted, so each neighbor list comes out ascending.
  for (auto [u, v] : normalized) g.neighbors_[fill[v]++] = u;
  for (auto [u, v] : normalized) g.neighbors_[fill[u]++] = v;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.neighbors_.begin() + g.offsets_[i],
              g.neighbors_.begin() + g.offsets_[i + 1]);
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::WithColors(std::vector<Color> colors) const {
  if (colors.size() != n_) throw GraphError("color array size mismatch");
  Graph g = *this;
  g.colors_ = std::move(colors);
  return g;
}

Graph Graph::Relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw GraphError("relabeling size mismatch");
  std::vector<Color> colors(n_);
  std::vector<Edge> es;
  es.reserve(num_edges());
  for (Vertex v = 0; v < n_; ++v) colors[perm[v]] = colors_[v];
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  return FromEdges(n_, es, std::move(colors));
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + shift, v + shift);
  std::vector<Color> colors = a.colors();
  colors.insert(colors.end(), b.colors().begin(), b.colors().end());
  return Graph::FromEdges(a.num_vertices() + b.num_vertices(), es,
                          std::move(colors));
}

}  // namespace pargi
