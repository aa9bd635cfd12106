#include "pargi/gadget.h"

#include <limits>
#include <stdexcept>
#include <string>

namespace pargi {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t SatMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t SatPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = SatMul(r, base);
  return r;
}

}  // namespace

std::size_t GadgetVertexCount(std::size_t n, std::size_t k) {
  return SatMul(SatPow(n, k), 1 + n + SatMul(n, k));
}

std::size_t GadgetMemoryEstimate(std::size_t n, std::size_t k) {
  // Per vertex: layer tag, color, CSR offset and refinement scratch. Per
  // edge: two CSR entries plus the staging edge list.
  const std::size_t vertices = GadgetVertexCount(n, k);
  const std::size_t edges = SatMul(SatPow(n, k), SatMul(n, 1 + 2 * k));
  const std::size_t v_bytes = SatMul(vertices, 48);
  const std::size_t e_bytes = SatMul(edges, 24);
  return v_bytes > kSaturated - e_bytes ? kSaturated : v_bytes + e_bytes;
}

GadgetGraph BuildGadget(const Graph& g, std::size_t k, int workers,
                        std::size_t memory_budget) {
  if (k < 1) throw std::invalid_argument("gadget dimension k must be >= 1");
  const std::size_t n = g.num_vertices();
  const std::size_t required = GadgetMemoryEstimate(n, k);
  if (required > memory_budget || GadgetVertexCount(n, k) > std::numeric_limits<Vertex>::max()) {
    throw BudgetError("gadget for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          " has " + std::to_string(GadgetVertexCount(n, k)) +
                          " vertices and needs about " + std::to_string(required) +
                          " bytes, over the memory budget of " +
                          std::to_string(memory_budget) + " bytes",
                      required);
  }

  const TupleColoring atomic = InitialTupleColoring(g, k, memory_budget);
  GadgetGraph gg;
  gg.n = n;
  gg.k = k;
  gg.base_colors = atomic.num_colors;
  const std::size_t bases = atomic.color_of.size();
  const std::size_t block = n + n * k;
  const std::size_t total = bases * (1 + block);
  gg.layer_of.resize(total);

  std::vector<std::size_t> stride(k);
  for (std::size_t i = k; i-- > 0;) stride[i] = (i + 1 == k) ? 1 : stride[i + 1] * n;

  const std::size_t edges_per_base = n * (1 + 2 * k);
  std::vector<Edge> edges(bases * edges_per_base);
  std::vector<Color> colors(total);

  const Executor ex(workers);
  ex.ForEach(bases, [&](std::size_t b) {
    const auto base = static_cast<std::uint32_t>(b);
    gg.layer_of[b] = {GadgetLayer::kBase, base, 0, 0};
    colors[b] = atomic.color_of[b];
    Edge* out = edges.data() + b * edges_per_base;
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex u = gg.OutU(b, i);
      gg.layer_of[u] = {GadgetLayer::kOutU, base, static_cast<std::uint32_t>(i), 0};
      colors[u] = gg.UColor();
      *out++ = {static_cast<Vertex>(b), u};
      for (std::size_t j = 0; j < k; ++j) {
        const Vertex v = gg.OutV(b, i, j);
        gg.layer_of[v] = {GadgetLayer::kOutV, base, static_cast<std::uint32_t>(i),
                          static_cast<std::uint32_t>(j)};
        colors[v] = gg.VColor(j);
        const std::size_t digit = (b / stride[j]) % n;
        const std::size_t target = b - digit * stride[j] + i * stride[j];
        *out++ = {u, v};
        *out++ = {v, static_cast<Vertex>(target)};
      }
    }
  });
  gg.graph = Graph::FromEdges(total, edges, std::move(colors));
  return gg;
}

TupleColoring InducedTuplePartition(const GadgetGraph& gg, const VertexPartition& vp) {
  if (vp.color_of.size() != gg.graph.num_vertices()) {
    throw std::invalid_argument("partition has " + std::to_string(vp.color_of.size()) +
                                " entries, gadget has " +
                                std::to_string(gg.graph.num_vertices()) + " vertices");
  }
  const std::size_t bases = gg.num_base();
  VertexPartition ranked =
      RankColors(std::span<const Color>(vp.color_of.data(), bases));
  return {gg.n, gg.k, std::move(ranked.color_of), ranked.num_colors};
}

GadgetResult SimulateKwlViaCr(const Graph& g, std::size_t k, CrEngine engine,
                              const RefineOptions& options) {
  const GadgetGraph gg = BuildGadget(g, k, options.workers, options.memory_budget_bytes);
  RefineOptions inner = options;
  GadgetResult result;
  switch (engine) {
    case CrEngine::kSequential:
      inner.workers = 1;
      result.report = ColorRefine(gg.graph, inner);
      break;
    case CrEngine::kParallel:
      result.report = ColorRefine(gg.graph, inner);
      break;
    case CrEngine::kWl2LogSim:
      result.report = SimulateCrByWl2(gg.graph, inner);
      break;
  }
  result.tuples = InducedTuplePartition(gg, result.report.partition);
  return result;
}

}  // namespace pargi
