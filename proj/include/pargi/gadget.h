#ifndef PARGI_GADGET_H_
#define PARGI_GADGET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pargi/graph.h"
#include "pargi/partition.h"
#include "pargi/refinement.h"

namespace pargi {

enum class GadgetLayer : std::uint8_t { kBase, kOutU, kOutV };

// Role of one vertex of the gadget graph. For an out-layer vertex, `source`
// is the base vertex it comes out from, `i` the substituted G-vertex and `j`
// the substituted tuple position (only for kOutV).
struct GadgetVertex {
  GadgetLayer layer = GadgetLayer::kBase;
  std::uint32_t source = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(const GadgetVertex&, const GadgetVertex&) = default;
};

// The auxiliary graph on which color refinement reproduces k-WL of the
// original graph.
//
// Numbering: base vertices 0..n^k-1 in row-major tuple order (base vertex b
// is tuple b). Then, for each base vertex b in order, a block of n + n*k
// vertices: u_0..u_{n-1}, followed by v_{i,j} at offset n + i*k + j.
//
// Edges: b - u_i; u_i - v_{i,j}; v_{i,j} - base(tuple b with position j set
// to vertex i). When that substitution leaves the tuple unchanged, v_{i,j}
// connects back to b itself.
//
// Initial colors: base vertices get the rank of their tuple's atomic type
// (0..base_colors-1), every u gets base_colors, every v_{.,j} gets
// base_colors + 1 + j.
struct GadgetGraph {
  Graph graph;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t base_colors = 0;
  std::vector<GadgetVertex> layer_of;

  std::size_t num_base() const { return layer_of.size() / (1 + n + n * k); }
  std::size_t BlockStart(std::size_t base) const { return num_base() + base * (n + n * k); }
  Vertex OutU(std::size_t base, std::size_t i) const {
    return static_cast<Vertex>(BlockStart(base) + i);
  }
  Vertex OutV(std::size_t base, std::size_t i, std::size_t j) const {
    return static_cast<Vertex>(BlockStart(base) + n + i * k + j);
  }
  Color UColor() const { return static_cast<Color>(base_colors); }
  Color VColor(std::size_t j) const { return static_cast<Color>(base_colors + 1 + j); }
};

// n^k * (1 + n + n*k), saturating.
std::size_t GadgetVertexCount(std::size_t n, std::size_t k);
std::size_t GadgetMemoryEstimate(std::size_t n, std::size_t k);

// Throws BudgetError (carrying the computed size) if the gadget does not fit
// the memory budget, std::invalid_argument for k < 1.
GadgetGraph BuildGadget(const Graph& g, std::size_t k, int workers = 1,
                        std::size_t memory_budget = kDefaultMemoryBudget);

// Restricts a partition of the gadget's vertices to the base layer and
// renumbers canonically. Throws std::invalid_argument on a size mismatch.
TupleColoring InducedTuplePartition(const GadgetGraph& gg, const VertexPartition& vp);

enum class CrEngine {
  kSequential,  // color refinement, one worker
  kParallel,    // color refinement, options.workers
  kWl2LogSim,   // diagonal of the logarithmic 2-WL simulation
};

struct GadgetResult {
  TupleColoring tuples;
  // Report of the refinement run on the gadget graph.
  RefinementReport<VertexPartition> report;
};

// BuildGadget -> refinement on the gadget -> InducedTuplePartition.
GadgetResult SimulateKwlViaCr(const Graph& g, std::size_t k,
                              CrEngine engine = CrEngine::kParallel,
                              const RefineOptions& options = {});

}  // namespace pargi

#endif  // PARGI_GADGET_H_
