#ifndef PARGI_ISO_H_
#define PARGI_ISO_H_

#include <cstddef>
#include <optional>
#include <string>

#include "pargi/graph.h"
#include "pargi/partition.h"
#include "pargi/permutation.h"
#include "pargi/refinement.h"

namespace pargi {

// Individualization-refinement isomorphism test. This is a minimal search:
// no automorphism pruning and no canonical labeling.

enum class RefinerKind {
  kColorRefinement,  // "cr"
  kWl2LogSim,        // "wl2-log-sim": diagonal of the log-round 2-WL simulation
  kKwl,              // "kwl": diagonal of direct k-WL
  kGadgetKwl,        // "gadget-kwl": diagonal of k-WL via color refinement on the gadget
};

const char* ToString(RefinerKind kind);
// Throws std::invalid_argument on an unknown name.
RefinerKind ParseRefinerKind(const std::string& name);

// The refined vertex partition of `g` (colors taken from the graph).
VertexPartition RefineVertices(const Graph& g, RefinerKind kind, std::size_t k = 2,
                               std::size_t memory_budget = kDefaultMemoryBudget);

// v gets a fresh color of its own; ids are then renumbered canonically by
// (old color, is v), so v's id directly follows the rest of its old class.
VertexPartition Individualize(const VertexPartition& vp, Vertex v);

enum class Verdict { kIsomorphic, kNotIsomorphic, kInconclusive };
const char* ToString(Verdict v);

struct IsoResult {
  Verdict verdict = Verdict::kNotIsomorphic;
  // witness[v] is the image in g2 of vertex v of g1; verified edge by edge.
  std::optional<Permutation> witness;
  std::size_t nodes_explored = 0;
  std::size_t max_depth = 0;
  double wall_time_ms = 0;
};

struct IsoOptions {
  RefinerKind refiner = RefinerKind::kColorRefinement;
  std::size_t k = 2;
  // Sibling branches are explored by up to this many threads.
  int workers = 1;
  // Exceeding it yields kInconclusive unless a witness was already found.
  std::optional<std::size_t> node_budget;
  std::size_t memory_budget = kDefaultMemoryBudget;
};

// Both graphs are refined together (as one disjoint union) so their color
// ids are comparable. A node dies when the two sides' class histograms
// differ. Otherwise the first smallest non-singleton class is the target
// cell: its lowest vertex in g1 is individualized against every g2 vertex of
// that class in turn.
//
// Under parallel exploration the reported witness is still the one the
// sequential search finds first (the leftmost successful branch), and
// nodes_explored and max_depth count the nodes that sequential search
// visits. Abandoned speculative branches are not counted, so without a node
// budget the whole result (timing aside) is independent of the worker count.
// The budget itself counts every node actually visited.
IsoResult Isomorphic(const Graph& g1, const Graph& g2, const IsoOptions& options = {});

// Exhaustive oracle over all n! bijections in lexicographic order; returns the
// lexicographically least witness. Throws std::invalid_argument if n > cap.
IsoResult BruteForceIsomorphic(const Graph& g1, const Graph& g2, std::size_t cap = 8);

// True iff `map` is a color-preserving bijection carrying the edge set of g1
// exactly onto the edge set of g2.
bool VerifyIsomorphism(const Graph& g1, const Graph& g2, const Permutation& map);

}  // namespace pargi

#endif  // PARGI_ISO_H_
