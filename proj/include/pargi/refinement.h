#ifndef PARGI_REFINEMENT_H_
#define PARGI_REFINEMENT_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pargi/graph.h"
#include "pargi/parallel.h"
#include "pargi/partition.h"

namespace pargi {

// Raised when a requested structure would exceed the memory budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t required_bytes)
      : std::runtime_error(what), required_bytes_(required_bytes) {}
  std::size_t required_bytes() const { return required_bytes_; }

 private:
  std::size_t required_bytes_;
};

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

struct RefineOptions {
  // Defaults to the trivial bound of the variant: n for color refinement,
  // n^2 for 2-WL, n^k for k-WL.
  std::optional<std::size_t> max_rounds;
  int workers = 1;
  std::size_t memory_budget_bytes = kDefaultMemoryBudget;
};

// color_counts[0] is the initial coloring; color_counts[r] is the count after
// round r, so rounds == color_counts.size() - 1. `stabilized` means the last
// round created no new class (the last two partitions coincide, ids
// included).
template <class P>
struct RefinementReport {
  P partition;
  std::size_t rounds = 0;
  bool stabilized = false;
  std::vector<std::size_t> color_counts;
};

// --- 1-WL ----------------------------------------------------------------

VertexPartition InitialVertexPartition(const Graph& g);

// One round: the signature of v is (old color of v, sorted neighbor colors).
VertexPartition ColorRefineRound(const Graph& g, const VertexPartition& p,
                                 const Executor& ex);

RefinementReport<VertexPartition> ColorRefine(const Graph& g,
                                              const RefineOptions& options = {});

// --- 2-WL ----------------------------------------------------------------

// Diagonal pairs carry their vertex color; off-diagonal pairs are split into
// edges and non-edges.
PairColoring InitialPairColoring(const Graph& g);

// New color of (x, y) = (old color, sorted multiset over z of
// (C(x, z), C(z, y))).
PairColoring Wl2Round(const PairColoring& pc, const Executor& ex = Executor(1));

RefinementReport<PairColoring> Wl2Refine(const Graph& g,
                                         const RefineOptions& options = {});

// Walk refinement by doubling: ceil(log2 walk_length) rounds of Wl2Round on
// the initial pair coloring. Lengths that are not powers of two are rounded
// up. Throws std::invalid_argument for walk_length == 0.
PairColoring WalkRefine(const Graph& g, std::size_t walk_length,
                        const RefineOptions& options = {});

std::size_t CeilLog2(std::size_t x);

// Number of 2-WL rounds that suffices to reproduce color refinement on an
// n-vertex graph: ceil(log2(2n)).
std::size_t LogRoundBudget(std::size_t n);

// Runs Wl2Round until the pair coloring is stable or LogRoundBudget(n)
// rounds were spent, and returns the vertex partition induced by the
// diagonal colors. color_counts track that induced partition.
RefinementReport<VertexPartition> SimulateCrByWl2(const Graph& g,
                                                  const RefineOptions& options = {});

// The vertex partition read off the diagonal of a pair coloring.
VertexPartition DiagonalPartition(const PairColoring& pc);

// --- k-WL ----------------------------------------------------------------

// Bytes needed by WlkRefine for n^k tuples. Saturates on overflow.
std::size_t WlkMemoryEstimate(std::size_t n, std::size_t k);

// The ordered-isomorphism type of each tuple: equality pattern, adjacency
// pattern and the sequence of vertex colors.
TupleColoring InitialTupleColoring(const Graph& g, std::size_t k,
                                   std::size_t memory_budget = kDefaultMemoryBudget);

// New color of t = (old color, sorted multiset over y of the k-vector whose
// i-th entry is the color of t with position i replaced by y).
TupleColoring WlkRound(const TupleColoring& tc, const Executor& ex = Executor(1));

// Direct k-WL, k >= 2.
// Throws BudgetError when n^k tuples do not fit the memory budget.
RefinementReport<TupleColoring> WlkRefine(const Graph& g, std::size_t k,
                                          const RefineOptions& options = {});

// The vertex partition read off the constant tuples (v, ..., v).
VertexPartition DiagonalPartition(const TupleColoring& tc);

}  // namespace pargi

#endif  // PARGI_REFINEMENT_H_
