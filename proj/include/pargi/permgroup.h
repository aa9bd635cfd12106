#ifndef PARGI_PERMGROUP_H_
#define PARGI_PERMGROUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pargi/permutation.h"

namespace pargi {

using BigInt = boost::multiprecision::cpp_int;

// A group given by generators. Identity generators are dropped on
// construction; every generator must act on exactly n points.
class GeneratingSet {
 public:
  explicit GeneratingSet(std::size_t n, std::vector<Permutation> gens = {});

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

 private:
  std::size_t n_;
  std::vector<Permutation> gens_;
};

// Orbits of the generated group, each sorted, listed by smallest point.
std::vector<std::vector<Point>> Orbits(const GeneratingSet& gs);
bool IsTransitive(const GeneratingSet& gs);

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted, listed by smallest point
  bool primitive = false;
};

// For a = 0 and every b != 0, the component of 0 in the graph whose edges are
// the images of {0, b} under the group is the smallest block containing 0
// and b. The largest proper one found (lowest b on ties) and its images form
// the returned system; when none is proper the group is primitive and the
// singleton system is returned. Throws std::invalid_argument if the group is
// not transitive.
BlockSystem MinimalBlockSystem(const GeneratingSet& gs);

// Tower of point stabilizers G = G_0 >= G_1 >= ... >= G_{n-1} = 1 with base
// 0, 1, ..., n-1. Level i stores coset representatives C_i of G_{i+1} in G_i:
// every element fixes 0..i-1 and their images of point i are pairwise
// distinct. The identity representative is implicit.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t n = 0);

  std::size_t degree() const { return n_; }
  std::size_t num_levels() const { return levels_.size(); }

  // C_i, ordered by image of point i.
  std::vector<Permutation> Representatives(std::size_t level) const;
  std::size_t NumRepresentatives(std::size_t level) const;
  // The representative mapping point `level` to `image`, the identity for
  // image == level, nullptr if there is none.
  const Permutation* RepresentativeFor(std::size_t level, Point image) const;

  // Records `rep` as a coset representative of level `level` without any
  // closure. `rep` must fix 0..level-1 and move `level` to an image not yet
  // represented (exactly what a failed sift returns).
  void InsertRepresentative(std::size_t level, Permutation rep);

  // Adds `g` (which must fix 0..level-1) as a strong generator of levels
  // 0..level and recomputes those transversals as orbits of the strong
  // generators. Call Close() afterwards for a complete chain.
  void AddStrongGenerator(std::size_t level, const Permutation& g);

  // Schreier-Sims completion: repeat until every Schreier generator of every
  // level sifts to the identity through the levels below it.
  void Close();

  // Structural invariants: prefix fixing and distinct level images.
  bool CheckInvariants() const;

 private:
  struct Level {
    std::vector<Permutation> strong;
    std::vector<std::optional<Permutation>> transversal;  // indexed by image
  };
  void RebuildTransversal(std::size_t level);

  std::size_t n_;
  std::vector<Level> levels_;
};

struct SiftResult {
  bool member = false;
  int drop_level = -1;  // -1 when member
  Permutation residue;
};

// Membership test by sifting: at level i, if the residue moves point i, it is
// composed with the inverse of the representative with the same image of i;
// if no such representative exists the sift stops there.
SiftResult Sift(const Permutation& x, const StabilizerChain& chain,
                std::size_t start_level = 0);

StabilizerChain SchreierSims(const GeneratingSet& gs);
// Product over levels of (|C_i| + 1).
BigInt GroupOrder(const StabilizerChain& chain);
bool Contains(const StabilizerChain& chain, const Permutation& x);

struct RefineGeneratorsOptions {
  // Without a seed the lowest-index failing element is chosen; with one, a
  // uniformly random failing element.
  std::optional<std::uint64_t> seed;
  int workers = 1;
  // Keep the chain Schreier-closed after every insertion, so that a failed
  // sift certifies non-membership in the group generated so far. When false,
  // residues are only recorded as representatives.
  bool close_chain = true;
};

struct RefinedGenerators {
  GeneratingSet gens;
  StabilizerChain chain;
  std::size_t iterations = 0;
};

// Shrinks a (possibly huge) generating set: sift every element against the
// current chain in parallel, stop if all pass, otherwise add the residue of
// one failing element to the new generating set and to the chain.
RefinedGenerators RefineGeneratingSet(const GeneratingSet& gs,
                                      const RefineGeneratorsOptions& options = {});

}  // namespace pargi

#endif  // PARGI_PERMGROUP_H_
