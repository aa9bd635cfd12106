#ifndef PARGI_GENERATORS_H_
#define PARGI_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pargi/graph.h"

namespace pargi {

// SplitMix64 (Steele, Lea, Flood; public domain reference by S. Vigna).
// Seeded directly with the raw 64-bit seed. Every randomized routine in the
// library draws from this generator so outputs are reproducible across
// platforms and standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0. Uses rejection to avoid bias.
  std::uint64_t Below(std::uint64_t bound);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t state_;
};

Graph MakePath(std::size_t n);
// n >= 3 gives the cycle C_n; n = 1 and n = 2 degenerate to K_1 and K_2.
Graph MakeCycle(std::size_t n);
Graph MakeComplete(std::size_t n);
// G(n, p): pairs (i, j), i < j, are visited in lexicographic order and each
// consumes exactly one draw of SplitMix64(seed).
Graph MakeRandom(std::size_t n, double edge_probability, std::uint64_t seed);

// A uniformly random permutation of 0..n-1 (Fisher-Yates over SplitMix64).
std::vector<Vertex> RandomPermutation(std::size_t n, SplitMix64& rng);

// Built-in pairs of non-isomorphic graphs that color refinement cannot tell
// apart:
//   "c6-vs-2c3"            C_6 against two disjoint triangles
//   "k33-vs-prism"         K_{3,3} against the triangular prism
//   "rook4-vs-shrikhande"  4x4 rook's graph against the Shrikhande graph
//                          (also 2-WL-equivalent)
std::pair<Graph, Graph> HardPair(std::string_view id);
std::vector<std::string> HardPairIds();

}  // namespace pargi

#endif  // PARGI_GENERATORS_H_
