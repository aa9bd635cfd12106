#ifndef PARGI_PARTITION_H_
#define PARGI_PARTITION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pargi/graph.h"

namespace pargi {

// Color ids are contiguous (0..num_colors-1) and canonical: they are the ranks
// of the sorted distinct signatures that produced them.
struct VertexPartition {
  std::vector<Color> color_of;
  std::size_t num_colors = 0;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

// Colors of ordered pairs (x, y), stored row-major at x * n + y.
struct PairColoring {
  std::size_t n = 0;
  std::vector<Color> color_of;
  std::size_t num_colors = 0;

  Color at(Vertex x, Vertex y) const { return color_of[x * n + y]; }
  friend bool operator==(const PairColoring&, const PairColoring&) = default;
};

// Colors of ordered k-tuples, stored row-major: tuple (t_0, ..., t_{k-1}) sits
// at sum_i t_i * n^(k-1-i).
struct TupleColoring {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Color> color_of;
  std::size_t num_colors = 0;

  friend bool operator==(const TupleColoring&, const TupleColoring&) = default;
};

std::size_t TupleIndex(std::span<const Vertex> tuple, std::size_t n);
std::vector<Vertex> TupleAt(std::size_t index, std::size_t n, std::size_t k);

// Renumbers arbitrary color values by the rank of each value among the
// distinct values present.
VertexPartition RankColors(std::span<const Color> values);

// All three throw std::invalid_argument if the index spaces differ.
//
// True iff every class of `a` lies inside a class of `b`.
bool PartitionRefines(std::span<const Color> a, std::span<const Color> b);
// Same classes, regardless of the ids used to name them.
bool PartitionsEqual(std::span<const Color> a, std::span<const Color> b);
bool Distinguishes(std::span<const Color> p, std::size_t x, std::size_t y);

std::size_t CountColors(std::span<const Color> p);

}  // namespace pargi

#endif  // PARGI_PARTITION_H_
