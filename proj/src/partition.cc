#include "pargi/partition.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace pargi {

std::size_t TupleIndex(std::span<const Vertex> tuple, std::size_t n) {
  std::size_t index = 0;
  for (Vertex v : tuple) index = index * n + v;
  return index;
}

std::vector<Vertex> TupleAt(std::size_t index, std::size_t n, std::size_t k) {
  std::vector<Vertex> tuple(k);
  for (std::size_t i = k; i-- > 0;) {
    tuple[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return tuple;
}

VertexPartition RankColors(std::span<const Color> values) {
  std::vector<Color> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  VertexPartition out;
  out.num_colors = distinct.size();
  out.color_of.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.color_of[i] = static_cast<Color>(
        std::lower_bound(distinct.begin(), distinct.end(), values[i]) -
        distinct.begin());
  }
  return out;
}

namespace {

void RequireSameSize(std::span<const Color> a, std::span<const Color> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("partitions are over different index spaces (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

}  // namespace

bool PartitionRefines(std::span<const Color> a, std::span<const Color> b) {
  RequireSameSize(a, b);
  std::unordered_map<Color, Color> image;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, inserted] = image.try_emplace(a[i], b[i]);
    if (!inserted && it->second != b[i]) return false;
  }
  return true;
}

bool PartitionsEqual(std::span<const Color> a, std::span<const Color> b) {
  return PartitionRefines(a, b) && PartitionRefines(b, a);
}

bool Distinguishes(std::span<const Color> p, std::size_t x, std::size_t y) {
  if (x >= p.size() || y >= p.size()) {
    throw std::invalid_argument("index outside the partition");
  }
  return p[x] != p[y];
}

std::size_t CountColors(std::span<const Color> p) {
  std::vector<Color> v(p.begin(), p.end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace pargi
