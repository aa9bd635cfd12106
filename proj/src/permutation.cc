#include "pargi/permutation.h"

#include <stdexcept>

namespace pargi {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw std::invalid_argument("image array is not a permutation of 0.." +
                                  std::to_string(images_.size()) + "-1");
    }
    hit[p] = true;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::FromCycles(std::size_t n,
                                    const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images = Identity(n).images();
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= n || used[from]) {
        throw std::invalid_argument("cycles are not disjoint or leave 0..n-1");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::CycleNotation() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += "(";
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (p != start) out += " ";
      out += std::to_string(p);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("composing permutations of different degrees");
  }
  std::vector<Point> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = b[a[i]];
  return Permutation(std::move(images), Permutation::Trusted{});
}

Permutation Inverse(const Permutation& a) {
  std::vector<Point> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[a[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Trusted{});
}

}  // namespace pargi
