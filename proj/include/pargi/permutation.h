#ifndef PARGI_PERMUTATION_H_
#define PARGI_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pargi {

using Point = std::uint32_t;

// A permutation of 0..n-1 stored as its image array: images()[i] is the image
// of point i.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation Identity(std::size_t n);
  // Builds a permutation of 0..n-1 from disjoint cycles.
  static Permutation FromCycles(std::size_t n,
                                const std::vector<std::vector<Point>>& cycles);

  std::size_t size() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }
  bool IsIdentity() const;

  // "(0 1 2)(3 4)"; the identity prints as "()".
  std::string CycleNotation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}
  friend Permutation Compose(const Permutation& a, const Permutation& b);
  friend Permutation Inverse(const Permutation& a);

  std::vector<Point> images_;
};

// Left-to-right: Compose(a, b) applies a first, then b, so i maps to b[a[i]].
// Throws std::invalid_argument on a size mismatch.
Permutation Compose(const Permutation& a, const Permutation& b);
Permutation Inverse(const Permutation& a);

}  // namespace pargi

#endif  // PARGI_PERMUTATION_H_
