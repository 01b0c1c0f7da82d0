#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kusub {

using Point = std::uint32_t;

// A bijection of {1..degree}. Storage is zero-based; the one-based view is
// only used at the text boundary (cycle notation, image listings).
//
// Products act on the right: (a * b) maps x to b(a(x)), i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // images[i] is the zero-based image of zero-based point i.
  // Throws Error(NotABijection) if images is not a permutation.
  static Permutation from_images(std::vector<Point> images);

  // Cycles use one-based points. Throws DegreeMismatch on out-of-range
  // points and NotABijection on repeated points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  Permutation operator*(Permutation const& rhs) const;
  Permutation inverse() const;
  // x^-1 * this * x
  Permutation conjugate_by(Permutation const& x) const;

  bool is_identity() const noexcept;
  std::uint64_t order() const;

  // Disjoint cycle notation with one-based points, fixed points omitted;
  // the identity prints as "()".
  std::string to_cycle_string() const;

  bool operator==(Permutation const&) const = default;
  std::strong_ordering operator<=>(Permutation const& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

}  // namespace kusub
