#ifndef PERMRING_PERMUTATION_HPP
#define PERMRING_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace permring {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Products compose as functions: (a * b)[i] == a[b[i]], so b is applied
/// first. Ordering is lexicographic on image sequences, which is the
/// canonical element order used throughout the library.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(InvalidPermutation) unless images is a permutation of
  /// {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation of the given degree from 0-based cycles.
  /// Throws Error(InvalidPermutation) on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation such as "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_string(bool one_based = false) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permring

#endif  // PERMRING_PERMUTATION_HPP
