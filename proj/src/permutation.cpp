#include "permring/permutation.hpp"

#include <numeric>

#include "permring/error.hpp"

namespace permring {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidPermutation, "image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree)
        throw Error(ErrorCode::InvalidPermutation,
                    "cycle point " + std::to_string(from) + " exceeds degree " +
                        std::to_string(degree));
      if (used[from])
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + std::to_string(from) + " repeated in cycles");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string(bool one_based) const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + (one_based ? 1 : 0));
    }
    s += ')';
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permring
