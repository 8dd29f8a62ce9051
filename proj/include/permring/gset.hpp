#ifndef PERMRING_GSET_HPP
#define PERMRING_GSET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permring/group.hpp"

namespace permring {

inline constexpr std::size_t kDefaultPointBudget = 500000;

/// A finite set {0, ..., size-1} with a left action of a FiniteGroup, given
/// by one image table per group generator.
class GSet {
 public:
  /// Throws GroupMismatch if the number of tables differs from the number of
  /// group generators, and InvalidPermutation if a table is not a bijection
  /// of the points.
  GSet(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> generator_actions);

  /// n points, all fixed.
  static GSet trivial(GroupPtr group, std::size_t n);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::span<const Point> generator_action(std::size_t j) const { return actions_[j]; }

  /// g . x, evaluated along g's word in the generators.
  Point act(ElementId g, Point x) const;
  /// Entry g holds g . x, for every element g.
  std::vector<Point> images_of(Point x) const;

  Subgroup stabilizer(Point x) const;
  /// Pointwise stabilizer of a tuple of points.
  Subgroup stabilizer(std::span<const Point> tuple) const;
  /// Points fixed by every element of h.
  std::vector<Point> fixed_points(const Subgroup& h) const;

 private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<std::vector<Point>> actions_;
};

/// Dense table of g . x for every element g and point x.
class ActionTable {
 public:
  /// Throws SizeBudgetExceeded when |G| * |X| exceeds cell_budget.
  explicit ActionTable(const GSet& x, std::size_t cell_budget = 64'000'000);

  Point operator()(ElementId g, Point x) const noexcept { return table_[g * points_ + x]; }
  std::size_t points() const noexcept { return points_; }

 private:
  std::size_t points_;
  std::vector<Point> table_;
};

struct Orbit {
  Point representative;  // least point of the orbit
  std::size_t size;
  Subgroup stabilizer;
};

/// A G-equivariant map, stored as the image of each source point.
struct GMap {
  const GSet* source;
  const GSet* target;
  std::vector<Point> mapping;
};
bool is_equivariant(const GMap& f);

/// G/H with its canonical coset labelling.
struct CosetSpace {
  GSet gset;
  CosetTable cosets;
};

/// Points are the left cosets xH, numbered by least element, so point 0 is H
/// itself; the action is left translation.
CosetSpace coset_space(const Subgroup& h);
GSet coset_gset(const Subgroup& h);

GSet disjoint_union(const GSet& x, const GSet& y);

/// Point (a, b) has index a * |Y| + b.
GSet product(const GSet& x, const GSet& y);

/// Orbits in order of their least point.
std::vector<Orbit> orbits(const GSet& x);
/// Orbit index of every point, consistent with the order of orbits().
std::vector<std::uint32_t> orbit_labels(const GSet& x);

/// Ordered n-tuples of pairwise distinct points, numbered lexicographically,
/// with the diagonal action. n may be |X| + 1, which yields the empty set.
/// Throws TupleLengthOutOfRange or SizeBudgetExceeded.
GSet distinct_tuples(const GSet& x, std::size_t n,
                     std::size_t point_budget = kDefaultPointBudget);

/// The tuple numbered rank among the distinct n-tuples of {0..m-1}.
std::vector<Point> unrank_distinct_tuple(std::size_t m, std::size_t n, std::uint64_t rank);
std::uint64_t rank_distinct_tuple(std::size_t m, std::span<const Point> tuple);

/// m (m-1) ... (m-n+1); throws Overflow past 2^64.
std::uint64_t falling_factorial(std::uint64_t m, std::uint64_t n);

/// Number of equivariant maps Y -> X: product over orbits of Y of the number
/// of points of X fixed by that orbit's stabilizer.
std::uint64_t count_equivariant_maps(const GSet& y, const GSet& x);

/// Compares the multisets of orbit stabilizers up to conjugacy.
bool gsets_isomorphic(const GSet& x, const GSet& y);

/// Restriction of the action to a subgroup K, as a G-set over K's own group
/// (built by subgroup_as_group).
GSet restrict_gset(const GSet& x, const GroupPtr& k_group,
                   std::span<const ElementId> k_to_parent);

}  // namespace permring

#endif  // PERMRING_GSET_HPP
