#ifndef PERMRING_GROUP_HPP
#define PERMRING_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permring/permutation.hpp"

namespace permring {

/// Index of an element in its group's canonical enumeration.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 10080;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image sequence, so the identity
/// always has id 0. Each element also carries a word in the generators,
/// recorded as a breadth-first tree: element e equals
/// generator(parent_generator(e)) * element(parent(e)).
class FiniteGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementId id) const { return elements_[id]; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }
  /// Throws Error(NotAnElement) when p is not in the group.
  ElementId id_of(const Permutation& p) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const noexcept { return inverses_[a]; }
  /// g^-1 * x * g
  ElementId conjugate(ElementId x, ElementId g) const;
  std::size_t element_order(ElementId a) const noexcept { return element_orders_[a]; }

  /// Elements in breadth-first order from the identity; every entry's
  /// parent appears before it.
  const std::vector<ElementId>& bfs_order() const noexcept { return bfs_order_; }
  ElementId bfs_parent(ElementId e) const noexcept { return bfs_parent_[e]; }
  std::size_t bfs_generator(ElementId e) const noexcept { return bfs_generator_[e]; }

  friend GroupPtr generate_group(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t order_bound);

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::size_t> element_orders_;
  std::vector<ElementId> bfs_order_;
  std::vector<ElementId> bfs_parent_;
  std::vector<std::size_t> bfs_generator_;
  // full Cayley table, only kept for small groups
  std::vector<ElementId> table_;
};

/// Closure of the generators. Throws DegreeMismatch when generator degrees
/// disagree with each other or with degree, and OrderBoundExceeded when the
/// closure grows past order_bound.
GroupPtr generate_group(std::size_t degree, std::span<const Permutation> generators,
                        std::size_t order_bound = kDefaultOrderBound);

/// Order bound from the PERMRING_BUDGET environment variable, or the default.
std::size_t configured_order_bound();

/// A subgroup of a FiniteGroup, stored as the sorted ids of its elements.
class Subgroup {
 public:
  /// Trusts that ids form a subgroup; use subgroup_closure() otherwise.
  Subgroup(GroupPtr parent, std::vector<ElementId> ids);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t index() const noexcept { return parent_->order() / ids_.size(); }
  std::span<const ElementId> elements() const noexcept { return ids_; }
  bool contains(ElementId id) const noexcept { return member_[id]; }
  bool is_trivial() const noexcept { return ids_.size() == 1; }

  /// Greedy generating set: scans elements in canonical order and keeps each
  /// one not already generated by the earlier picks.
  std::vector<ElementId> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.ids_ == b.ids_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.ids_.size() != b.ids_.size() ? a.ids_.size() < b.ids_.size() : a.ids_ < b.ids_;
  }

 private:
  GroupPtr parent_;
  std::vector<ElementId> ids_;
  std::vector<bool> member_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Permutation> generators);
Subgroup subgroup_closure(const GroupPtr& g, std::span<const ElementId> generators);

/// Pointwise stabilizer of the given points.
Subgroup point_stabilizer(const GroupPtr& g, std::span<const Point> points);

/// H^g = g^-1 H g
Subgroup conjugate_subgroup(const Subgroup& h, ElementId g);
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);

Subgroup intersect_subgroups(const Subgroup& h, const Subgroup& k);
bool is_subset(const Subgroup& k, const Subgroup& h);
bool is_normal(const Subgroup& h);
Subgroup normal_core(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);

/// True iff K^g is contained in H for some g in the parent group.
bool is_subconjugate(const Subgroup& k, const Subgroup& h);
bool are_conjugate(const Subgroup& a, const Subgroup& b);
/// Least g (in canonical order) with a^g == b, if any.
std::optional<ElementId> conjugating_element(const Subgroup& a, const Subgroup& b);

/// Left cosets x*H, each named by its least element.
struct CosetTable {
  std::vector<ElementId> representatives;  // sorted, so representatives[0] is the identity
  std::vector<std::uint32_t> coset_of;     // element id -> coset index
};
CosetTable left_cosets(const Subgroup& h);

/// The classes K g H of G.
struct DoubleCosetDecomposition {
  Subgroup left;
  Subgroup right;
  std::vector<ElementId> representatives;  // least element of each class, ascending
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint32_t> class_of;  // element id -> class index
};
DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h);

bool is_prime(std::uint64_t n);

struct ElementaryAbelianClassList {
  unsigned prime = 0;
  bool include_trivial = false;
  /// One canonical representative per conjugacy class, ordered by
  /// (rank, canonical element list). The trivial class, when included, is first.
  std::vector<Subgroup> classes;
  std::vector<unsigned> ranks;

  /// Index of the class containing e, or nullopt when e is not elementary
  /// abelian of this prime (or is trivial and the trivial class is excluded).
  std::optional<std::size_t> class_of(const Subgroup& e) const;
};

/// Conjugacy classes of elementary abelian p-subgroups. Throws NotPrime.
ElementaryAbelianClassList elementary_abelian_classes(const GroupPtr& g, unsigned p,
                                                      bool include_trivial = false);

bool is_elementary_abelian(const Subgroup& e, unsigned p);

/// Sylow p-subgroup built greedily from p-elements in canonical order.
Subgroup sylow_subgroup(const GroupPtr& g, unsigned p);

/// A new FiniteGroup whose elements are those of h, plus the map from its
/// ids back to ids of h's parent.
std::pair<GroupPtr, std::vector<ElementId>> subgroup_as_group(const Subgroup& h);

/// Generators (as chosen by Subgroup::generators) in cycle notation.
std::vector<std::string> generator_cycles(const Subgroup& h, bool one_based = true);
/// Comma-joined generator_cycles, e.g. "(1 2),(3 4)"; "()" for the trivial group.
std::string format_generators(const Subgroup& h, bool one_based = true);

}  // namespace permring

#endif  // PERMRING_GROUP_HPP
