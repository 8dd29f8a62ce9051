#ifndef PERMRING_RING_MODEL_HPP
#define PERMRING_RING_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "permring/group.hpp"
#include "permring/gset.hpp"

namespace permring {

/// The ambient category of a permutation ring: finitely generated modules,
/// the bounded derived category, or the stable module category.
enum class Ambient { Mod, Derived, Stable };

std::string_view to_string(Ambient a);
std::optional<Ambient> parse_ambient(std::string_view s);

struct CategoryTag {
  Ambient ambient = Ambient::Mod;
  /// Required for Stable; for Mod and Derived only needed by support queries.
  std::optional<unsigned> prime;

  static CategoryTag mod(std::optional<unsigned> p = std::nullopt) { return {Ambient::Mod, p}; }
  static CategoryTag derived(std::optional<unsigned> p = std::nullopt) {
    return {Ambient::Derived, p};
  }
  static CategoryTag stable(unsigned p) { return {Ambient::Stable, p}; }

  bool is_stable() const noexcept { return ambient == Ambient::Stable; }
  /// Whether the orbit G/S contributes a nonzero summand; in the stable
  /// category that needs p to divide |S|.
  bool orbit_nonzero(const Subgroup& stabilizer) const noexcept;
};

struct Budgets {
  std::size_t points = kDefaultPointBudget;
  std::size_t search_nodes = 2'000'000;
};

/// The separable ring k(X) of a finite G-set X, seen in one ambient category.
class PermRing {
 public:
  const CategoryTag& category() const noexcept { return category_; }
  const GSet& carrier() const noexcept { return carrier_; }
  const GroupPtr& group() const noexcept { return carrier_.group(); }

  friend PermRing perm_ring(const CategoryTag& category, GSet carrier);

 private:
  PermRing(CategoryTag category, GSet carrier)
      : category_(category), carrier_(std::move(carrier)) {}

  CategoryTag category_;
  GSet carrier_;
};

/// Throws NotPrime, MissingPrime (Stable without a prime), or
/// PrimeDoesNotDivideOrder (Stable with p not dividing |G|).
PermRing perm_ring(const CategoryTag& category, GSet carrier);

/// k(G/H)
PermRing perm_ring(const CategoryTag& category, const Subgroup& h);

bool is_zero(const PermRing& r);

/// Requires a transitive carrier (NotTransitive otherwise). A zero ring is
/// never the unit.
bool is_unit(const PermRing& r);

/// One factor k(G/S) per orbit with stabilizer S; zero factors are dropped.
std::vector<PermRing> indecomposable_factors(const PermRing& r);

/// Largest n such that some orbit of distinct n-tuples of the carrier is
/// nonzero in the ambient category.
std::size_t degree(const PermRing& r, const Budgets& budgets = {});

struct TupleOrbit {
  std::vector<Point> tuple;  // orbit representative
  std::size_t size;
  Subgroup stabilizer;
};

struct TowerLevel {
  std::size_t n;
  std::vector<TupleOrbit> orbits;  // nonzero orbits only
  std::uint64_t points;
};

struct TowerReport {
  /// Levels 0 .. degree+1; the last one is always empty.
  std::vector<TowerLevel> levels;
  std::size_t degree;
};

/// Orbits of distinct tuples level by level, each level grown from the
/// orbit representatives of the previous one. Throws SizeBudgetExceeded
/// when a level holds more than budgets.points points.
TowerReport splitting_tower(const PermRing& r, const Budgets& budgets = {});

/// Equivariant self-maps of the carrier. Throws UnsupportedCategory in Stable.
std::uint64_t count_ring_endomorphisms(const PermRing& r);

struct GaloisWitness {
  ElementId g;
  ElementId h;
};

struct GaloisReport {
  bool is_quasi_galois;
  std::size_t degree;
  std::optional<std::uint64_t> endo_count;  // Mod and Derived only
  std::optional<GaloisWitness> witness;     // Stable failures only
};

/// Requires a nonzero ring (ZeroRing) with a transitive carrier (NotTransitive).
GaloisReport is_quasi_galois(const PermRing& r, const Budgets& budgets = {});

/// Conjugacy classes of elementary abelian p-subgroups, as indices into
/// elementary_abelian_classes(G, p, include_trivial) where the trivial class
/// is included outside the stable category.
struct SupportDescriptor {
  unsigned prime;
  bool include_trivial;
  std::vector<std::size_t> class_indices;
  std::vector<Subgroup> classes;

  friend bool operator==(const SupportDescriptor& a, const SupportDescriptor& b) {
    return a.prime == b.prime && a.include_trivial == b.include_trivial &&
           a.class_indices == b.class_indices;
  }
};

/// Throws MissingPrime when the category carries no prime.
SupportDescriptor support(const PermRing& r);

/// Support of the n-th tower level. A class E meets it exactly when E fixes
/// at least n points of the carrier, since a tuple's stabilizer contains a
/// conjugate of E iff some conjugate of E fixes every entry.
SupportDescriptor tower_level_support(const PermRing& r, std::size_t n);

bool has_constant_degree(const PermRing& r, const Budgets& budgets = {});

struct ClosureReport {
  bool constant_degree;
  std::optional<PermRing> closure;
  std::optional<Subgroup> closure_stabilizer;
  /// Points x_1..x_n of the carrier whose joint stabilizer is the closure
  /// stabilizer, and elements g_i with Stab(x_i) = H^{g_i}, H = Stab(0).
  std::vector<Point> tuple_points;
  std::vector<ElementId> tuple_witness;
};

/// Requires a nonzero ring with transitive carrier. Throws
/// NonConjugateClosures if top-level candidates disagree.
ClosureReport quasi_galois_closure(const PermRing& r, const Budgets& budgets = {});

/// Indecomposable factors of the top tower level, one per conjugacy class of
/// stabilizer. Each is checked with splits() before being returned.
std::vector<PermRing> splitting_rings(const PermRing& r, const Budgets& budgets = {});

/// Whether k(G/K) splits r: restricted to K, every nonzero summand of the
/// carrier is the unit and there are exactly degree(r) of them.
bool splits(const Subgroup& k, const PermRing& r, const Budgets& budgets = {});

/// p divides |H| and p does not divide |H cap H^g| for g in ambient \ H.
bool is_strongly_p_embedded(const Subgroup& h, const Subgroup& ambient, unsigned p);

/// First (g, h) in canonical order with g in ambient \ H, h in H \ H^g and p
/// dividing |H cap H^g cap H^{gh}|; nullopt when none exists.
std::optional<GaloisWitness> stable_galois_violation(const Subgroup& h, const Subgroup& ambient,
                                                     unsigned p);

}  // namespace permring

#endif  // PERMRING_RING_MODEL_HPP
