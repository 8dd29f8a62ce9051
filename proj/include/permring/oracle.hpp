#ifndef PERMRING_ORACLE_HPP
#define PERMRING_ORACLE_HPP

// Brute-force recomputations of the headline quantities. Nothing here goes
// through double cosets, coset spaces or the tuple tower.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "permring/group.hpp"
#include "permring/gset.hpp"

namespace permring::oracle {

inline constexpr std::uint64_t kMapBudget = 1'000'000;
inline constexpr std::size_t kSubgroupEnumerationOrder = 360;

/// Largest n such that some n distinct right cosets H g_1, ..., H g_n have
/// p dividing |H^{g_1} cap ... cap H^{g_n}|, by subset search.
/// Throws PrimeDoesNotDivideOrder unless p divides |G|.
std::size_t oracle_degree_stable(const Subgroup& h, unsigned p);

/// Sorted (orbit size, stabilizer order) pairs of X x Y, from a union-find
/// scan of the pairs and a direct count of each stabilizer.
std::vector<std::pair<std::size_t, std::size_t>> oracle_product_orbits(const GSet& x,
                                                                       const GSet& y);

/// Counts set maps Y -> X commuting with every generator by trying them all.
/// Throws BudgetExceeded when |X|^|Y| > kMapBudget.
std::uint64_t oracle_gmap_count(const GSet& y, const GSet& x);

/// Every subgroup of G contained in `within`, sorted by (order, elements).
/// Throws BudgetExceeded when |G| > kSubgroupEnumerationOrder.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& within);

/// Largest subgroup of H that is normal in G, found among all subgroups of H.
std::vector<Subgroup> normal_subgroups_within(const Subgroup& h);
Subgroup oracle_normal_core(const Subgroup& h);

}  // namespace permring::oracle

#endif  // PERMRING_ORACLE_HPP
