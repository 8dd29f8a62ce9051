#ifndef PERMRING_CLI_HPP
#define PERMRING_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permring/group.hpp"
#include "permring/ring_model.hpp"

namespace permring::cli {

struct GroupSpec {
  std::string source;
  GroupPtr group;
};

/// Grammar:
///   group    := "perm:" gens | factor ("x" factor)*
///   factor   := ("S" | "A" | "C" | "D") digits
///   gens     := cycles ("," cycles)*
///   cycles   := "()" | ("(" point (" " point)* ")")+
/// Points are 1-based. Factors of a product act on consecutive disjoint
/// blocks of points. D<n> is the dihedral group of order 2n (n >= 3).
/// Throws ParseError with an offset into text, or UnsupportedFamily.
GroupSpec parse_group_spec(std::string_view text,
                           std::size_t order_bound = configured_order_bound());

/// The group as a "perm:" spec in 1-based cycle notation.
std::string format_group_spec(const GroupSpec& spec);

/// Parses a comma-separated generator list in 1-based cycle notation.
std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree);

/// Subgroup specs: "gens:<cycles>", "stab:<k>[,<k>...]" (1-based points),
/// "core:<subgroup spec>", "sylow:<p>", "all", "trivial".
Subgroup parse_subgroup_spec(const GroupPtr& g, std::string_view text);

struct TowerLevelSummary {
  std::size_t n;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::size_t> stabilizer_orders;
  std::uint64_t points;
};

struct SupportClassSummary {
  unsigned rank;
  std::size_t order;
  std::vector<std::string> generators;
};

struct ClosureSummary {
  std::size_t order;
  std::vector<std::string> generators;
};

struct AnalysisReport {
  std::size_t group_order = 0;
  std::vector<std::string> subgroup_generators;
  std::size_t subgroup_order = 0;
  std::size_t index = 0;
  std::optional<unsigned> prime;
  Ambient category = Ambient::Mod;
  std::size_t degree = 0;
  bool is_zero = false;
  std::optional<std::vector<TowerLevelSummary>> tower;
  std::optional<std::uint64_t> endo_count;
  std::optional<bool> quasi_galois;
  std::optional<std::pair<std::string, std::string>> quasi_galois_witness;
  std::optional<bool> constant_degree;
  std::optional<ClosureSummary> closure;
  std::optional<std::vector<SupportClassSummary>> support;
  std::int64_t timing_us = 0;
};

enum class Format { Text, Json };

/// Every AnalysisReport field, in JSON key form.
const std::set<std::string>& all_fields();

/// Computes the requested fields (all of them by default); the rest keep
/// their null defaults. Component errors propagate.
AnalysisReport run_report(const GroupSpec& group, std::string_view subgroup_spec,
                          std::optional<unsigned> prime, Ambient category,
                          const Budgets& budgets = {},
                          const std::set<std::string>& fields = all_fields());

/// Canonical JSON: keys sorted, integers only, two-space indentation.
nlohmann::json to_json(const AnalysisReport& report,
                       const std::set<std::string>& fields = all_fields());
std::string emit(const AnalysisReport& report, Format format,
                 const std::set<std::string>& fields = all_fields());

/// Recomputes degree, normal core and endomorphism count with the oracles and
/// returns one line per disagreement.
std::vector<std::string> oracle_crosscheck(const Subgroup& h, const CategoryTag& category,
                                           const Budgets& budgets = {});

struct SelftestResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Every subgroup of every listed group against every oracle, for p = 2, 3.
SelftestResult run_selftest(const std::vector<std::string>& groups, const Budgets& budgets,
                            std::ostream& log);

const std::vector<std::string>& default_battery();

}  // namespace permring::cli

#endif  // PERMRING_CLI_HPP
