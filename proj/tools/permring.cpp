#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permring/cli.hpp"
#include "permring/error.hpp"

using namespace permring;

namespace {

struct Options {
  std::string group = "S4";
  std::string subgroup = "stab:4";
  std::optional<unsigned> prime;
  std::string category = "mod";
  std::string format = "text";
  bool oracle = false;
  std::optional<std::size_t> budget;
  std::string config;
};

struct Config {
  std::optional<std::size_t> order_bound;
  Budgets budgets;
  std::vector<std::string> battery = cli::default_battery();
};

Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "config " + path + ": " + e.what());
  }
  if (j.contains("order_bound")) c.order_bound = j["order_bound"].get<std::size_t>();
  if (j.contains("point_budget")) c.budgets.points = j["point_budget"].get<std::size_t>();
  if (j.contains("search_nodes")) c.budgets.search_nodes = j["search_nodes"].get<std::size_t>();
  if (j.contains("battery")) c.battery = j["battery"].get<std::vector<std::string>>();
  return c;
}

std::set<std::string> fields_for(const std::string& command) {
  if (command == "analyze") return cli::all_fields();
  std::set<std::string> f{"group_order", "subgroup_generators", "subgroup_order", "index",
                          "prime",       "category",            "timing_us"};
  if (command == "degree") f.insert({"degree", "is_zero"});
  if (command == "tower") f.insert({"degree", "tower"});
  if (command == "closure")
    f.insert({"constant_degree", "closure", "quasi_galois", "quasi_galois_witness"});
  if (command == "support") f.insert("support");
  if (command == "endos") f.insert("endo_count");
  return f;
}

int run(const std::string& command, const Options& opt) {
  Config config = load_config(opt.config);
  std::size_t order_bound =
      opt.budget ? *opt.budget : config.order_bound.value_or(configured_order_bound());

  if (command == "selftest") {
    auto result = cli::run_selftest(config.battery, config.budgets, std::cout);
    for (const auto& f : result.failures) std::cout << "FAIL " << f << '\n';
    std::cout << result.checks << " checks, " << result.failures.size() << " disagreements\n";
    return result.failures.empty() ? 0 : 1;
  }

  auto ambient = parse_ambient(opt.category);
  if (!ambient) throw Error(ErrorCode::ParseError, "unknown category '" + opt.category + "'");
  if (command == "endos" && *ambient == Ambient::Stable)
    throw Error(ErrorCode::UnsupportedCategory,
                "ring endomorphisms are only counted in mod and derived");

  auto spec = cli::parse_group_spec(opt.group, order_bound);
  auto fields = fields_for(command);
  auto report = cli::run_report(spec, opt.subgroup, opt.prime, *ambient, config.budgets, fields);
  std::cout << cli::emit(report, opt.format == "json" ? cli::Format::Json : cli::Format::Text,
                         fields);

  if (opt.oracle) {
    auto h = cli::parse_subgroup_spec(spec.group, opt.subgroup);
    auto bad = cli::oracle_crosscheck(h, CategoryTag{*ambient, opt.prime}, config.budgets);
    for (const auto& b : bad) std::cerr << "oracle: " << b << '\n';
    if (!bad.empty()) return 1;
    std::cerr << "oracle: agrees\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees, splitting towers and quasi-Galois closures of permutation rings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--group", opt.group, "S<n>, A<n>, C<n>, D<n>, products with x, or perm:<cycles>")
      ->capture_default_str();
  app.add_option("--subgroup", opt.subgroup,
                 "gens:<cycles>, stab:<k>, core:<subgroup>, sylow:<p>, all or trivial")
      ->capture_default_str();
  app.add_option("--prime", opt.prime, "prime p; required for stable");
  app.add_option("--category", opt.category, "mod, derived or stable")
      ->check(CLI::IsMember({"mod", "derived", "stable"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", opt.oracle, "cross-check against brute-force oracles")
      ->group("");
  app.add_option("--budget", opt.budget, "largest group order to enumerate");
  app.add_option("--config", opt.config, "JSON file with order_bound, point_budget, "
                                         "search_nodes and battery");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "full report"},
      {"degree", "degree of the ring"},
      {"tower", "orbits of each splitting tower level"},
      {"closure", "constant degree test and quasi-Galois closure"},
      {"support", "elementary abelian classes in the support"},
      {"endos", "number of ring endomorphisms"},
      {"selftest", "run the oracle battery"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
