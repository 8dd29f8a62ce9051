#include "permring/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>

#include "permring/error.hpp"
#include "permring/gset.hpp"
#include "permring/oracle.hpp"

namespace permring::cli {

namespace {

using Cycles = std::vector<std::vector<Point>>;

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const { return base_ + pos_; }
  void advance() { ++pos_; }

  void skip_spaces() {
    while (!done() && peek() == ' ') advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(position(), what); }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1'000'000) fail("number too large");
      advance();
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// One generator written as a product of disjoint cycles, 1-based on input.
Cycles parse_cycles(Cursor& in) {
  Cycles out;
  std::vector<bool> used;
  if (in.peek() != '(') in.fail("expected '('");
  while (in.peek() == '(') {
    in.advance();
    in.skip_spaces();
    std::vector<Point> cycle;
    while (in.peek() != ')') {
      std::size_t at = in.position();
      auto v = in.number();
      if (v == 0) throw ParseError(at, "points are numbered from 1");
      Point p = static_cast<Point>(v - 1);
      if (used.size() <= p) used.resize(p + 1, false);
      if (used[p]) throw ParseError(at, "point " + std::to_string(v) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      in.skip_spaces();
      if (in.done()) in.fail("unterminated cycle");
    }
    in.advance();
    if (!cycle.empty()) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Cycles> parse_cycle_list(Cursor& in) {
  std::vector<Cycles> gens;
  gens.push_back(parse_cycles(in));
  while (in.peek() == ',') {
    in.advance();
    gens.push_back(parse_cycles(in));
  }
  if (!in.done()) in.fail("unexpected character");
  return gens;
}

Point max_point(const std::vector<Cycles>& gens) {
  Point m = 0;
  for (const auto& g : gens)
    for (const auto& c : g)
      for (Point p : c) m = std::max(m, p + 1);
  return m;
}

std::vector<Permutation> to_permutations(const std::vector<Cycles>& gens, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(Permutation::from_cycles(degree, g));
  return out;
}

Cycles n_cycle(Point off, Point n) {
  std::vector<Point> c;
  for (Point i = 0; i < n; ++i) c.push_back(off + i);
  return {c};
}

// Generators of one named factor acting on points off .. off+n-1.
std::vector<Cycles> family_generators(char family, Point n, Point off) {
  std::vector<Cycles> gens;
  switch (family) {
    case 'S':
      if (n >= 2) gens = {n_cycle(off, n), {{off, off + 1}}};
      break;
    case 'A':
      for (Point k = 2; k < n; ++k) gens.push_back({{off, off + 1, off + k}});
      break;
    case 'C':
      if (n >= 2) gens = {n_cycle(off, n)};
      break;
    case 'D': {
      Cycles flip;
      for (Point i = 0; i < n - 1 - i; ++i) flip.push_back({off + i, off + n - 1 - i});
      gens = {n_cycle(off, n), flip};
      break;
    }
  }
  return gens;
}

bool wanted(const std::set<std::string>& fields, const char* key) { return fields.count(key) != 0; }

unsigned log_base(std::size_t n, unsigned p) {
  unsigned r = 0;
  while (n > 1) {
    n /= p;
    ++r;
  }
  return r;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ']';
  return os.str();
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text, std::size_t order_bound) {
  if (text.rfind("perm:", 0) == 0) {
    Cursor in(text.substr(5), 5);
    auto gens = parse_cycle_list(in);
    std::size_t degree = std::max<Point>(1, max_point(gens));
    auto perms = to_permutations(gens, degree);
    return {std::string(text), generate_group(degree, perms, order_bound)};
  }

  Cursor in(text, 0);
  std::vector<Cycles> gens;
  Point degree = 0;
  do {
    if (degree > 0) in.advance();
    std::size_t at = in.position();
    char family = in.peek();
    if (!std::isalpha(static_cast<unsigned char>(family))) in.fail("expected a group family");
    if (family != 'S' && family != 'A' && family != 'C' && family != 'D')
      throw Error(ErrorCode::UnsupportedFamily,
                  std::string("unknown group family '") + family + "' at offset " +
                      std::to_string(at));
    in.advance();
    auto n = static_cast<Point>(in.number());
    if (n == 0) throw ParseError(at + 1, "family size must be positive");
    if (family == 'D' && n < 3)
      throw Error(ErrorCode::UnsupportedFamily, "D<n> needs n >= 3 to act faithfully on n points");
    for (auto& g : family_generators(family, n, degree)) gens.push_back(std::move(g));
    degree += n;
  } while (in.peek() == 'x');
  if (!in.done()) in.fail("unexpected character");
  auto perms = to_permutations(gens, degree);
  return {std::string(text), generate_group(degree, perms, order_bound)};
}

std::string format_group_spec(const GroupSpec& spec) {
  std::vector<std::string> parts;
  Point moved = 0;
  for (const auto& g : spec.group->generators()) {
    if (g.is_identity()) continue;
    parts.push_back(g.to_string(true));
    for (const auto& c : g.cycles()) moved = std::max(moved, *std::max_element(c.begin(), c.end()) + 1);
  }
  const auto degree = static_cast<Point>(spec.group->degree());
  if (moved < degree) {
    std::string fixed = "(" + std::to_string(degree) + ")";
    if (parts.empty()) parts.push_back(fixed);
    else parts.front() += fixed;
  }
  return "perm:" + join(parts, ",");
}

std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree) {
  Cursor in(text, 0);
  auto gens = parse_cycle_list(in);
  if (max_point(gens) > degree)
    throw ParseError(0, "point out of range for degree " + std::to_string(degree));
  return to_permutations(gens, degree);
}

namespace {

Subgroup parse_subgroup_at(const GroupPtr& g, std::string_view text, std::size_t base) {
  auto starts = [&](std::string_view prefix) { return text.rfind(prefix, 0) == 0; };
  if (text == "all") return whole_group(g);
  if (text == "trivial") return trivial_subgroup(g);
  if (starts("gens:")) {
    Cursor in(text.substr(5), base + 5);
    auto gens = parse_cycle_list(in);
    if (max_point(gens) > g->degree())
      throw ParseError(base + 5, "point out of range for degree " + std::to_string(g->degree()));
    auto perms = to_permutations(gens, g->degree());
    for (const auto& p : perms)
      if (!g->contains(p))
        throw Error(ErrorCode::NotAnElement, p.to_string(true) + " is not in the group");
    return subgroup_closure(g, perms);
  }
  if (starts("stab:")) {
    Cursor in(text.substr(5), base + 5);
    std::vector<Point> points;
    do {
      if (!points.empty()) in.advance();
      std::size_t at = in.position();
      auto k = in.number();
      if (k == 0 || k > g->degree())
        throw ParseError(at, "point " + std::to_string(k) + " out of range");
      points.push_back(static_cast<Point>(k - 1));
    } while (in.peek() == ',');
    if (!in.done()) in.fail("unexpected character");
    return point_stabilizer(g, points);
  }
  if (starts("sylow:")) {
    Cursor in(text.substr(6), base + 6);
    auto p = in.number();
    if (!in.done()) in.fail("unexpected character");
    return sylow_subgroup(g, static_cast<unsigned>(p));
  }
  if (starts("core:")) return normal_core(parse_subgroup_at(g, text.substr(5), base + 5));
  if (text == "core") throw ParseError(base + 4, "core needs a subgroup, as in core:stab:4");
  throw ParseError(base, "expected gens:, stab:, core:, sylow:, all or trivial");
}

}  // namespace

Subgroup parse_subgroup_spec(const GroupPtr& g, std::string_view text) {
  return parse_subgroup_at(g, text, 0);
}

const std::set<std::string>& all_fields() {
  static const std::set<std::string> fields{
      "group_order", "subgroup_generators", "subgroup_order", "index",
      "prime",       "category",            "degree",         "is_zero",
      "tower",       "endo_count",          "quasi_galois",   "quasi_galois_witness",
      "constant_degree", "closure",         "support",        "timing_us"};
  return fields;
}

AnalysisReport run_report(const GroupSpec& group, std::string_view subgroup_spec,
                          std::optional<unsigned> prime, Ambient category, const Budgets& budgets,
                          const std::set<std::string>& fields) {
  auto start = std::chrono::steady_clock::now();
  const GroupPtr& g = group.group;
  Subgroup h = parse_subgroup_spec(g, subgroup_spec);
  PermRing r = perm_ring(CategoryTag{category, prime}, h);

  AnalysisReport report;
  report.group_order = g->order();
  report.subgroup_generators = generator_cycles(h, true);
  report.subgroup_order = h.order();
  report.index = h.index();
  report.prime = prime;
  report.category = category;
  report.is_zero = is_zero(r);

  if (wanted(fields, "degree")) report.degree = degree(r, budgets);

  if (wanted(fields, "tower")) {
    try {
      std::vector<TowerLevelSummary> levels;
      for (const auto& level : splitting_tower(r, budgets).levels) {
        TowerLevelSummary s{level.n, {}, {}, level.points};
        for (const auto& o : level.orbits) {
          s.orbit_sizes.push_back(o.size);
          s.stabilizer_orders.push_back(o.stabilizer.order());
        }
        levels.push_back(std::move(s));
      }
      report.tower = std::move(levels);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeBudgetExceeded) throw;
    }
  }

  if (wanted(fields, "endo_count") && category != Ambient::Stable)
    report.endo_count = count_ring_endomorphisms(r);

  if (!report.is_zero) {
    if (wanted(fields, "quasi_galois") || wanted(fields, "quasi_galois_witness")) {
      auto qg = is_quasi_galois(r, budgets);
      report.quasi_galois = qg.is_quasi_galois;
      if (qg.witness)
        report.quasi_galois_witness = {g->element(qg.witness->g).to_string(true),
                                       g->element(qg.witness->h).to_string(true)};
    }
    if (prime && (wanted(fields, "constant_degree") || wanted(fields, "closure"))) {
      auto closure = quasi_galois_closure(r, budgets);
      report.constant_degree = closure.constant_degree;
      if (closure.closure_stabilizer)
        report.closure = ClosureSummary{closure.closure_stabilizer->order(),
                                        generator_cycles(*closure.closure_stabilizer, true)};
    }
  }

  if (prime && wanted(fields, "support")) {
    std::vector<SupportClassSummary> classes;
    for (const auto& e : support(r).classes)
      classes.push_back({log_base(e.order(), *prime), e.order(), generator_cycles(e, true)});
    report.support = std::move(classes);
  }

  report.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

nlohmann::json to_json(const AnalysisReport& report, const std::set<std::string>& fields) {
  using nlohmann::json;
  json j = json::object();
  auto put = [&](const char* key, json value) {
    if (wanted(fields, key)) j[key] = std::move(value);
  };
  put("group_order", report.group_order);
  put("subgroup_generators", report.subgroup_generators);
  put("subgroup_order", report.subgroup_order);
  put("index", report.index);
  put("prime", report.prime ? json(*report.prime) : json(nullptr));
  put("category", std::string(to_string(report.category)));
  put("degree", report.degree);
  put("is_zero", report.is_zero);
  if (report.tower) {
    json levels = json::array();
    for (const auto& l : *report.tower)
      levels.push_back({{"level", l.n},
                        {"orbits", l.orbit_sizes.size()},
                        {"orbit_sizes", l.orbit_sizes},
                        {"stabilizer_orders", l.stabilizer_orders},
                        {"points", l.points}});
    put("tower", levels);
  } else {
    put("tower", nullptr);
  }
  put("endo_count", report.endo_count ? json(*report.endo_count) : json(nullptr));
  put("quasi_galois", report.quasi_galois ? json(*report.quasi_galois) : json(nullptr));
  if (report.quasi_galois_witness)
    put("quasi_galois_witness",
        {{"g", report.quasi_galois_witness->first}, {"h", report.quasi_galois_witness->second}});
  else
    put("quasi_galois_witness", nullptr);
  put("constant_degree", report.constant_degree ? json(*report.constant_degree) : json(nullptr));
  if (report.closure)
    put("closure", {{"order", report.closure->order}, {"generators", report.closure->generators}});
  else
    put("closure", nullptr);
  if (report.support) {
    json classes = json::array();
    for (const auto& c : *report.support)
      classes.push_back({{"rank", c.rank}, {"order", c.order}, {"generators", c.generators}});
    put("support", classes);
  } else {
    put("support", nullptr);
  }
  put("timing_us", report.timing_us);
  return j;
}

std::string emit(const AnalysisReport& report, Format format,
                 const std::set<std::string>& fields) {
  if (format == Format::Json) return to_json(report, fields).dump(2) + "\n";

  std::ostringstream os;
  auto show = [&](const char* key) { return wanted(fields, key); };
  if (show("group_order")) os << "group order: " << report.group_order << '\n';
  if (show("subgroup_generators"))
    os << "subgroup generators: "
       << (report.subgroup_generators.empty() ? "()" : join(report.subgroup_generators, ","))
       << '\n';
  if (show("subgroup_order")) os << "subgroup order: " << report.subgroup_order << '\n';
  if (show("index")) os << "index: " << report.index << '\n';
  if (show("prime")) os << "prime: " << (report.prime ? std::to_string(*report.prime) : "none") << '\n';
  if (show("category")) os << "category: " << to_string(report.category) << '\n';
  if (show("degree")) os << "degree: " << report.degree << '\n';
  if (show("is_zero")) os << "is_zero: " << (report.is_zero ? "true" : "false") << '\n';
  if (show("tower")) {
    if (!report.tower) {
      os << "tower: over budget\n";
    } else {
      os << "tower:\n";
      for (const auto& l : *report.tower)
        os << "  level " << l.n << ": " << l.orbit_sizes.size() << " orbits, " << l.points
           << " points, sizes " << join_numbers(l.orbit_sizes) << ", stabilizer orders "
           << join_numbers(l.stabilizer_orders) << '\n';
    }
  }
  if (show("endo_count"))
    os << "endo_count: " << (report.endo_count ? std::to_string(*report.endo_count) : "n/a") << '\n';
  if (show("quasi_galois")) os << "quasi_galois: " << yes_no(report.quasi_galois) << '\n';
  if (show("quasi_galois_witness") && report.quasi_galois_witness)
    os << "quasi_galois witness: g = " << report.quasi_galois_witness->first
       << ", h = " << report.quasi_galois_witness->second << '\n';
  if (show("constant_degree")) os << "constant_degree: " << yes_no(report.constant_degree) << '\n';
  if (show("closure")) {
    if (report.closure) {
      os << "closure: order " << report.closure->order << '\n';
      os << "closure generators: "
         << (report.closure->generators.empty() ? "()" : join(report.closure->generators, ","))
         << '\n';
    } else {
      os << "closure: none\n";
    }
  }
  if (show("support")) {
    if (!report.support) {
      os << "support: n/a\n";
    } else {
      os << "support: " << report.support->size() << " classes\n";
      for (const auto& c : *report.support)
        os << "  rank " << c.rank << ", order " << c.order << ": "
           << (c.generators.empty() ? "()" : join(c.generators, ",")) << '\n';
    }
  }
  if (show("timing_us")) os << "timing_us: " << report.timing_us << '\n';
  return os.str();
}

std::vector<std::string> oracle_crosscheck(const Subgroup& h, const CategoryTag& category,
                                           const Budgets& budgets) {
  std::vector<std::string> out;
  const auto& g = *h.parent();
  PermRing r = perm_ring(category, h);
  std::string where = "H = <" + format_generators(h) + ">, " +
                      std::string(to_string(category.ambient)) +
                      (category.prime ? ", p = " + std::to_string(*category.prime) : "");

  std::size_t d = degree(r, budgets);
  std::size_t od =
      category.is_stable() ? oracle::oracle_degree_stable(h, *category.prime) : h.index();
  if (d != od)
    out.push_back(where + ": degree " + std::to_string(d) + " but oracle says " +
                  std::to_string(od));

  if (g.order() <= oracle::kSubgroupEnumerationOrder &&
      !(normal_core(h) == oracle::oracle_normal_core(h)))
    out.push_back(where + ": normal core disagrees with the oracle");

  if (!category.is_stable()) {
    GSet x = coset_gset(h);
    std::uint64_t maps = 1;
    bool fits = true;
    for (std::size_t i = 0; i < x.size() && fits; ++i) {
      maps *= x.size();
      fits = maps <= oracle::kMapBudget;
    }
    if (fits) {
      auto endo = count_ring_endomorphisms(r);
      auto brute = oracle::oracle_gmap_count(x, x);
      if (endo != brute)
        out.push_back(where + ": endo count " + std::to_string(endo) + " but oracle says " +
                      std::to_string(brute));
    }
  }
  return out;
}

const std::vector<std::string>& default_battery() {
  static const std::vector<std::string> battery{"S3", "S4", "D4", "A4", "C2xC2"};
  return battery;
}

SelftestResult run_selftest(const std::vector<std::string>& groups, const Budgets& budgets,
                            std::ostream& log) {
  SelftestResult result;
  for (const auto& text : groups) {
    auto spec = parse_group_spec(text);
    auto subgroups = oracle::enumerate_subgroups(whole_group(spec.group));
    std::size_t before = result.failures.size(), checks = 0;
    auto record = [&](std::vector<std::string> bad) {
      ++checks;
      for (auto& b : bad) result.failures.push_back(text + ": " + b);
    };
    for (const auto& h : subgroups) {
      record(oracle_crosscheck(h, CategoryTag::mod(), budgets));
      for (unsigned p : {2u, 3u}) {
        if (spec.group->order() % p != 0) continue;
        record(oracle_crosscheck(h, CategoryTag::stable(p), budgets));
      }
    }
    std::vector<GSet> cosets;
    for (const auto& h : subgroups) cosets.push_back(coset_gset(h));
    for (std::size_t i = 0; i < cosets.size(); ++i)
      for (std::size_t j = i; j < cosets.size(); ++j) {
        std::vector<std::pair<std::size_t, std::size_t>> primary;
        for (const auto& o : orbits(product(cosets[i], cosets[j])))
          primary.emplace_back(o.size, o.stabilizer.order());
        std::sort(primary.begin(), primary.end());
        std::vector<std::string> bad;
        if (primary != oracle::oracle_product_orbits(cosets[i], cosets[j]))
          bad.push_back("product orbits of subgroups " + std::to_string(i) + " and " +
                        std::to_string(j) + " disagree with the oracle");
        record(std::move(bad));
      }
    result.checks += checks;
    log << text << ": " << subgroups.size() << " subgroups, " << checks << " checks, "
        << result.failures.size() - before << " disagreements\n";
  }
  return result;
}

}  // namespace permring::cli
