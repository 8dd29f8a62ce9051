#include "permring/ring_model.hpp"

#include <algorithm>
#include <functional>

#include "permring/error.hpp"

namespace permring {

namespace {

unsigned require_prime(const CategoryTag& tag) {
  if (!tag.prime)
    throw Error(ErrorCode::MissingPrime, "this query needs a prime in the category tag");
  return *tag.prime;
}

Subgroup transitive_stabilizer(const PermRing& r) {
  const GSet& x = r.carrier();
  auto labels = orbit_labels(x);
  bool transitive = !x.empty() && std::all_of(labels.begin(), labels.end(),
                                                [](std::uint32_t l) { return l == 0; });
  if (!transitive) throw Error(ErrorCode::NotTransitive, "carrier must be a single orbit");
  return x.stabilizer(Point{0});
}

void require_nonzero(const PermRing& r) {
  if (is_zero(r)) throw Error(ErrorCode::ZeroRing, "ring is zero in its category");
}

// Walks distinct tuples of the carrier through orbit representatives. The
// stabilizer of the current tuple is kept as a plain id list.
class TupleSearch {
 public:
  TupleSearch(const PermRing& r, const Budgets& budgets)
      : group_(*r.group()),
        table_(r.carrier()),
        m_(r.carrier().size()),
        budgets_(budgets),
        in_tuple_(m_, false) {
    if (r.category().is_stable()) p_ = *r.category().prime;
  }

  bool nonzero(const std::vector<ElementId>& stab) const {
    return p_ == 0 || stab.size() % p_ == 0;
  }

  // Deepest level reachable from the current tuple: every added point must
  // be fixed by one order-p element of the final stabilizer.
  std::size_t upper_bound(const std::vector<ElementId>& stab) const {
    if (p_ == 0) return m_;
    std::size_t best_extra = 0;
    for (ElementId c : stab) {
      if (group_.element_order(c) != p_) continue;
      std::size_t extra = 0;
      for (Point x = 0; x < m_; ++x)
        if (!in_tuple_[x] && table_(c, x) == x) ++extra;
      best_extra = std::max(best_extra, extra);
    }
    return tuple_.size() + best_extra;
  }

  std::vector<ElementId> restrict_to(const std::vector<ElementId>& stab, Point x) const {
    std::vector<ElementId> out;
    for (ElementId s : stab)
      if (table_(s, x) == x) out.push_back(s);
    return out;
  }

  // Least point of each orbit of stab on the points outside the tuple.
  std::vector<Point> orbit_representatives(const std::vector<ElementId>& stab) const {
    std::vector<bool> seen(m_, false);
    std::vector<Point> reps;
    for (Point x = 0; x < m_; ++x) {
      if (in_tuple_[x] || seen[x]) continue;
      reps.push_back(x);
      for (ElementId s : stab) seen[table_(s, x)] = true;
    }
    return reps;
  }

  std::vector<ElementId> whole() const {
    std::vector<ElementId> ids(group_.order());
    for (ElementId i = 0; i < ids.size(); ++i) ids[i] = i;
    return ids;
  }

  std::size_t max_depth() {
    std::vector<ElementId> g = whole();
    if (!nonzero(g)) return 0;
    global_bound_ = upper_bound(g);
    best_ = 0;
    depth_search(g);
    return best_;
  }

  // Lexicographically least tuple of length n whose stabilizer is nonzero.
  std::optional<std::pair<std::vector<Point>, std::vector<ElementId>>> least_tuple(std::size_t n) {
    std::vector<ElementId> g = whole();
    if (!nonzero(g)) return std::nullopt;
    std::optional<std::pair<std::vector<Point>, std::vector<ElementId>>> found;
    lex_search(g, n, found);
    return found;
  }

  // Stabilizers of every nonzero orbit of n-tuples, one per orbit.
  std::vector<std::vector<ElementId>> level_stabilizers(std::size_t n) {
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> g = whole();
    if (nonzero(g)) collect(g, n, out);
    return out;
  }

  void push(Point x) {
    tuple_.push_back(x);
    in_tuple_[x] = true;
  }
  void pop() {
    in_tuple_[tuple_.back()] = false;
    tuple_.pop_back();
  }
  const std::vector<Point>& tuple() const { return tuple_; }
  const ActionTable& table() const { return table_; }

 private:
  void count_node() {
    if (++nodes_ > budgets_.search_nodes)
      throw Error(ErrorCode::SizeBudgetExceeded, "tuple search exceeded its node budget");
  }

  void depth_search(const std::vector<ElementId>& stab) {
    count_node();
    best_ = std::max(best_, tuple_.size());
    if (best_ >= global_bound_ || upper_bound(stab) <= best_) return;
    for (Point x : orbit_representatives(stab)) {
      auto next = restrict_to(stab, x);
      if (!nonzero(next)) continue;
      push(x);
      depth_search(next);
      pop();
      if (best_ >= global_bound_) return;
    }
  }

  void lex_search(const std::vector<ElementId>& stab, std::size_t n,
                  std::optional<std::pair<std::vector<Point>, std::vector<ElementId>>>& found) {
    count_node();
    if (tuple_.size() == n) {
      found.emplace(tuple_, stab);
      return;
    }
    for (Point x = 0; x < m_ && !found; ++x) {
      if (in_tuple_[x]) continue;
      auto next = restrict_to(stab, x);
      if (!nonzero(next)) continue;
      push(x);
      if (upper_bound(next) >= n) lex_search(next, n, found);
      pop();
    }
  }

  void collect(const std::vector<ElementId>& stab, std::size_t n,
               std::vector<std::vector<ElementId>>& out) {
    count_node();
    if (tuple_.size() == n) {
      out.push_back(stab);
      return;
    }
    if (upper_bound(stab) < n) return;
    for (Point x : orbit_representatives(stab)) {
      auto next = restrict_to(stab, x);
      if (!nonzero(next)) continue;
      push(x);
      collect(next, n, out);
      pop();
    }
  }

  const FiniteGroup& group_;
  ActionTable table_;
  std::size_t m_;
  Budgets budgets_;
  unsigned p_ = 0;
  std::vector<Point> tuple_;
  std::vector<bool> in_tuple_;
  std::size_t nodes_ = 0;
  std::size_t best_ = 0;
  std::size_t global_bound_ = 0;
};

SupportDescriptor support_from(const PermRing& r, const std::function<bool(const Subgroup&)>& in) {
  const unsigned p = require_prime(r.category());
  const bool include_trivial = !r.category().is_stable();
  auto all = elementary_abelian_classes(r.group(), p, include_trivial);
  SupportDescriptor s{p, include_trivial, {}, {}};
  for (std::size_t i = 0; i < all.classes.size(); ++i) {
    if (in(all.classes[i])) {
      s.class_indices.push_back(i);
      s.classes.push_back(all.classes[i]);
    }
  }
  return s;
}

// g with Stab(x) = H^g where H = Stab(0): the inverse of the least t moving 0 to x.
std::vector<ElementId> coset_witness(const PermRing& r, const std::vector<Point>& points) {
  const auto& g = *r.group();
  auto images = r.carrier().images_of(Point{0});
  std::vector<ElementId> out;
  for (Point x : points) {
    auto it = std::find(images.begin(), images.end(), x);
    out.push_back(g.inverse(static_cast<ElementId>(it - images.begin())));
  }
  return out;
}

}  // namespace

std::string_view to_string(Ambient a) {
  switch (a) {
    case Ambient::Mod: return "mod";
    case Ambient::Derived: return "derived";
    case Ambient::Stable: return "stable";
  }
  return "mod";
}

std::optional<Ambient> parse_ambient(std::string_view s) {
  if (s == "mod") return Ambient::Mod;
  if (s == "derived") return Ambient::Derived;
  if (s == "stable") return Ambient::Stable;
  return std::nullopt;
}

bool CategoryTag::orbit_nonzero(const Subgroup& stabilizer) const noexcept {
  return ambient != Ambient::Stable || stabilizer.order() % *prime == 0;
}

PermRing perm_ring(const CategoryTag& category, GSet carrier) {
  if (category.prime && !is_prime(*category.prime))
    throw Error(ErrorCode::NotPrime, std::to_string(*category.prime) + " is not prime");
  if (category.is_stable()) {
    unsigned p = require_prime(category);
    if (carrier.group()->order() % p != 0)
      throw Error(ErrorCode::PrimeDoesNotDivideOrder,
                  std::to_string(p) + " does not divide |G| = " +
                      std::to_string(carrier.group()->order()));
  }
  return PermRing(category, std::move(carrier));
}

PermRing perm_ring(const CategoryTag& category, const Subgroup& h) {
  return perm_ring(category, coset_gset(h));
}

bool is_zero(const PermRing& r) {
  if (!r.category().is_stable()) return r.carrier().empty();
  for (const auto& o : orbits(r.carrier()))
    if (r.category().orbit_nonzero(o.stabilizer)) return false;
  return true;
}

bool is_unit(const PermRing& r) {
  Subgroup h = transitive_stabilizer(r);
  if (!r.category().is_stable()) return r.carrier().size() == 1;
  return is_strongly_p_embedded(h, whole_group(r.group()), *r.category().prime);
}

std::vector<PermRing> indecomposable_factors(const PermRing& r) {
  std::vector<PermRing> out;
  for (const auto& o : orbits(r.carrier()))
    if (r.category().orbit_nonzero(o.stabilizer)) out.push_back(perm_ring(r.category(), o.stabilizer));
  return out;
}

std::size_t degree(const PermRing& r, const Budgets& budgets) {
  if (!r.category().is_stable()) return r.carrier().size();
  if (is_zero(r)) return 0;
  TupleSearch search(r, budgets);
  return search.max_depth();
}

TowerReport splitting_tower(const PermRing& r, const Budgets& budgets) {
  const auto& g = *r.group();
  const GSet& x = r.carrier();
  const CategoryTag& tag = r.category();
  ActionTable table(x);

  TowerReport report{{}, 0};
  report.levels.push_back(TowerLevel{0, {TupleOrbit{{}, 1, whole_group(r.group())}}, 1});
  while (!report.levels.back().orbits.empty()) {
    const TowerLevel& prev = report.levels.back();
    TowerLevel next{prev.n + 1, {}, 0};
    for (const auto& o : prev.orbits) {
      std::vector<bool> skip(x.size(), false);
      for (Point t : o.tuple) skip[t] = true;
      for (Point p = 0; p < x.size(); ++p) {
        if (skip[p]) continue;
        std::vector<ElementId> stab;
        for (ElementId s : o.stabilizer.elements()) {
          skip[table(s, p)] = true;
          if (table(s, p) == p) stab.push_back(s);
        }
        Subgroup s(r.group(), std::move(stab));
        if (!tag.orbit_nonzero(s)) continue;
        auto tuple = o.tuple;
        tuple.push_back(p);
        std::size_t size = g.order() / s.order();
        next.points += size;
        if (next.points > budgets.points)
          throw Error(ErrorCode::SizeBudgetExceeded,
                      "tower level " + std::to_string(next.n) + " exceeds " +
                          std::to_string(budgets.points) + " points");
        next.orbits.push_back(TupleOrbit{std::move(tuple), size, std::move(s)});
      }
    }
    report.levels.push_back(std::move(next));
  }
  report.degree = report.levels.size() - 2;
  return report;
}

std::uint64_t count_ring_endomorphisms(const PermRing& r) {
  if (r.category().is_stable())
    throw Error(ErrorCode::UnsupportedCategory,
                "ring endomorphisms are not equivariant maps in the stable category");
  return count_equivariant_maps(r.carrier(), r.carrier());
}

GaloisReport is_quasi_galois(const PermRing& r, const Budgets& budgets) {
  require_nonzero(r);
  Subgroup h = transitive_stabilizer(r);
  GaloisReport report{false, degree(r, budgets), std::nullopt, std::nullopt};
  if (r.category().is_stable()) {
    report.witness = stable_galois_violation(h, whole_group(r.group()), *r.category().prime);
    report.is_quasi_galois = !report.witness;
    return report;
  }
  report.is_quasi_galois = is_normal(h);
  report.endo_count = count_ring_endomorphisms(r);
  if ((*report.endo_count == report.degree) != report.is_quasi_galois)
    throw Error(ErrorCode::InternalInconsistency,
                "endomorphism count disagrees with the normality test");
  return report;
}

SupportDescriptor support(const PermRing& r) {
  std::vector<Subgroup> stabs;
  for (const auto& o : orbits(r.carrier()))
    if (r.category().orbit_nonzero(o.stabilizer)) stabs.push_back(o.stabilizer);
  return support_from(r, [&](const Subgroup& e) {
    return std::any_of(stabs.begin(), stabs.end(),
                       [&](const Subgroup& s) { return is_subconjugate(e, s); });
  });
}

SupportDescriptor tower_level_support(const PermRing& r, std::size_t n) {
  const GSet& x = r.carrier();
  return support_from(r, [&](const Subgroup& e) { return x.fixed_points(e).size() >= n; });
}

bool has_constant_degree(const PermRing& r, const Budgets& budgets) {
  if (is_zero(r)) return true;
  return tower_level_support(r, degree(r, budgets)) == support(r);
}

ClosureReport quasi_galois_closure(const PermRing& r, const Budgets& budgets) {
  require_nonzero(r);
  Subgroup h = transitive_stabilizer(r);
  ClosureReport report{has_constant_degree(r, budgets), std::nullopt, std::nullopt, {}, {}};
  if (!report.constant_degree) return report;

  const GSet& x = r.carrier();
  if (!r.category().is_stable()) {
    Subgroup core = normal_core(h);
    for (Point p = 0; p < x.size(); ++p) report.tuple_points.push_back(p);
    if (!(x.stabilizer(report.tuple_points) == core))
      throw Error(ErrorCode::InternalInconsistency, "kernel of the action differs from the core");
    report.closure_stabilizer = core;
  } else {
    const std::size_t d = degree(r, budgets);
    TupleSearch search(r, budgets);
    auto least = search.least_tuple(d);
    if (!least) throw Error(ErrorCode::InternalInconsistency, "no tuple realizes the degree");
    Subgroup k(r.group(), least->second);
    TupleSearch all(r, budgets);
    for (auto& stab : all.level_stabilizers(d)) {
      if (!are_conjugate(k, Subgroup(r.group(), std::move(stab))))
        throw Error(ErrorCode::NonConjugateClosures,
                    "top tower level has stabilizers in more than one conjugacy class");
    }
    report.tuple_points = least->first;
    report.closure_stabilizer = k;
  }
  report.tuple_witness = coset_witness(r, report.tuple_points);
  report.closure = perm_ring(r.category(), *report.closure_stabilizer);
  return report;
}

std::vector<PermRing> splitting_rings(const PermRing& r, const Budgets& budgets) {
  if (is_zero(r)) throw Error(ErrorCode::ZeroRing, "ring is zero in its category");
  const GSet& x = r.carrier();
  std::vector<Subgroup> reps;
  if (!r.category().is_stable()) {
    std::vector<Point> all(x.size());
    for (Point p = 0; p < x.size(); ++p) all[p] = p;
    reps.push_back(x.stabilizer(all));
  } else {
    const std::size_t d = degree(r, budgets);
    TupleSearch search(r, budgets);
    for (auto& ids : search.level_stabilizers(d)) {
      Subgroup s(r.group(), std::move(ids));
      bool seen = std::any_of(reps.begin(), reps.end(),
                              [&](const Subgroup& k) { return are_conjugate(k, s); });
      if (!seen) reps.push_back(std::move(s));
    }
  }
  std::vector<PermRing> out;
  for (const auto& k : reps) {
    if (!splits(k, r, budgets))
      throw Error(ErrorCode::InternalInconsistency, "top-level factor does not split the ring");
    out.push_back(perm_ring(r.category(), k));
  }
  return out;
}

bool splits(const Subgroup& k, const PermRing& r, const Budgets& budgets) {
  const GSet& x = r.carrier();
  const CategoryTag& tag = r.category();
  std::vector<bool> seen(x.size(), false);
  std::size_t units = 0;
  for (Point p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    std::vector<ElementId> stab;
    for (ElementId s : k.elements()) {
      Point q = x.act(s, p);
      seen[q] = true;
      if (q == p) stab.push_back(s);
    }
    Subgroup l(r.group(), std::move(stab));
    if (!tag.is_stable()) {
      if (!(l == k)) return false;
      ++units;
      continue;
    }
    if (l.order() % *tag.prime != 0) continue;
    if (!is_strongly_p_embedded(l, k, *tag.prime)) return false;
    ++units;
  }
  return units == degree(r, budgets);
}

bool is_strongly_p_embedded(const Subgroup& h, const Subgroup& ambient, unsigned p) {
  if (h.order() % p != 0) return false;
  const auto& g = *h.parent();
  for (ElementId a : ambient.elements()) {
    if (h.contains(a)) continue;
    // |H cap H^a| counts x in H with a x a^-1 in H
    std::size_t common = 0;
    for (ElementId y : h.elements())
      if (h.contains(g.conjugate(y, g.inverse(a)))) ++common;
    if (common % p == 0) return false;
  }
  return true;
}

std::optional<GaloisWitness> stable_galois_violation(const Subgroup& h, const Subgroup& ambient,
                                                     unsigned p) {
  const auto& g = *h.parent();
  auto in_conjugate = [&](ElementId y, ElementId by) {
    // y in H^by  <=>  by y by^-1 in H
    return h.contains(g.conjugate(y, g.inverse(by)));
  };
  for (ElementId a : ambient.elements()) {
    if (h.contains(a)) continue;
    std::vector<ElementId> pair;
    for (ElementId y : h.elements())
      if (in_conjugate(y, a)) pair.push_back(y);
    if (pair.size() % p != 0) continue;
    for (ElementId b : h.elements()) {
      if (in_conjugate(b, a)) continue;
      ElementId ab = g.multiply(a, b);
      std::size_t triple = 0;
      for (ElementId y : pair)
        if (in_conjugate(y, ab)) ++triple;
      if (triple % p == 0) return GaloisWitness{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace permring
