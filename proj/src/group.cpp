#include "permring/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "permring/error.hpp"

namespace permring {

namespace {

constexpr std::size_t kCayleyTableMaxOrder = 1024;

std::vector<ElementId> closure_ids(const FiniteGroup& g, std::span<const ElementId> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> out{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId s : gens) {
      ElementId y = g.multiply(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_power_of(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Least conjugate (as a sorted id list) of the subgroup with the given ids.
std::vector<ElementId> canonical_conjugate(const FiniteGroup& g, std::span<const ElementId> ids) {
  std::vector<ElementId> best(ids.begin(), ids.end());
  std::vector<ElementId> conj(ids.size());
  for (ElementId x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < ids.size(); ++i) conj[i] = g.conjugate(ids[i], x);
    std::sort(conj.begin(), conj.end());
    if (conj < best) best = conj;
  }
  return best;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent())
    throw Error(ErrorCode::ParentMismatch, "subgroups belong to different groups");
}

}  // namespace

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw Error(ErrorCode::NotAnElement, p.to_string() + " is not in the group");
  return *id;
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId FiniteGroup::conjugate(ElementId x, ElementId g) const {
  return multiply(inverses_[g], multiply(x, g));
}

GroupPtr generate_group(std::size_t degree, std::span<const Permutation> generators,
                        std::size_t order_bound) {
  for (const auto& s : generators)
    if (s.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "generator " + s.to_string() + " has degree " + std::to_string(s.degree()) +
                      ", expected " + std::to_string(degree));
  if (degree == 0) throw Error(ErrorCode::DegreeMismatch, "degree must be at least 1");

  std::unordered_map<Permutation, ElementId, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found[0], 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = s * found[i];
      if (seen.contains(y)) continue;
      if (found.size() >= order_bound)
        throw Error(ErrorCode::OrderBoundExceeded,
                    "group order exceeds the bound " + std::to_string(order_bound));
      seen.emplace(y, static_cast<ElementId>(found.size()));
      found.push_back(std::move(y));
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = degree;
  g->generators_.assign(generators.begin(), generators.end());
  std::sort(found.begin(), found.end());
  g->elements_ = std::move(found);
  const std::size_t n = g->elements_.size();
  g->index_.reserve(n);
  for (ElementId i = 0; i < n; ++i) g->index_.emplace(g->elements_[i], i);

  g->inverses_.resize(n);
  g->element_orders_.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    g->inverses_[i] = g->index_.at(g->elements_[i].inverse());
    g->element_orders_[i] = g->elements_[i].order();
  }
  if (n <= kCayleyTableMaxOrder) {
    g->table_.resize(n * n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        g->table_[static_cast<std::size_t>(a) * n + b] =
            g->index_.at(g->elements_[a] * g->elements_[b]);
  }

  std::vector<ElementId> gen_ids;
  for (const auto& s : generators) gen_ids.push_back(g->index_.at(s));
  g->bfs_parent_.assign(n, 0);
  g->bfs_generator_.assign(n, 0);
  std::vector<bool> visited(n, false);
  visited[0] = true;
  g->bfs_order_.push_back(0);
  for (std::size_t i = 0; i < g->bfs_order_.size(); ++i) {
    ElementId x = g->bfs_order_[i];
    for (std::size_t j = 0; j < gen_ids.size(); ++j) {
      ElementId y = g->multiply(gen_ids[j], x);
      if (visited[y]) continue;
      visited[y] = true;
      g->bfs_parent_[y] = x;
      g->bfs_generator_[y] = j;
      g->bfs_order_.push_back(y);
    }
  }
  return g;
}

std::size_t configured_order_bound() {
  if (const char* env = std::getenv("PERMRING_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderBound;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> ids)
    : parent_(std::move(parent)), ids_(std::move(ids)), member_(parent_->order(), false) {
  std::sort(ids_.begin(), ids_.end());
  for (ElementId x : ids_) member_[x] = true;
}

std::vector<ElementId> Subgroup::generators() const {
  std::vector<ElementId> gens;
  std::vector<bool> covered(parent_->order(), false);
  covered[FiniteGroup::identity()] = true;
  for (ElementId x : ids_) {
    if (covered[x]) continue;
    gens.push_back(x);
    std::fill(covered.begin(), covered.end(), false);
    for (ElementId y : closure_ids(*parent_, gens)) covered[y] = true;
  }
  return gens;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {FiniteGroup::identity()}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<ElementId> ids(g->order());
  for (ElementId i = 0; i < ids.size(); ++i) ids[i] = i;
  return Subgroup(g, std::move(ids));
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Permutation> generators) {
  std::vector<ElementId> ids;
  for (const auto& s : generators) ids.push_back(g->id_of(s));
  return subgroup_closure(g, ids);
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const ElementId> generators) {
  return Subgroup(g, closure_ids(*g, generators));
}

Subgroup point_stabilizer(const GroupPtr& g, std::span<const Point> points) {
  std::vector<ElementId> ids;
  for (ElementId x = 0; x < g->order(); ++x) {
    const Permutation& p = g->element(x);
    if (std::all_of(points.begin(), points.end(), [&](Point a) { return p[a] == a; }))
      ids.push_back(x);
  }
  return Subgroup(g, std::move(ids));
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementId g) {
  const auto& grp = *h.parent();
  std::vector<ElementId> ids;
  ids.reserve(h.order());
  for (ElementId x : h.elements()) ids.push_back(grp.conjugate(x, g));
  return Subgroup(h.parent(), std::move(ids));
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  return conjugate_subgroup(h, h.parent()->id_of(g));
}

Subgroup intersect_subgroups(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  std::vector<ElementId> ids;
  for (ElementId x : h.elements())
    if (k.contains(x)) ids.push_back(x);
  return Subgroup(h.parent(), std::move(ids));
}

bool is_subset(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  return std::all_of(k.elements().begin(), k.elements().end(),
                     [&](ElementId x) { return h.contains(x); });
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent();
  for (const auto& s : g.generators()) {
    ElementId sid = g.id_of(s);
    for (ElementId x : h.elements())
      if (!h.contains(g.conjugate(x, sid))) return false;
  }
  return true;
}

Subgroup normal_core(const Subgroup& h) {
  const auto& g = *h.parent();
  // c lies in x H x^-1 iff x^-1 c x lies in H; one x per left coset suffices
  auto cosets = left_cosets(h);
  std::vector<ElementId> ids;
  for (ElementId c : h.elements()) {
    bool in_all = std::all_of(cosets.representatives.begin(), cosets.representatives.end(),
                              [&](ElementId x) { return h.contains(g.conjugate(c, x)); });
    if (in_all) ids.push_back(c);
  }
  return Subgroup(h.parent(), std::move(ids));
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = *h.parent();
  auto gens = h.generators();
  std::vector<ElementId> ids;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool fixes = std::all_of(gens.begin(), gens.end(),
                             [&](ElementId s) { return h.contains(g.conjugate(s, x)); });
    if (fixes) ids.push_back(x);
  }
  return Subgroup(h.parent(), std::move(ids));
}

bool is_subconjugate(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  if (h.order() % k.order() != 0) return false;
  const auto& g = *h.parent();
  auto gens = k.generators();
  for (ElementId x = 0; x < g.order(); ++x) {
    bool inside = std::all_of(gens.begin(), gens.end(),
                              [&](ElementId s) { return h.contains(g.conjugate(s, x)); });
    if (inside) return true;
  }
  return false;
}

std::optional<ElementId> conjugating_element(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.order() != b.order()) return std::nullopt;
  const auto& g = *a.parent();
  auto gens = a.generators();
  for (ElementId x = 0; x < g.order(); ++x) {
    bool inside = std::all_of(gens.begin(), gens.end(),
                              [&](ElementId s) { return b.contains(g.conjugate(s, x)); });
    if (inside) return x;
  }
  return std::nullopt;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  return conjugating_element(a, b).has_value();
}

CosetTable left_cosets(const Subgroup& h) {
  const auto& g = *h.parent();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  CosetTable t;
  t.coset_of.assign(g.order(), kUnset);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] != kUnset) continue;
    auto c = static_cast<std::uint32_t>(t.representatives.size());
    t.representatives.push_back(x);
    for (ElementId y : h.elements()) t.coset_of[g.multiply(x, y)] = c;
  }
  return t;
}

DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  const auto& g = *h.parent();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  DoubleCosetDecomposition d{k, h, {}, {}, std::vector<std::uint32_t>(g.order(), kUnset)};
  for (ElementId x = 0; x < g.order(); ++x) {
    if (d.class_of[x] != kUnset) continue;
    auto c = static_cast<std::uint32_t>(d.representatives.size());
    std::size_t size = 0;
    for (ElementId a : k.elements()) {
      ElementId ax = g.multiply(a, x);
      for (ElementId b : h.elements()) {
        ElementId y = g.multiply(ax, b);
        if (d.class_of[y] == kUnset) {
          d.class_of[y] = c;
          ++size;
        }
      }
    }
    d.representatives.push_back(x);
    d.class_sizes.push_back(size);
  }
  return d;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_elementary_abelian(const Subgroup& e, unsigned p) {
  const auto& g = *e.parent();
  for (ElementId x : e.elements()) {
    if (x != FiniteGroup::identity() && g.element_order(x) != p) return false;
    for (ElementId y : e.elements())
      if (g.multiply(x, y) != g.multiply(y, x)) return false;
  }
  return true;
}

std::optional<std::size_t> ElementaryAbelianClassList::class_of(const Subgroup& e) const {
  if (!is_elementary_abelian(e, prime)) return std::nullopt;
  if (e.is_trivial()) {
    if (!include_trivial) return std::nullopt;
    return 0;
  }
  auto canon = canonical_conjugate(*e.parent(), e.elements());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto ids = classes[i].elements();
    if (ids.size() == canon.size() && std::equal(ids.begin(), ids.end(), canon.begin())) return i;
  }
  return std::nullopt;
}

ElementaryAbelianClassList elementary_abelian_classes(const GroupPtr& g, unsigned p,
                                                      bool include_trivial) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  ElementaryAbelianClassList out;
  out.prime = p;
  out.include_trivial = include_trivial;
  if (include_trivial) {
    out.classes.push_back(trivial_subgroup(g));
    out.ranks.push_back(0);
  }

  std::vector<ElementId> order_p;
  for (ElementId x = 0; x < g->order(); ++x)
    if (g->element_order(x) == p) order_p.push_back(x);

  std::set<std::vector<ElementId>> level;
  for (ElementId x : order_p) {
    ElementId one[] = {x};
    level.insert(canonical_conjugate(*g, closure_ids(*g, one)));
  }
  unsigned rank = 1;
  while (!level.empty()) {
    for (const auto& ids : level) {
      out.classes.emplace_back(g, ids);
      out.ranks.push_back(rank);
    }
    std::set<std::vector<ElementId>> next;
    for (const auto& ids : level) {
      Subgroup e(g, ids);
      std::vector<bool> covered(g->order(), false);
      for (ElementId x : order_p) {
        if (e.contains(x) || covered[x]) continue;
        bool commutes = std::all_of(ids.begin(), ids.end(), [&](ElementId y) {
          return g->multiply(x, y) == g->multiply(y, x);
        });
        if (!commutes) continue;
        std::vector<ElementId> gens = e.generators();
        gens.push_back(x);
        auto bigger = closure_ids(*g, gens);
        for (ElementId y : bigger) covered[y] = true;
        next.insert(canonical_conjugate(*g, bigger));
      }
    }
    level = std::move(next);
    ++rank;
  }
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::vector<ElementId> gens;
  std::vector<ElementId> current{FiniteGroup::identity()};
  std::vector<bool> member(g->order(), false);
  member[0] = true;
  for (ElementId x = 1; x < g->order(); ++x) {
    if (member[x] || !is_power_of(g->element_order(x), p)) continue;
    gens.push_back(x);
    auto candidate = closure_ids(*g, gens);
    if (is_power_of(candidate.size(), p)) {
      current = std::move(candidate);
      std::fill(member.begin(), member.end(), false);
      for (ElementId y : current) member[y] = true;
    } else {
      gens.pop_back();
    }
  }
  return Subgroup(g, std::move(current));
}

std::pair<GroupPtr, std::vector<ElementId>> subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<Permutation> gens;
  for (ElementId x : h.generators()) gens.push_back(g.element(x));
  GroupPtr sub = generate_group(g.degree(), gens, h.order());
  std::vector<ElementId> to_parent(sub->order());
  for (ElementId i = 0; i < sub->order(); ++i) to_parent[i] = g.id_of(sub->element(i));
  return {sub, std::move(to_parent)};
}

std::vector<std::string> generator_cycles(const Subgroup& h, bool one_based) {
  std::vector<std::string> out;
  for (ElementId x : h.generators()) out.push_back(h.parent()->element(x).to_string(one_based));
  return out;
}

std::string format_generators(const Subgroup& h, bool one_based) {
  auto parts = generator_cycles(h, one_based);
  if (parts.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s;
}

}  // namespace permring
