#include "permring/gset.hpp"

#include <algorithm>
#include <numeric>

#include "permring/error.hpp"

namespace permring {

namespace {

void require_same_group(const GSet& x, const GSet& y) {
  if (x.group() != y.group())
    throw Error(ErrorCode::GroupMismatch, "G-sets are over different groups");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Point> element_table(const GSet& x, ElementId g) {
  std::vector<Point> t(x.size());
  for (Point p = 0; p < x.size(); ++p) t[p] = x.act(g, p);
  return t;
}

void enumerate_tuples(std::size_t m, std::size_t n, std::vector<Point>& current,
                      std::vector<bool>& used, std::vector<Point>& out) {
  if (current.size() == n) {
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (Point p = 0; p < m; ++p) {
    if (used[p]) continue;
    used[p] = true;
    current.push_back(p);
    enumerate_tuples(m, n, current, used, out);
    current.pop_back();
    used[p] = false;
  }
}

}  // namespace

GSet::GSet(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> generator_actions)
    : group_(std::move(group)), size_(size), actions_(std::move(generator_actions)) {
  if (actions_.size() != group_->generators().size())
    throw Error(ErrorCode::GroupMismatch, "need one action table per group generator");
  for (const auto& t : actions_) {
    if (t.size() != size_)
      throw Error(ErrorCode::InvalidPermutation, "action table has the wrong length");
    std::vector<bool> seen(size_, false);
    for (Point p : t) {
      if (p >= size_ || seen[p])
        throw Error(ErrorCode::InvalidPermutation, "generator action is not a bijection");
      seen[p] = true;
    }
  }
}

GSet GSet::trivial(GroupPtr group, std::size_t n) {
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::vector<std::vector<Point>> actions(group->generators().size(), id);
  return GSet(std::move(group), n, std::move(actions));
}

Point GSet::act(ElementId g, Point x) const {
  // g = s_j1 * s_j2 * ... * s_jk; apply s_jk first
  std::vector<std::size_t> word;
  for (ElementId e = g; e != FiniteGroup::identity(); e = group_->bfs_parent(e))
    word.push_back(group_->bfs_generator(e));
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = actions_[*it][x];
  return x;
}

std::vector<Point> GSet::images_of(Point x) const {
  std::vector<Point> out(group_->order());
  for (ElementId e : group_->bfs_order()) {
    out[e] = e == FiniteGroup::identity()
                 ? x
                 : actions_[group_->bfs_generator(e)][out[group_->bfs_parent(e)]];
  }
  return out;
}

Subgroup GSet::stabilizer(Point x) const {
  Point one[] = {x};
  return stabilizer(one);
}

Subgroup GSet::stabilizer(std::span<const Point> tuple) const {
  std::vector<bool> keep(group_->order(), true);
  for (Point x : tuple) {
    auto images = images_of(x);
    for (ElementId e = 0; e < images.size(); ++e)
      if (images[e] != x) keep[e] = false;
  }
  std::vector<ElementId> ids;
  for (ElementId e = 0; e < keep.size(); ++e)
    if (keep[e]) ids.push_back(e);
  return Subgroup(group_, std::move(ids));
}

std::vector<Point> GSet::fixed_points(const Subgroup& h) const {
  if (h.parent() != group_)
    throw Error(ErrorCode::GroupMismatch, "subgroup is not of the acting group");
  std::vector<bool> fixed(size_, true);
  for (ElementId s : h.generators()) {
    auto t = element_table(*this, s);
    for (Point p = 0; p < size_; ++p)
      if (t[p] != p) fixed[p] = false;
  }
  std::vector<Point> out;
  for (Point p = 0; p < size_; ++p)
    if (fixed[p]) out.push_back(p);
  return out;
}

ActionTable::ActionTable(const GSet& x, std::size_t cell_budget) : points_(x.size()) {
  const auto& g = *x.group();
  if (g.order() * points_ > cell_budget)
    throw Error(ErrorCode::SizeBudgetExceeded,
                "action table of " + std::to_string(g.order()) + " x " +
                    std::to_string(points_) + " cells exceeds the budget");
  table_.resize(g.order() * points_);
  for (ElementId e : g.bfs_order()) {
    Point* row = table_.data() + static_cast<std::size_t>(e) * points_;
    if (e == FiniteGroup::identity()) {
      std::iota(row, row + points_, Point{0});
      continue;
    }
    const Point* prev = table_.data() + static_cast<std::size_t>(g.bfs_parent(e)) * points_;
    auto gen = x.generator_action(g.bfs_generator(e));
    for (std::size_t p = 0; p < points_; ++p) row[p] = gen[prev[p]];
  }
}

bool is_equivariant(const GMap& f) {
  require_same_group(*f.source, *f.target);
  const auto n_gens = f.source->group()->generators().size();
  for (std::size_t j = 0; j < n_gens; ++j) {
    auto src = f.source->generator_action(j);
    auto dst = f.target->generator_action(j);
    for (Point y = 0; y < f.source->size(); ++y)
      if (f.mapping[src[y]] != dst[f.mapping[y]]) return false;
  }
  return true;
}

CosetSpace coset_space(const Subgroup& h) {
  const auto& g = *h.parent();
  auto cosets = left_cosets(h);
  std::vector<std::vector<Point>> actions;
  for (const auto& s : g.generators()) {
    ElementId sid = g.id_of(s);
    std::vector<Point> t(cosets.representatives.size());
    for (std::size_t c = 0; c < t.size(); ++c)
      t[c] = cosets.coset_of[g.multiply(sid, cosets.representatives[c])];
    actions.push_back(std::move(t));
  }
  std::size_t n = cosets.representatives.size();
  return {GSet(h.parent(), n, std::move(actions)), std::move(cosets)};
}

GSet coset_gset(const Subgroup& h) { return coset_space(h).gset; }

GSet disjoint_union(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  std::vector<std::vector<Point>> actions;
  const auto offset = static_cast<Point>(x.size());
  for (std::size_t j = 0; j < x.group()->generators().size(); ++j) {
    std::vector<Point> t(x.generator_action(j).begin(), x.generator_action(j).end());
    for (Point p : y.generator_action(j)) t.push_back(p + offset);
    actions.push_back(std::move(t));
  }
  return GSet(x.group(), x.size() + y.size(), std::move(actions));
}

GSet product(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  const std::size_t n = x.size() * y.size();
  std::vector<std::vector<Point>> actions;
  for (std::size_t j = 0; j < x.group()->generators().size(); ++j) {
    auto ax = x.generator_action(j);
    auto ay = y.generator_action(j);
    std::vector<Point> t(n);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < y.size(); ++b)
        t[a * y.size() + b] = static_cast<Point>(ax[a] * y.size() + ay[b]);
    actions.push_back(std::move(t));
  }
  return GSet(x.group(), n, std::move(actions));
}

std::vector<std::uint32_t> orbit_labels(const GSet& x) {
  DisjointSets sets(x.size());
  for (std::size_t j = 0; j < x.group()->generators().size(); ++j) {
    auto t = x.generator_action(j);
    for (Point p = 0; p < x.size(); ++p) sets.unite(p, t[p]);
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> root_label(x.size(), kUnset);
  std::vector<std::uint32_t> labels(x.size());
  std::uint32_t next = 0;
  for (Point p = 0; p < x.size(); ++p) {
    auto r = sets.find(p);
    if (root_label[r] == kUnset) root_label[r] = next++;
    labels[p] = root_label[r];
  }
  return labels;
}

std::vector<Orbit> orbits(const GSet& x) {
  auto labels = orbit_labels(x);
  std::vector<Orbit> out;
  for (Point p = 0; p < x.size(); ++p) {
    if (labels[p] == out.size()) {
      out.push_back(Orbit{p, 0, x.stabilizer(p)});
    }
    ++out[labels[p]].size;
  }
  return out;
}

std::uint64_t falling_factorial(std::uint64_t m, std::uint64_t n) {
  if (n > m) return 0;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    acc *= (m - i);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error(ErrorCode::Overflow, "falling factorial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t rank_distinct_tuple(std::size_t m, std::span<const Point> tuple) {
  const std::size_t n = tuple.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t digit = tuple[i];
    for (std::size_t j = 0; j < i; ++j)
      if (tuple[j] < tuple[i]) --digit;
    rank = rank * (m - i) + digit;
  }
  return rank;
}

std::vector<Point> unrank_distinct_tuple(std::size_t m, std::size_t n, std::uint64_t rank) {
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = rank % (m - i);
    rank /= (m - i);
  }
  std::vector<bool> used(m, false);
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t skip = digits[i];
    Point p = 0;
    for (;; ++p) {
      if (used[p]) continue;
      if (skip == 0) break;
      --skip;
    }
    used[p] = true;
    out[i] = p;
  }
  return out;
}

GSet distinct_tuples(const GSet& x, std::size_t n, std::size_t point_budget) {
  const std::size_t m = x.size();
  if (n > m + 1)
    throw Error(ErrorCode::TupleLengthOutOfRange,
                "tuple length " + std::to_string(n) + " exceeds |X|+1 = " + std::to_string(m + 1));
  const std::uint64_t count = falling_factorial(m, n);
  if (count > point_budget)
    throw Error(ErrorCode::SizeBudgetExceeded,
                std::to_string(count) + " tuples exceed the point budget " +
                    std::to_string(point_budget));

  std::vector<Point> flat;
  flat.reserve(count * n);
  if (count > 0) {
    std::vector<Point> current;
    std::vector<bool> used(m, false);
    enumerate_tuples(m, n, current, used, flat);
  }

  std::vector<std::vector<Point>> actions;
  std::vector<Point> image(n);
  for (std::size_t j = 0; j < x.group()->generators().size(); ++j) {
    auto a = x.generator_action(j);
    std::vector<Point> t(count);
    for (std::uint64_t r = 0; r < count; ++r) {
      for (std::size_t i = 0; i < n; ++i) image[i] = a[flat[r * n + i]];
      t[r] = static_cast<Point>(rank_distinct_tuple(m, image));
    }
    actions.push_back(std::move(t));
  }
  return GSet(x.group(), count, std::move(actions));
}

std::uint64_t count_equivariant_maps(const GSet& y, const GSet& x) {
  require_same_group(x, y);
  unsigned __int128 total = 1;
  for (const auto& o : orbits(y)) {
    total *= x.fixed_points(o.stabilizer).size();
    if (total > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error(ErrorCode::Overflow, "equivariant map count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

bool gsets_isomorphic(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  if (x.size() != y.size()) return false;
  auto ox = orbits(x);
  auto oy = orbits(y);
  if (ox.size() != oy.size()) return false;
  std::vector<bool> matched(oy.size(), false);
  for (const auto& a : ox) {
    bool found = false;
    for (std::size_t i = 0; i < oy.size() && !found; ++i) {
      if (matched[i] || oy[i].size != a.size) continue;
      if (are_conjugate(a.stabilizer, oy[i].stabilizer)) {
        matched[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

GSet restrict_gset(const GSet& x, const GroupPtr& k_group,
                   std::span<const ElementId> k_to_parent) {
  std::vector<std::vector<Point>> actions;
  for (const auto& s : k_group->generators())
    actions.push_back(element_table(x, k_to_parent[k_group->id_of(s)]));
  return GSet(k_group, x.size(), std::move(actions));
}

}  // namespace permring
