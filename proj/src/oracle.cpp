#include "permring/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "permring/error.hpp"

namespace permring::oracle {

namespace {

using Bits = std::vector<bool>;

std::size_t popcount(const Bits& b) { return static_cast<std::size_t>(std::count(b.begin(), b.end(), true)); }

Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

struct SubsetSearch {
  const std::vector<Bits>& conjugates;
  unsigned p;
  std::size_t best = 0;

  std::size_t viable_from(std::size_t i, const Bits& current) const {
    std::size_t n = 0;
    for (std::size_t j = i; j < conjugates.size(); ++j)
      if (popcount(intersect(current, conjugates[j])) % p == 0) ++n;
    return n;
  }

  void run(std::size_t i, const Bits& current, std::size_t chosen) {
    best = std::max(best, chosen);
    if (i == conjugates.size()) return;
    if (chosen + viable_from(i, current) <= best) return;
    Bits with = intersect(current, conjugates[i]);
    if (popcount(with) % p == 0) {
      if (with == current) {
        run(i + 1, current, chosen + 1);
        return;
      }
      run(i + 1, with, chosen + 1);
    }
    run(i + 1, current, chosen);
  }
};

// Action table of every group element on X, built by our own breadth-first
// walk over left multiplication by generators.
std::vector<std::vector<Point>> all_element_actions(const GSet& x) {
  const auto& g = *x.group();
  std::vector<std::vector<Point>> tables(g.order());
  std::vector<Point> id(x.size());
  std::iota(id.begin(), id.end(), Point{0});
  tables[FiniteGroup::identity()] = id;
  std::vector<ElementId> queue{FiniteGroup::identity()};
  std::vector<bool> done(g.order(), false);
  done[FiniteGroup::identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId e = queue[i];
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      ElementId next = g.multiply(g.id_of(g.generators()[j]), e);
      if (done[next]) continue;
      done[next] = true;
      auto gen = x.generator_action(j);
      std::vector<Point> t(x.size());
      for (Point p = 0; p < x.size(); ++p) t[p] = gen[tables[e][p]];
      tables[next] = std::move(t);
      queue.push_back(next);
    }
  }
  return tables;
}

std::vector<ElementId> generated(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  std::set<ElementId> seen{FiniteGroup::identity()};
  std::vector<ElementId> frontier{FiniteGroup::identity()};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId a : frontier)
      for (ElementId s : gens)
        if (seen.insert(g.multiply(a, s)).second) next.push_back(g.multiply(a, s));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::size_t oracle_degree_stable(const Subgroup& h, unsigned p) {
  const auto& g = *h.parent();
  if (g.order() % p != 0)
    throw Error(ErrorCode::PrimeDoesNotDivideOrder, "p must divide |G|");

  // right cosets H g, each giving the conjugate H^g = g^-1 H g
  std::vector<bool> covered(g.order(), false);
  std::vector<Bits> conjugates;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (covered[a]) continue;
    for (ElementId y : h.elements()) covered[g.multiply(y, a)] = true;
    Bits conj(g.order(), false);
    ElementId a_inv = g.inverse(a);
    for (ElementId y : h.elements()) conj[g.multiply(a_inv, g.multiply(y, a))] = true;
    conjugates.push_back(std::move(conj));
  }

  SubsetSearch search{conjugates, p};
  search.run(0, Bits(g.order(), true), 0);
  return search.best;
}

std::vector<std::pair<std::size_t, std::size_t>> oracle_product_orbits(const GSet& x,
                                                                       const GSet& y) {
  if (x.group() != y.group())
    throw Error(ErrorCode::GroupMismatch, "G-sets are over different groups");
  const std::size_t ny = y.size();
  const std::size_t n = x.size() * ny;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t j = 0; j < x.group()->generators().size(); ++j) {
    auto ax = x.generator_action(j);
    auto ay = y.generator_action(j);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < ny; ++b) {
        std::size_t u = find(a * ny + b), v = find(ax[a] * ny + ay[b]);
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
  }
  std::vector<std::size_t> size(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++size[find(i)];

  auto tx = all_element_actions(x);
  auto ty = all_element_actions(y);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    std::size_t a = i / ny, b = i % ny, fixing = 0;
    for (ElementId e = 0; e < tx.size(); ++e)
      if (tx[e][a] == a && ty[e][b] == b) ++fixing;
    out.emplace_back(size[i], fixing);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t oracle_gmap_count(const GSet& y, const GSet& x) {
  if (x.group() != y.group())
    throw Error(ErrorCode::GroupMismatch, "G-sets are over different groups");
  const std::size_t ny = y.size(), nx = x.size();
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < ny; ++i) {
    total *= nx;
    if (total > kMapBudget)
      throw Error(ErrorCode::BudgetExceeded, "|X|^|Y| exceeds the map enumeration budget");
  }
  if (ny == 0) return 1;
  if (nx == 0) return 0;

  std::vector<Point> f(ny, 0);
  std::uint64_t count = 0;
  const auto n_gens = x.group()->generators().size();
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < n_gens && ok; ++j) {
      auto sy = y.generator_action(j);
      auto sx = x.generator_action(j);
      for (std::size_t a = 0; a < ny && ok; ++a) ok = f[sy[a]] == sx[f[a]];
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < ny && ++f[k] == nx) f[k++] = 0;
    if (k == ny) break;
  }
  return count;
}

std::vector<Subgroup> enumerate_subgroups(const Subgroup& within) {
  const auto& g = *within.parent();
  if (g.order() > kSubgroupEnumerationOrder)
    throw Error(ErrorCode::BudgetExceeded, "group too large for subgroup enumeration");
  std::set<std::vector<ElementId>> found{{FiniteGroup::identity()}};
  std::vector<std::vector<ElementId>> todo{{FiniteGroup::identity()}};
  while (!todo.empty()) {
    auto s = std::move(todo.back());
    todo.pop_back();
    std::vector<bool> in_s(g.order(), false);
    for (ElementId a : s) in_s[a] = true;
    for (ElementId x : within.elements()) {
      if (in_s[x]) continue;
      std::vector<ElementId> gens(s.begin(), s.end());
      gens.push_back(x);
      auto bigger = generated(g, gens);
      if (found.insert(bigger).second) todo.push_back(std::move(bigger));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& ids : found) out.emplace_back(within.parent(), ids);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups_within(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(h)) {
    bool normal = true;
    for (ElementId a = 0; a < g.order() && normal; ++a)
      for (ElementId y : s.elements())
        if (!s.contains(g.multiply(g.inverse(a), g.multiply(y, a)))) {
          normal = false;
          break;
        }
    if (normal) out.push_back(std::move(s));
  }
  return out;
}

Subgroup oracle_normal_core(const Subgroup& h) {
  auto normals = normal_subgroups_within(h);
  return normals.back();
}

}  // namespace permring::oracle
