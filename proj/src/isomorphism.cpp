#include "pfour/group_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pfour {

bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                    std::span<const ElementIndex> map) {
  const std::size_t n = g1.order();
  if (g2.order() != n || map.size() != n)
    return false;
  std::vector<char> hit(n, 0);
  for (ElementIndex img : map) {
    if (img >= n || hit[img])
      return false;
    hit[img] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ai = static_cast<ElementIndex>(a), bi = static_cast<ElementIndex>(b);
      if (map[g1.mul(ai, bi)] != g2.mul(map[ai], map[bi]))
        return false;
    }
  return true;
}

namespace {

// Isomorphism-invariant data attached to each element; images must match.
using ElementKey = std::tuple<Count, Count, bool>;

struct ElementData {
  std::vector<Count> orders;
  std::vector<ElementKey> keys;
};

ElementData element_data(const FiniteGroup& g) {
  ElementData d;
  d.orders = element_orders(g);
  const Subgroup derived = derived_subgroup(g);
  d.keys.resize(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    Count centralizer = 0;
    for (std::size_t b = 0; b < g.order(); ++b)
      centralizer += elements_commute(g, static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
    d.keys[a] = {d.orders[a], centralizer, derived.contains(static_cast<ElementIndex>(a))};
  }
  return d;
}

// Breadth-first spanning tree of <g_0, ..., g_level> using those generators.
// Tree edges define the candidate map; the remaining edges are relations the
// images must satisfy.
struct Edge {
  ElementIndex from;
  std::uint32_t gen;
  ElementIndex to;
};

struct LevelPlan {
  std::vector<Edge> tree;
  std::vector<Edge> relations;
};

LevelPlan plan_level(const FiniteGroup& g, std::span<const ElementIndex> gens) {
  LevelPlan plan;
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementIndex> queue{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementIndex x = queue[head];
    for (std::uint32_t j = 0; j < gens.size(); ++j) {
      const ElementIndex y = g.mul(x, gens[j]);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
        plan.tree.push_back({x, j, y});
      } else {
        plan.relations.push_back({x, j, y});
      }
    }
  }
  return plan;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteGroup& g1, const FiniteGroup& g2)
      : g1_(g1), g2_(g2), data1_(element_data(g1)), data2_(element_data(g2)) {
    gens_ = generating_sequence(g1);
    for (std::size_t l = 0; l < gens_.size(); ++l)
      plans_.push_back(plan_level(g1, std::span<const ElementIndex>(gens_.data(), l + 1)));
    for (ElementIndex g : gens_) {
      std::vector<ElementIndex> cands;
      for (std::size_t h = 0; h < g2.order(); ++h)
        if (data2_.keys[h] == data1_.keys[g])
          cands.push_back(static_cast<ElementIndex>(h));
      candidates_.push_back(std::move(cands));
    }
    images_.assign(gens_.size(), 0);
    phi_.assign(g1.order(), 0);
    stamp_.assign(g2.order(), 0);
  }

  bool run() { return gens_.empty() ? extend_trivial() : search(0); }

  std::vector<ElementIndex> witness() const { return phi_; }

 private:
  bool extend_trivial() {
    phi_[g1_.identity()] = g2_.identity();
    return true;
  }

  Count commutator_order(const FiniteGroup& g, const ElementData& d, ElementIndex a,
                         ElementIndex b) const {
    return d.orders[g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)))];
  }

  bool pairs_compatible(std::size_t level) const {
    const ElementIndex gl = gens_[level], hl = images_[level];
    for (std::size_t j = 0; j < level; ++j) {
      const ElementIndex gj = gens_[j], hj = images_[j];
      if (data1_.orders[g1_.mul(gj, gl)] != data2_.orders[g2_.mul(hj, hl)])
        return false;
      if (commutator_order(g1_, data1_, gj, gl) != commutator_order(g2_, data2_, hj, hl))
        return false;
    }
    return true;
  }

  // Defines phi on <g_0..g_level> from the chosen images; false if the
  // relations fail or two elements collide.
  bool extend(std::size_t level) {
    const LevelPlan& plan = plans_[level];
    ++current_stamp_;
    phi_[g1_.identity()] = g2_.identity();
    stamp_[g2_.identity()] = current_stamp_;
    for (const Edge& e : plan.tree) {
      const ElementIndex img = g2_.mul(phi_[e.from], images_[e.gen]);
      if (stamp_[img] == current_stamp_)
        return false;
      stamp_[img] = current_stamp_;
      phi_[e.to] = img;
    }
    for (const Edge& e : plan.relations)
      if (g2_.mul(phi_[e.from], images_[e.gen]) != phi_[e.to])
        return false;
    return true;
  }

  bool search(std::size_t level) {
    for (ElementIndex h : candidates_[level]) {
      images_[level] = h;
      if (!pairs_compatible(level) || !extend(level))
        continue;
      if (level + 1 == gens_.size() || search(level + 1))
        return true;
    }
    return false;
  }

  const FiniteGroup& g1_;
  const FiniteGroup& g2_;
  ElementData data1_;
  ElementData data2_;
  std::vector<ElementIndex> gens_;
  std::vector<LevelPlan> plans_;
  std::vector<std::vector<ElementIndex>> candidates_;
  std::vector<ElementIndex> images_;
  std::vector<ElementIndex> phi_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t current_stamp_ = 0;
};

}  // namespace

IsomorphismResult isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order() != g2.order())
    return {};
  if (!(fingerprint(g1) == fingerprint(g2)))
    return {};
  IsomorphismSearch search(g1, g2);
  if (!search.run())
    return {};
  IsomorphismResult result{true, search.witness()};
  if (!is_isomorphism(g1, g2, result.witness))
    throw std::logic_error("isomorphic: witness failed re-verification");
  return result;
}

}  // namespace pfour
