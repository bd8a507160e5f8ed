#include "pfour/group_core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pfour {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementIndex> table, ElementIndex identity,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  if (order == 0)
    throw std::invalid_argument("FiniteGroup: order must be positive");
  if (table_.size() != order * order)
    throw std::invalid_argument("FiniteGroup: table must have order^2 entries");
  if (identity >= order)
    throw std::invalid_argument("FiniteGroup: identity index out of range");
  if (!labels_.empty() && labels_.size() != order)
    throw std::invalid_argument("FiniteGroup: one label per element required");
  for (ElementIndex e : table_)
    if (e >= order)
      throw std::invalid_argument("FiniteGroup: table entry out of range");
  inverses_.assign(order, kNoInverse);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (table_[a * order + b] == identity) {
        inverses_[a] = static_cast<ElementIndex>(b);
        break;
      }
}

ElementIndex FiniteGroup::power(ElementIndex a, Count k) const {
  ElementIndex result = identity_;
  ElementIndex base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string FiniteGroup::label(ElementIndex a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

namespace {

AxiomReport check_identity_and_inverses(const FiniteGroup& g) {
  const auto n = static_cast<ElementIndex>(g.order());
  const ElementIndex e = g.identity();
  for (ElementIndex a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a)
      return {false, "identity", {a}};
  }
  for (ElementIndex a = 0; a < n; ++a) {
    ElementIndex inv = g.inverse(a);
    if (inv == FiniteGroup::kNoInverse || g.mul(inv, a) != e)
      return {false, "inverse", {a}};
  }
  return {};
}

}  // namespace

AxiomReport verify_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<ElementIndex>(g.order());
  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b) {
      const ElementIndex ab = g.mul(a, b);
      for (ElementIndex c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          return {false, "associativity", {a, b, c}};
    }
  return check_identity_and_inverses(g);
}

AxiomReport verify_group_axioms_sampled(const FiniteGroup& g, std::size_t samples,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g.order() - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    ElementIndex a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      return {false, "associativity", {a, b, c}};
  }
  return check_identity_and_inverses(g);
}

bool Subgroup::contains(ElementIndex e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

Count element_order(const FiniteGroup& g, ElementIndex i) {
  Count k = 1;
  for (ElementIndex x = i; x != g.identity(); x = g.mul(x, i)) {
    ++k;
    if (k > g.order())
      throw std::logic_error("element_order: element never reaches the identity");
  }
  return k;
}

std::vector<Count> element_orders(const FiniteGroup& g) {
  std::vector<Count> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    out[i] = element_order(g, static_cast<ElementIndex>(i));
  return out;
}

std::map<Count, Count> order_census(const FiniteGroup& g) {
  std::map<Count, Count> census;
  for (Count o : element_orders(g))
    ++census[o];
  return census;
}

Count count_power_trivial(const FiniteGroup& g, Count k) {
  Count n = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    n += g.power(static_cast<ElementIndex>(i), k) == g.identity() ? 1 : 0;
  return n;
}

Count exponent(const FiniteGroup& g) {
  Count e = 1;
  for (Count o : element_orders(g))
    e = std::lcm(e, o);
  return e;
}

Count smallest_prime_factor(Count n) {
  if (n < 2)
    return 1;
  for (Count d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return d;
  return n;
}

bool elements_commute(const FiniteGroup& g, ElementIndex a, ElementIndex b) {
  return g.mul(a, b) == g.mul(b, a);
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (!elements_commute(g, static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)))
        return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& s) {
  const auto& gens = s.generators.empty() ? s.elements : s.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!elements_commute(g, gens[i], gens[j]))
        return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  const auto& gens = s.generators.empty() ? s.elements : s.generators;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xi = static_cast<ElementIndex>(x);
    for (ElementIndex h : gens)
      if (!s.contains(g.mul(g.mul(xi, h), g.inverse(xi))))
        return false;
  }
  return true;
}

namespace {

std::vector<ElementIndex> closure(const FiniteGroup& g, std::span<const ElementIndex> seeds) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementIndex> members{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (ElementIndex s : seeds) {
      ElementIndex next = g.mul(members[head], s);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

// Greedy generators drawn from `candidates`, which must span a subgroup of
// order `target_order`. Candidates are scanned by decreasing order, then
// increasing index. With `maximize_growth`, each step takes the candidate
// whose addition enlarges the closure most; otherwise the first one outside it.
std::vector<ElementIndex> greedy_generators(const FiniteGroup& g,
                                            std::vector<ElementIndex> candidates,
                                            std::size_t target_order, bool maximize_growth) {
  std::vector<std::pair<Count, ElementIndex>> keyed;
  keyed.reserve(candidates.size());
  for (ElementIndex c : candidates)
    keyed.emplace_back(element_order(g, c), c);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> current{g.identity()};
  while (current.size() < target_order) {
    std::vector<ElementIndex> best_closure;
    ElementIndex best = 0;
    for (const auto& [order, cand] : keyed) {
      if (std::binary_search(current.begin(), current.end(), cand))
        continue;
      gens.push_back(cand);
      auto cl = closure(g, gens);
      gens.pop_back();
      if (cl.size() > best_closure.size()) {
        best_closure = std::move(cl);
        best = cand;
        if (!maximize_growth || best_closure.size() == target_order)
          break;
      }
    }
    if (best_closure.empty())
      throw std::logic_error("greedy_generators: candidates do not span the target");
    gens.push_back(best);
    current = std::move(best_closure);
  }
  return gens;
}

}  // namespace

Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElementIndex> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s;
  s.generators = greedy_generators(g, elements, elements.size(), false);
  s.elements = std::move(elements);
  return s;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> seeds) {
  return make_subgroup(g, closure(g, seeds));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return make_subgroup(g, std::move(all));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementIndex> z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      central = elements_commute(g, static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
    if (central)
      z.push_back(static_cast<ElementIndex>(a));
  }
  return make_subgroup(g, std::move(z));
}

Subgroup centralizer(const FiniteGroup& g, ElementIndex a) {
  std::vector<ElementIndex> c;
  for (std::size_t b = 0; b < g.order(); ++b)
    if (elements_commute(g, a, static_cast<ElementIndex>(b)))
      c.push_back(static_cast<ElementIndex>(b));
  return make_subgroup(g, std::move(c));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementIndex> commutators;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto ai = static_cast<ElementIndex>(a), bi = static_cast<ElementIndex>(b);
      ElementIndex c = g.mul(g.mul(ai, bi), g.mul(g.inverse(ai), g.inverse(bi)));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_generated(g, commutators);
}

Subgroup power_subgroup(const FiniteGroup& g, Count k) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementIndex> powers;
  for (std::size_t a = 0; a < g.order(); ++a) {
    ElementIndex x = g.power(static_cast<ElementIndex>(a), k);
    if (!seen[x]) {
      seen[x] = 1;
      powers.push_back(x);
    }
  }
  return subgroup_generated(g, powers);
}

std::vector<ElementIndex> generating_sequence(const FiniteGroup& g) {
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return greedy_generators(g, std::move(all), g.order(), true);
}

std::vector<Count> abelian_invariants(const FiniteGroup& g, const Subgroup& s) {
  if (!is_abelian(g, s))
    throw std::invalid_argument("abelian_invariants: subgroup is not abelian");
  std::vector<Count> orders;
  orders.reserve(s.order());
  for (ElementIndex e : s.elements)
    orders.push_back(element_order(g, e));

  // Per prime q, the q-primary part has #{x : x^(q^k) = 1} = q^(sum_i min(k, e_i)).
  std::vector<std::vector<Count>> primary_parts;
  Count rest = s.order();
  while (rest > 1) {
    const Count q = smallest_prime_factor(rest);
    Count total_log = 0;
    while (rest % q == 0) {
      rest /= q;
      ++total_log;
    }
    std::vector<Count> log_counts{0};
    Count qk = 1;
    while (log_counts.back() < total_log) {
      qk *= q;
      Count count = 0;
      for (Count o : orders)
        count += (qk % o == 0) ? 1 : 0;
      Count lg = 0;
      for (; count > 1; count /= q)
        ++lg;
      log_counts.push_back(lg);
    }
    // at_least[k] = number of cyclic factors of order >= q^(k+1)
    std::vector<Count> part;
    const std::size_t depth = log_counts.size() - 1;
    for (std::size_t k = 1; k <= depth; ++k) {
      const Count at_least = log_counts[k] - log_counts[k - 1];
      const Count above = k < depth ? log_counts[k + 1] - log_counts[k] : 0;
      Count qpow = 1;
      for (std::size_t i = 0; i < k; ++i)
        qpow *= q;
      for (Count j = 0; j < at_least - above; ++j)
        part.push_back(qpow);
    }
    std::sort(part.begin(), part.end(), std::greater<>());
    primary_parts.push_back(std::move(part));
  }

  std::size_t length = 0;
  for (const auto& part : primary_parts)
    length = std::max(length, part.size());
  std::vector<Count> factors(length, 1);
  for (const auto& part : primary_parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      factors[i] *= part[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<Count> abelian_invariants(const FiniteGroup& g) {
  return abelian_invariants(g, whole_group(g));
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw std::invalid_argument("quotient: subgroup is not normal");
  constexpr ElementIndex unassigned = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> coset_of(g.order(), unassigned);
  std::vector<ElementIndex> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unassigned)
      continue;
    const auto id = static_cast<ElementIndex>(reps.size());
    reps.push_back(static_cast<ElementIndex>(x));
    for (ElementIndex h : n.elements)
      coset_of[g.mul(static_cast<ElementIndex>(x), h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<ElementIndex> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
  return FiniteGroup(m, std::move(table), coset_of[g.identity()]);
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.group_order = g.order();
  f.center_invariants = abelian_invariants(g, center(g));
  const Count p = smallest_prime_factor(g.order());
  f.census_le_p = count_power_trivial(g, p);
  const Subgroup derived = derived_subgroup(g);
  f.derived_order = derived.order();
  f.abelianization_invariants = abelian_invariants(quotient(g, derived));
  f.exponent = exponent(g);
  f.power_quotient_abelian = is_abelian(quotient(g, power_subgroup(g, p)));

  std::vector<ElementIndex> low;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.power(static_cast<ElementIndex>(a), p) == g.identity())
      low.push_back(static_cast<ElementIndex>(a));
  f.low_order_commute = true;
  for (std::size_t i = 0; i < low.size() && f.low_order_commute; ++i)
    for (std::size_t j = i + 1; j < low.size(); ++j)
      if (!elements_commute(g, low[i], low[j])) {
        f.low_order_commute = false;
        break;
      }
  return f;
}

FiniteGroup abelian_group(std::span<const Count> cyclic_orders) {
  std::size_t n = 1;
  for (Count c : cyclic_orders) {
    if (c == 0)
      throw std::invalid_argument("abelian_group: cyclic factor of order 0");
    n *= c;
    if (n > kMaxMaterializedOrder)
      throw std::length_error("abelian_group: group too large to materialize");
  }
  const std::size_t k = cyclic_orders.size();
  auto coords = [&](std::size_t idx) {
    std::vector<Count> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = idx % cyclic_orders[i];
      idx /= cyclic_orders[i];
    }
    return c;
  };
  std::vector<std::vector<Count>> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = coords(i);
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i)
        idx = idx * cyclic_orders[i] + (all[a][i] + all[b][i]) % cyclic_orders[i];
      table[a * n + b] = static_cast<ElementIndex>(idx);
    }
  return FiniteGroup(n, std::move(table), 0);
}

}  // namespace pfour
