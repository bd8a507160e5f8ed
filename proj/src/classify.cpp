#include "pfour/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pfour {

Int least_nonresidue(Int p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("least_nonresidue: p must be an odd prime");
  std::vector<char> square(static_cast<std::size_t>(p), 0);
  for (Int x = 1; x < p; ++x)
    square[static_cast<std::size_t>(x * x % p)] = 1;
  for (Int e = 2; e < p; ++e)
    if (!square[static_cast<std::size_t>(e)])
      return e;
  throw std::logic_error("least_nonresidue: no nonsquare found");
}

ClassifyConfig make_config(Int p) {
  if (p == 2)
    throw std::invalid_argument("classification specified for odd p only");
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    throw std::invalid_argument("p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
  return {p, least_nonresidue(p)};
}

std::vector<CatalogTau> tau_catalog(const ClassifyConfig& cfg) {
  const Int p = cfg.p;
  const ModulusProfile two(p, Shape::p2xp);
  const ModulusProfile three(p, Shape::pxpxp);
  return {
      {"r1", MixedModulusMatrix(two, {{1, p}, {0, 1}})},
      {"r2", MixedModulusMatrix(two, {{1 + p, 0}, {0, 1}})},
      {"r3", MixedModulusMatrix(two, {{1, 0}, {1, 1}})},
      {"r4", MixedModulusMatrix(two, {{1, p}, {1, 1}})},
      {"r5", MixedModulusMatrix(two, {{1, cfg.epsilon * p}, {1, 1}})},
      {"J2", MixedModulusMatrix(three, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})},
      {"J3", MixedModulusMatrix(three, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})},
  };
}

std::vector<MixedModulusMatrix> tau_candidates(const ClassifyConfig& cfg,
                                               const ModulusProfile& profile) {
  if (profile.p() != cfg.p)
    throw std::invalid_argument("tau_candidates: profile prime differs from config");
  std::vector<MixedModulusMatrix> out;
  for (auto& entry : tau_catalog(cfg))
    if (entry.tau.profile() == profile)
      out.push_back(std::move(entry.tau));
  return out;
}

std::vector<AbelianElement> v_candidates(const ClassifyConfig& cfg, const MixedModulusMatrix& tau) {
  const ModulusProfile& profile = tau.profile();
  const AbelianSubgroup fixed = fixed_points(tau);
  const AbelianSubgroup im = image_subgroup(norm_matrix(tau, cfg.p));
  const Int exponent_n = profile.modulus(0);

  std::vector<AbelianElement> out{AbelianElement::zero(profile)};
  std::set<AbelianElement> covered(im.elements.begin(), im.elements.end());
  for (const auto& f : fixed.elements) {
    if (covered.contains(f))
      continue;
    out.push_back(f);
    for (Int k = 1; k < exponent_n; ++k) {
      if (k % cfg.p == 0)
        continue;
      const AbelianElement multiple = f.scaled(k);
      for (const auto& i : im.elements)
        covered.insert(multiple + i);
    }
  }
  return out;
}

std::string v_label(const AbelianElement& v) {
  if (v.is_zero())
    return "v0";
  std::size_t ones = 0, nonzero = 0, unit_pos = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] != 0)
      ++nonzero;
    if (v[i] == 1) {
      ++ones;
      unit_pos = i;
    }
  }
  if (nonzero == 1 && ones == 1)
    return "v-e" + std::to_string(unit_pos + 1);
  std::string out = "v-";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i)
      out += '_';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string candidate_label(const std::string& tau_name, const AbelianElement& v) {
  const std::string dim = std::to_string(v.dim());
  return dim + "x" + dim + "-" + tau_name + "-" + v_label(v);
}

std::vector<CandidateType> enumerate_candidates(const ClassifyConfig& cfg) {
  std::vector<CandidateType> out;
  for (const auto& entry : tau_catalog(cfg))
    for (const auto& v : v_candidates(cfg, entry.tau))
      out.push_back({ExtensionType{entry.tau.profile(), cfg.p, entry.tau, v},
                     candidate_label(entry.name, v), entry.name});
  return out;
}

Count census_closed_form(const ExtensionType& t) {
  const Int p = t.profile.p();
  if (t.n != p)
    throw std::invalid_argument("census_closed_form: requires n = p");
  if (auto check = validate_type(t); !check)
    throw InvalidExtensionType(check.defect, check.message);
  const Count base = t.profile.shape() == Shape::p2xp ? static_cast<Count>(p * p)
                                                      : static_cast<Count>(p * p * p);
  const AbelianSubgroup im = image_subgroup(norm_matrix(t.tau, p));
  if (!im.contains(t.v))
    return base;
  const Count kernel = static_cast<Count>(t.profile.order()) / im.order();
  return base + static_cast<Count>(p - 1) * kernel;
}

std::vector<AbelianDescriptor> abelian_catalog_types(const ClassifyConfig& cfg) {
  const auto p = static_cast<Count>(cfg.p);
  const std::vector<std::vector<Count>> chains = {
      {p * p * p * p}, {p, p * p * p}, {p * p, p * p}, {p, p, p * p}, {p, p, p, p}};
  std::vector<AbelianDescriptor> out;
  for (const auto& chain : chains) {
    std::string label = "abelian-";
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (it != chain.rbegin())
        label += "x";
      label += "C" + std::to_string(*it);
    }
    out.push_back({chain, label});
  }
  return out;
}

std::vector<FiniteGroup> abelian_catalog(const ClassifyConfig& cfg) {
  std::vector<FiniteGroup> out;
  for (const auto& d : abelian_catalog_types(cfg))
    out.push_back(abelian_group(d.invariants));
  return out;
}

namespace {

const ClassEntry* class_of(const std::vector<ClassEntry>& classes, const std::string& label) {
  for (const auto& c : classes) {
    if (c.label == label)
      return &c;
    if (std::find(c.merged_labels.begin(), c.merged_labels.end(), label) != c.merged_labels.end())
      return &c;
  }
  return nullptr;
}

}  // namespace

ClassificationResult classify_candidates(const ClassifyConfig& cfg,
                                         std::vector<CandidateType> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateType& a, const CandidateType& b) {
              return a.table_row_label < b.table_row_label;
            });
  ClassificationResult result;
  result.p = cfg.p;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].table_row_label == candidates[i - 1].table_row_label)
      result.problems.push_back("duplicate candidate label " + candidates[i].table_row_label);

  std::vector<FiniteGroup> reps;
  for (const auto& cand : candidates) {
    FiniteGroup g = build_group(cand.ext);
    Fingerprint fp = fingerprint(g);
    if (is_abelian(g))
      result.problems.push_back("candidate " + cand.table_row_label + " gives an abelian group");
    bool merged = false;
    for (std::size_t j = 0; j < reps.size() && !merged; ++j) {
      if (!(result.classes[j].fingerprint == fp))
        continue;
      ++result.oracle_calls;
      if (isomorphic(reps[j], g)) {
        result.classes[j].merged_labels.push_back(cand.table_row_label);
        merged = true;
      }
    }
    if (!merged) {
      result.classes.push_back({cand.table_row_label, cand, std::nullopt, fp, {}});
      reps.push_back(std::move(g));
    }
  }
  result.nonabelian_count = result.classes.size();

  for (const auto& d : abelian_catalog_types(cfg)) {
    const FiniteGroup g = abelian_group(d.invariants);
    result.classes.push_back({d.label, std::nullopt, d, fingerprint(g), {}});
  }
  result.abelian_count = result.classes.size() - result.nonabelian_count;
  result.total = result.classes.size();

  auto class_list = [&] {
    std::string s;
    for (std::size_t j = 0; j < result.nonabelian_count; ++j)
      s += (j ? ", " : "") + result.classes[j].label;
    return s;
  };
  if (result.nonabelian_count != 10)
    result.problems.push_back("expected 10 nonabelian classes, found " +
                              std::to_string(result.nonabelian_count) + ": " + class_list());
  if (result.abelian_count != 5)
    result.problems.push_back("expected 5 abelian classes, found " +
                              std::to_string(result.abelian_count));
  if (result.total != 15)
    result.problems.push_back("expected 15 classes, found " + std::to_string(result.total));

  const ModulusProfile two(cfg.p, Shape::p2xp);
  const std::string r2 = candidate_label("r2", AbelianElement(two, {0, 1}));
  const std::string r3 = candidate_label("r3", AbelianElement(two, {0, 1}));
  const ClassEntry* c2 = class_of(result.classes, r2);
  const ClassEntry* c3 = class_of(result.classes, r3);
  if (c2 && c3 && c2 != c3)
    result.problems.push_back(r2 + " and " + r3 + " were not merged");
  for (const auto& cand : candidates)
    if (cand.tau_name == "J2" && !cand.ext.v.is_zero()) {
      const ClassEntry* c = class_of(result.classes, cand.table_row_label);
      if (c && c->label == cand.table_row_label)
        result.problems.push_back(cand.table_row_label + " was not merged into another class");
    }
  return result;
}

ClassificationResult classify_p4(const ClassifyConfig& cfg) {
  return classify_candidates(cfg, enumerate_candidates(cfg));
}

std::optional<Subgroup> find_large_abelian_subgroup(const FiniteGroup& g) {
  if (is_abelian(g))
    return whole_group(g);
  const std::size_t threshold = g.order() / smallest_prime_factor(g.order());
  const Subgroup z = center(g);
  for (std::size_t hi = 0; hi < g.order(); ++hi) {
    const auto h = static_cast<ElementIndex>(hi);
    if (z.contains(h))
      continue;
    std::vector<ElementIndex> seeds = z.generators;
    seeds.push_back(h);
    const Subgroup a1 = subgroup_generated(g, seeds);
    if (a1.order() >= threshold)
      return a1;
    // Anything else centralizing h yields a larger abelian subgroup.
    for (ElementIndex k : centralizer(g, h).elements) {
      if (a1.contains(k))
        continue;
      seeds.push_back(k);
      Subgroup a2 = subgroup_generated(g, seeds);
      if (a2.order() >= threshold)
        return a2;
      seeds.pop_back();
    }
  }
  return std::nullopt;
}

bool verify_prop_abelian_subgroup(const FiniteGroup& g) {
  const auto a = find_large_abelian_subgroup(g);
  if (!a)
    return false;
  if (!is_abelian(g, *a))
    throw std::logic_error("find_large_abelian_subgroup returned a nonabelian subgroup");
  return true;
}

std::optional<Subgroup> find_cp2_times_cp(const FiniteGroup& g) {
  const Count p = smallest_prime_factor(g.order());
  const auto orders = element_orders(g);
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    if (orders[xi] != p * p)
      continue;
    const auto x = static_cast<ElementIndex>(xi);
    const Subgroup cyclic = subgroup_generated(g, std::span<const ElementIndex>(&x, 1));
    for (std::size_t yi = 0; yi < g.order(); ++yi) {
      const auto y = static_cast<ElementIndex>(yi);
      if (orders[yi] != p || cyclic.contains(y) || !elements_commute(g, x, y))
        continue;
      const ElementIndex seeds[] = {x, y};
      return subgroup_generated(g, seeds);
    }
  }
  return std::nullopt;
}

bool verify_prop_no_cyclic(const FiniteGroup& g) {
  const Count p = smallest_prime_factor(g.order());
  const auto orders = element_orders(g);
  if (std::find(orders.begin(), orders.end(), p * p * p) == orders.end())
    return true;
  const auto s = find_cp2_times_cp(g);
  return s && abelian_invariants(g, *s) == std::vector<Count>{p, p * p};
}

}  // namespace pfour
