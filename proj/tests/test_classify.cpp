#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "pfour/classify.hpp"
#include "pfour/tables.hpp"

using namespace pfour;

namespace {

ModulusProfile two(Int p) { return ModulusProfile(p, Shape::p2xp); }
ModulusProfile three(Int p) { return ModulusProfile(p, Shape::pxpxp); }

const CandidateType& find_candidate(const std::vector<CandidateType>& cs, const std::string& label) {
  for (const auto& c : cs)
    if (c.table_row_label == label)
      return c;
  throw std::runtime_error("no candidate " + label);
}

std::vector<std::string> labels_of(const ClassificationResult& r) {
  std::vector<std::string> out;
  for (const auto& c : r.classes)
    out.push_back(c.label);
  return out;
}

// Closure of {a, b} under the table, computed without the library's subgroup code.
std::vector<ElementIndex> naive_closure(const FiniteGroup& g, ElementIndex a, ElementIndex b) {
  std::set<ElementIndex> s{g.identity(), a, b};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElementIndex> cur(s.begin(), s.end());
    for (ElementIndex x : cur)
      for (ElementIndex y : cur)
        grew |= s.insert(g.mul(x, y)).second;
  }
  return {s.begin(), s.end()};
}

bool naive_has_c9_c3(const FiniteGroup& g) {
  const auto orders = element_orders(g);
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b) {
      if (orders[a] != 9 || orders[b] != 3)
        continue;
      const auto s = naive_closure(g, a, b);
      if (s.size() != 27)
        continue;
      bool abelian = true;
      for (ElementIndex x : s)
        for (ElementIndex y : s)
          abelian &= g.mul(x, y) == g.mul(y, x);
      if (abelian)
        return true;
    }
  return false;
}

}  // namespace

TEST_CASE("configuration") {
  for (Int p : {3, 5, 7, 11, 13, 97}) {
    Int expected = 2;
    while (oracle::is_square_mod(expected, p))
      ++expected;
    CHECK(least_nonresidue(p) == expected);
    CHECK(make_config(p).epsilon == expected);
  }
  CHECK_THROWS_AS(make_config(2), std::invalid_argument);
  CHECK_THROWS_AS(make_config(4), std::invalid_argument);
  CHECK_THROWS_AS(make_config(9), std::invalid_argument);
  CHECK_THROWS_AS(make_config(101), std::invalid_argument);
}

TEST_CASE("tau candidates") {
  const ClassifyConfig c3 = make_config(3);
  const auto t3 = tau_candidates(c3, two(3));
  REQUIRE(t3.size() == 5);
  CHECK(t3[4] == MixedModulusMatrix(two(3), {{1, 6}, {1, 1}}));
  CHECK(tau_candidates(make_config(5), two(5))[4] == MixedModulusMatrix(two(5), {{1, 10}, {1, 1}}));
  const auto j = tau_candidates(c3, three(3));
  REQUIRE(j.size() == 2);
  CHECK(j[0] == MixedModulusMatrix(three(3), {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(j[1] == MixedModulusMatrix(three(3), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  for (Int p : {3, 5, 7})
    for (const auto& entry : tau_catalog(make_config(p)))
      CHECK(mat_order(entry.tau) == p);
}

TEST_CASE("v candidates") {
  const ClassifyConfig c3 = make_config(3), c5 = make_config(5);
  CHECK(v_candidates(c3, MixedModulusMatrix(two(3), {{1, 3}, {0, 1}})) ==
        std::vector<AbelianElement>{AbelianElement(two(3), {0, 0}), AbelianElement(two(3), {1, 0})});
  CHECK(v_candidates(c3, MixedModulusMatrix(two(3), {{1, 6}, {1, 1}})) ==
        std::vector<AbelianElement>{AbelianElement(two(3), {0, 0}), AbelianElement(two(3), {3, 0})});
  CHECK(v_candidates(c5, MixedModulusMatrix(two(5), {{1, 10}, {1, 1}})) ==
        std::vector<AbelianElement>{AbelianElement(two(5), {0, 0})});
  CHECK(v_candidates(c3, MixedModulusMatrix(two(3), {{1, 3}, {1, 1}})).size() == 1);
  // Single-block tau: zero plus one representative per line of N^tau.
  for (Int p : {3, 5}) {
    const auto j2 = v_candidates(make_config(p), tau_catalog(make_config(p))[5].tau);
    CHECK(j2.size() == static_cast<std::size_t>(p + 2));
    CHECK(j2.front().is_zero());
  }
  // Every candidate is fixed, and no two nonzero ones are unit multiples mod im.
  for (Int p : {3, 5}) {
    const ClassifyConfig cfg = make_config(p);
    for (const auto& entry : tau_catalog(cfg)) {
      const auto vs = v_candidates(cfg, entry.tau);
      const auto im = image_subgroup(norm_matrix(entry.tau, p));
      for (const auto& v : vs)
        CHECK(mat_apply(entry.tau, v) == v);
      for (std::size_t a = 1; a < vs.size(); ++a)
        for (std::size_t b = 1; b < vs.size(); ++b)
          for (Int k = 1; k < p * p && a != b; ++k)
            if (k % p != 0)
              CHECK_FALSE(im.contains(vs[a].scaled(k) - vs[b]));
    }
  }
}

TEST_CASE("labels") {
  CHECK(v_label(AbelianElement(two(3), {0, 0})) == "v0");
  CHECK(v_label(AbelianElement(three(3), {1, 0, 0})) == "v-e1");
  CHECK(v_label(AbelianElement(two(3), {3, 0})) == "v-3_0");
  CHECK(candidate_label("r1", AbelianElement(two(3), {0, 0})) == "2x2-r1-v0");
  CHECK(candidate_label("J3", AbelianElement(three(5), {1, 0, 0})) == "3x3-J3-v-e1");
  for (Int p : {3, 5}) {
    std::set<std::string> seen;
    for (const auto& c : enumerate_candidates(make_config(p))) {
      CHECK(seen.insert(c.table_row_label).second);
      CHECK(validate_type(c.ext).ok());
    }
  }
}

TEST_CASE("census closed form") {
  const auto c3 = enumerate_candidates(make_config(3));
  CHECK(census_closed_form(find_candidate(c3, "2x2-r5-v0").ext) == 63);
  CHECK(census_closed_form(find_candidate(c3, "3x3-J3-v0").ext) == 45);
  for (Int p : {3, 5, 7}) {
    const auto cs = enumerate_candidates(make_config(p));
    CHECK(census_closed_form(find_candidate(cs, "3x3-J2-v0").ext) ==
          static_cast<Count>(p * p * p * p));
  }
  for (Int p : {3, 5})
    for (const auto& c : enumerate_candidates(make_config(p))) {
      const oracle::Extension ref{
          oracle::Vec(c.ext.profile.moduli().begin(), c.ext.profile.moduli().end()), c.ext.n,
          c.ext.tau.rows(), oracle::Vec(c.ext.v.coords().begin(), c.ext.v.coords().end())};
      CHECK(census_closed_form(c.ext) == static_cast<Count>(ref.census(p)));
    }
  const ExtensionType bad{two(3), 9, MixedModulusMatrix(two(3), {{1, 3}, {0, 1}}),
                          AbelianElement::zero(two(3))};
  CHECK_THROWS(census_closed_form(bad));
}

TEST_CASE("abelian catalog") {
  const ClassifyConfig cfg = make_config(3);
  const auto types = abelian_catalog_types(cfg);
  const auto groups = abelian_catalog(cfg);
  REQUIRE(groups.size() == 5);
  const std::vector<std::vector<Count>> chains = {{81}, {3, 27}, {9, 9}, {3, 3, 9}, {3, 3, 3, 3}};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(types[i].invariants == chains[i]);
    CHECK(abelian_invariants(groups[i]) == chains[i]);
    for (std::size_t j = i + 1; j < 5; ++j)
      CHECK_FALSE(isomorphic(groups[i], groups[j]));
  }
  CHECK(order_census(groups[0]).at(81) == static_cast<Count>(oracle::euler_phi(81)));
  CHECK(types[1].label == "abelian-C27xC3");
}

TEST_CASE("classification at p = 3") {
  const ClassifyConfig cfg = make_config(3);
  const ClassificationResult r = classify_p4(cfg);
  CHECK(r.ok());
  CHECK(r.total == 15);
  CHECK(r.abelian_count == 5);
  CHECK(r.nonabelian_count == 10);
  const auto labels = labels_of(r);
  CHECK(std::find(labels.begin(), labels.end(), "3x3-J3-v-e1") == labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "2x2-r5-v-3_0") != labels.end());
  for (const auto& c : r.classes)
    if (c.label == "2x2-r2-v-e2")
      CHECK(c.merged_labels == std::vector<std::string>{"2x2-r3-v-e2"});
}

TEST_CASE("classification at p = 5") {
  const ClassificationResult r = classify_p4(make_config(5));
  CHECK(r.ok());
  CHECK(r.total == 15);
  CHECK(r.nonabelian_count == 10);
  const auto labels = labels_of(r);
  CHECK(std::find(labels.begin(), labels.end(), "3x3-J3-v-e1") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "2x2-r5-v-5_0") == labels.end());
  // Every nonzero v for the single-block tau lands in another class.
  for (const auto& c : r.classes)
    for (const auto& m : c.merged_labels)
      if (m.rfind("3x3-J2-", 0) == 0)
        CHECK(c.label.rfind("2x2-", 0) == 0);
}

TEST_CASE("classification is independent of candidate order") {
  const ClassifyConfig cfg = make_config(3);
  auto candidates = enumerate_candidates(cfg);
  const ClassificationResult base = classify_candidates(cfg, candidates);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 3; ++k) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const ClassificationResult again = classify_candidates(cfg, candidates);
    CHECK(labels_of(again) == labels_of(base));
    for (std::size_t i = 0; i < base.classes.size(); ++i)
      CHECK(again.classes[i].merged_labels == base.classes[i].merged_labels);
  }
}

TEST_CASE("unexpected class structure is reported") {
  const ClassifyConfig cfg = make_config(3);
  auto candidates = enumerate_candidates(cfg);
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                  [](const CandidateType& c) { return c.tau_name == "J3"; }),
                   candidates.end());
  const ClassificationResult r = classify_candidates(cfg, candidates);
  CHECK_FALSE(r.ok());
  CHECK(r.nonabelian_count == 9);
}

TEST_CASE("abelian subgroup of index p") {
  const Count c[] = {9, 9};
  CHECK(verify_prop_abelian_subgroup(abelian_group(c)));
  for (Int p : {3, 5}) {
    for (const auto& cls : classify_p4(make_config(p)).classes) {
      if (!cls.representative)
        continue;
      const FiniteGroup g = build_group(cls.representative->ext);
      const auto a = find_large_abelian_subgroup(g);
      REQUIRE(a.has_value());
      CHECK(a->order() * static_cast<std::size_t>(p) >= g.order());
      CHECK(is_abelian(g, *a));
      CHECK(verify_prop_abelian_subgroup(g));
    }
  }
}

TEST_CASE("C_{p^2} x C_p subgroups") {
  const auto c3 = enumerate_candidates(make_config(3));
  const FiniteGroup j2 = build_group(find_candidate(c3, "3x3-J2-v0").ext);
  CHECK(exponent(j2) == 3);
  CHECK(verify_prop_no_cyclic(j2));
  CHECK_FALSE(find_cp2_times_cp(j2).has_value());

  const FiniteGroup row2 = build_group(find_candidate(c3, "2x2-r1-v-e1").ext);
  CHECK(exponent(row2) == 27);
  CHECK(verify_prop_no_cyclic(row2));
  CHECK(find_cp2_times_cp(row2).has_value() == naive_has_c9_c3(row2));

  for (const auto& c : c3) {
    const FiniteGroup g = build_group(c.ext);
    CHECK(verify_prop_no_cyclic(g));
    const auto s = find_cp2_times_cp(g);
    CHECK(s.has_value() == naive_has_c9_c3(g));
    if (s)
      CHECK(abelian_invariants(g, *s) == std::vector<Count>{3, 9});
  }
}

TEST_CASE("Table 1 entries") {
  const Table1 t3 = emit_table1(make_config(3));
  REQUIRE(t3.rows.size() == 7);
  const auto& r1 = t3.rows[0];
  CHECK(r1.fixed_generators == std::vector<AbelianElement>{AbelianElement(two(3), {1, 0})});
  CHECK(r1.norm == MixedModulusMatrix(two(3), {{3, 0}, {0, 0}}));
  CHECK(r1.image_generators == std::vector<AbelianElement>{AbelianElement(two(3), {3, 0})});
  CHECK(r1.v_choices ==
        std::vector<AbelianElement>{AbelianElement(two(3), {0, 0}), AbelianElement(two(3), {1, 0})});
  CHECK(t3.rows[6].norm == MixedModulusMatrix(three(3), {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(t3.rows[5].v_choices == std::vector<AbelianElement>{AbelianElement::zero(three(3))});

  const Table1 t5 = emit_table1(make_config(5));
  CHECK(t5.rows[4].condition == "p>3");
  CHECK(t5.rows[4].image_generators == std::vector<AbelianElement>{AbelianElement(two(5), {5, 0})});
  CHECK(t5.rows[4].v_choices == std::vector<AbelianElement>{AbelianElement(two(5), {0, 0})});
  CHECK(render_table1(t5).find("[[1,10],[1,1]]") != std::string::npos);
}

TEST_CASE("Table 2 entries") {
  const Table2 t3 = emit_table2(make_config(3));
  REQUIRE(t3.rows.size() == 10);
  for (const auto& row : t3.rows)
    CHECK(row.verified);
  const auto& row7 = t3.rows[6];
  CHECK(row7.row == 7);
  CHECK(row7.center == std::vector<Count>{3});
  CHECK(row7.census == 63);

  const Table2 t5 = emit_table2(make_config(5));
  REQUIRE(t5.rows.size() == 10);
  for (const auto& row : t5.rows) {
    CHECK(row.verified);
    if (row.row == 10) {
      CHECK(row.center == std::vector<Count>{5});
      CHECK(row.census == 625);
    }
    if (row.row == 4) {
      CHECK(row.center == std::vector<Count>{5, 5});
      CHECK(row.census == 25);
    }
    CHECK(row.row != 8);
  }
  CHECK(render_table2(t5).find("3x3-J3-v-e1") != std::string::npos);
}

TEST_CASE("marked rows are pairwise non-isomorphic") {
  for (Int p : {3, 5}) {
    const Table2 t = emit_table2(make_config(p));
    for (const auto& a : t.rows)
      for (const auto& b : t.rows)
        if (a.row < b.row && !a.mark.empty() && a.mark == b.mark) {
          const ModulusProfile pa = a.tau.profile(), pb = b.tau.profile();
          CHECK_FALSE(isomorphic(build_group({pa, p, a.tau, a.v}), build_group({pb, p, b.tau, b.v})));
        }
  }
}

TEST_CASE("norm image lies in the fixed points") {
  for (Int p : {3, 5, 7})
    for (const auto& entry : tau_catalog(make_config(p))) {
      const auto fixed = fixed_points(entry.tau);
      for (const auto& x : image_subgroup(norm_matrix(entry.tau, p)).elements)
        CHECK(fixed.contains(x));
    }
}
