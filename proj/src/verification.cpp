#include "pfour/verification.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pfour {

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

MixedModulusMatrix random_automorphism(const ModulusProfile& profile, std::mt19937_64& rng) {
  const std::size_t d = profile.dim();
  for (;;) {
    MixedModulusMatrix::Rows rows(d, std::vector<Int>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        std::uniform_int_distribution<Int> dist(0, profile.modulus(r) - 1);
        rows[r][c] = dist(rng);
      }
    if (profile.shape() == Shape::p2xp)
      rows[0][1] = profile.p() * (rows[0][1] % profile.p());
    MixedModulusMatrix m(profile, rows);
    if (m.is_automorphism())
      return m;
  }
}

CheckOutcome check_power_norm(const CandidateType& c) {
  CheckOutcome out{"power-norm", true, 0, ""};
  const CyclicExtension ext(c.ext);
  for (const auto& x : all_elements(c.ext.profile)) {
    const ExtElement xa{x, c.ext.n > 1 ? 1 : 0};
    ExtElement acc = ext.identity();
    for (Int k = 0; k < c.ext.n; ++k)
      acc = ext.multiply(acc, xa);
    const ExtElement expected{ext.norm(x) + c.ext.v, 0};
    ++out.cases;
    if (!(acc == expected)) {
      out.passed = false;
      out.detail = c.table_row_label + " x=" + x.to_string() + ": got " + render_label(acc) +
                   ", expected " + render_label(expected);
      break;
    }
  }
  return out;
}

namespace {

class Suite {
 public:
  explicit Suite(VerificationReport& report) : report_(report) {}

  // Runs @p body over @p items; body returns an empty string on success or the failing datum.
  template <typename Items, typename Body>
  void run(const std::string& name, const Items& items, Body body) {
    CheckOutcome out{name, true, 0, ""};
    for (const auto& item : items) {
      ++out.cases;
      std::string failure;
      try {
        failure = body(item);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty()) {
        out.passed = false;
        out.detail = failure;
        break;
      }
    }
    report_.checks.push_back(std::move(out));
  }

 private:
  VerificationReport& report_;
};

std::vector<FpMatrix> all_matrices(Int p, std::size_t n) {
  std::vector<FpMatrix> out;
  const std::size_t cells = n * n;
  Int total = 1;
  for (std::size_t i = 0; i < cells; ++i)
    total *= p;
  for (Int code = 0; code < total; ++code) {
    FpMatrix m(p, n);
    Int rest = code;
    for (std::size_t i = 0; i < cells; ++i, rest /= p)
      m.set(i / n, i % n, rest % p);
    out.push_back(std::move(m));
  }
  return out;
}

bool has_order_dividing_p(const FpMatrix& m) {
  return fp_rank(m) == m.dim() && fp_pow(m, m.p()) == FpMatrix::identity(m.p(), m.dim());
}

}  // namespace

VerificationReport run_verification(Int p, std::uint64_t seed) {
  if (p != 3 && p != 5)
    throw std::invalid_argument("verify supports p = 3 and p = 5");
  const ClassifyConfig cfg = make_config(p);
  VerificationReport report{p, seed, {}};
  Suite suite(report);
  std::mt19937_64 rng(seed);

  const auto candidates = enumerate_candidates(cfg);
  std::vector<FiniteGroup> groups;
  for (const auto& c : candidates)
    groups.push_back(build_group(c.ext));
  std::vector<std::size_t> ids(candidates.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = i;

  suite.run("group-axioms", ids, [&](std::size_t i) -> std::string {
    const AxiomReport r = p == 3 ? verify_group_axioms(groups[i])
                                 : verify_group_axioms_sampled(groups[i], 100000, rng());
    if (r)
      return "";
    std::string w;
    for (ElementIndex e : r.witness)
      w += " " + groups[i].label(e);
    return candidates[i].table_row_label + ": " + r.failure + " fails at" + w;
  });

  suite.run("power-norm", ids, [&](std::size_t i) {
    const CheckOutcome c = check_power_norm(candidates[i]);
    return c.passed ? std::string() : c.detail;
  });

  suite.run("census-closed-form", ids, [&](std::size_t i) -> std::string {
    const Count closed = census_closed_form(candidates[i].ext);
    const Count brute = count_power_trivial(groups[i], static_cast<Count>(p));
    if (closed == brute)
      return "";
    return candidates[i].table_row_label + ": closed form " + std::to_string(closed) +
           ", brute force " + std::to_string(brute);
  });

  suite.run("coset-census", ids, [&](std::size_t i) -> std::string {
    const auto n_order = static_cast<std::size_t>(candidates[i].ext.profile.order());
    const auto orders = element_orders(groups[i]);
    std::vector<Count> per_coset(static_cast<std::size_t>(p), 0);
    for (std::size_t e = 0; e < groups[i].order(); ++e)
      if (orders[e] <= static_cast<Count>(p))
        ++per_coset[e / n_order];
    for (std::size_t k = 2; k < per_coset.size(); ++k)
      if (per_coset[k] != per_coset[1])
        return candidates[i].table_row_label + ": coset a^" + std::to_string(k) + " has " +
               std::to_string(per_coset[k]) + ", coset a has " + std::to_string(per_coset[1]);
    return "";
  });

  suite.run("center-is-fixed-points", ids, [&](std::size_t i) -> std::string {
    std::vector<Count> expected;
    for (Int d : invariant_factors(fixed_points(candidates[i].ext.tau)))
      expected.push_back(static_cast<Count>(d));
    if (abelian_invariants(groups[i], center(groups[i])) == expected)
      return "";
    return candidates[i].table_row_label + ": center differs from N^tau";
  });

  suite.run("prop-abelian-subgroup", ids, [&](std::size_t i) {
    return verify_prop_abelian_subgroup(groups[i]) ? std::string() : candidates[i].table_row_label;
  });
  suite.run("prop-no-cyclic", ids, [&](std::size_t i) {
    return verify_prop_no_cyclic(groups[i]) ? std::string() : candidates[i].table_row_label;
  });

  using Transform = std::function<ExtensionType(const ExtensionType&, std::string&)>;
  const std::vector<std::pair<std::string, Transform>> transforms = {
      {"shift-generator",
       [&](const ExtensionType& t, std::string& param) {
         const auto& elems = all_elements(t.profile);
         const AbelianElement x =
             elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
         param = "x=" + x.to_string();
         return shift_generator(t, x);
       }},
      {"power-substitute",
       [&](const ExtensionType& t, std::string& param) {
         const Int i = std::uniform_int_distribution<Int>(1, t.n - 1)(rng);
         param = "i=" + std::to_string(i);
         return power_substitute(t, i);
       }},
      {"v-power",
       [&](const ExtensionType& t, std::string& param) {
         Int i = 0;
         while (gcd(i, t.profile.order()) != 1)
           i = std::uniform_int_distribution<Int>(1, t.profile.order() - 1)(rng);
         param = "i=" + std::to_string(i);
         return v_power(t, i);
       }},
      {"conjugate-type",
       [&](const ExtensionType& t, std::string& param) {
         const MixedModulusMatrix phi = random_automorphism(t.profile, rng);
         param = "phi=" + phi.to_string();
         return conjugate_type(t, phi);
       }},
  };
  for (const auto& [name, transform] : transforms)
    suite.run(name, ids, [&](std::size_t i) -> std::string {
      std::string param;
      const ExtensionType moved = transform(candidates[i].ext, param);
      if (isomorphic(groups[i], build_group(moved)))
        return "";
      return candidates[i].table_row_label + " " + param + ": groups not isomorphic";
    });

  {
    const ModulusProfile two(p, Shape::p2xp);
    const auto catalog = tau_catalog(cfg);
    auto type_of = [&](std::size_t k, std::initializer_list<Int> v) {
      return ExtensionType{two, p, catalog[k].tau, AbelianElement(two, v)};
    };
    struct LemmaCase {
      std::string name;
      ExtensionType a, b;
      bool isomorphic;
    };
    std::vector<LemmaCase> cases = {
        {"(r2,(0,1)) ~ (r3,(0,1))", type_of(1, {0, 1}), type_of(2, {0, 1}), true},
        {"(r2,0) !~ (r3,0)", type_of(1, {0, 0}), type_of(2, {0, 0}), false},
    };
    if (p > 3)
      cases.push_back({"(r4,0) !~ (r5,0)", type_of(3, {0, 0}), type_of(4, {0, 0}), false});
    suite.run("lemma-pairs", cases, [&](const LemmaCase& c) -> std::string {
      const bool iso = isomorphic(build_group(c.a), build_group(c.b)).isomorphic;
      return iso == c.isomorphic ? std::string() : c.name + " failed";
    });
  }

  {
    // Every order-p automorphism of C_{p^2} x C_p reduces to a catalog matrix.
    const ModulusProfile two(p, Shape::p2xp);
    std::vector<MixedModulusMatrix> order_p;
    for (Int a = 0; a < p * p; ++a)
      for (Int b = 0; b < p; ++b)
        for (Int c = 0; c < p; ++c)
          for (Int d = 0; d < p; ++d) {
            MixedModulusMatrix m(two, {{a, b * p}, {c, d}});
            if (m.is_automorphism() && mat_order(m) == p)
              order_p.push_back(m);
          }
    const auto catalog = tau_candidates(cfg, two);
    suite.run("mixed-reduction", order_p, [&](const MixedModulusMatrix& m) -> std::string {
      const MixedReduction r = reduce_mixed_order_p(m, cfg.epsilon);
      const bool in_catalog = std::find(catalog.begin(), catalog.end(), r.target) != catalog.end();
      const auto lhs = mat_mul(mat_mul(r.conjugator, mat_pow(m, r.power)), mat_inverse(r.conjugator));
      return in_catalog && lhs == r.target ? std::string() : m.to_string();
    });
  }

  {
    std::vector<FpMatrix> unipotent;
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      if (p == 3 || n == 2) {
        for (auto& m : all_matrices(p, n))
          if (has_order_dividing_p(m))
            unipotent.push_back(std::move(m));
      } else {
        // Random conjugates of the three-dimensional Jordan types.
        const std::vector<FpMatrix> forms = {
            FpMatrix(p, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
            FpMatrix(p, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})};
        std::uniform_int_distribution<Int> dist(0, p - 1);
        for (int k = 0; k < 2000; ++k) {
          FpMatrix g(p, 3);
          do {
            for (std::size_t r = 0; r < 3; ++r)
              for (std::size_t c = 0; c < 3; ++c)
                g.set(r, c, dist(rng));
          } while (fp_rank(g) != 3);
          unipotent.push_back(fp_mul(fp_mul(g, forms[k % 2]), fp_inverse(g)));
        }
      }
    }
    suite.run("jordan-form", unipotent, [&](const FpMatrix& a) -> std::string {
      const JordanForm j = jordan_reduce(a);
      const bool ok = fp_mul(fp_mul(j.conjugator, a), fp_inverse(j.conjugator)) == j.canonical;
      return ok ? std::string() : a.to_string();
    });
  }
  return report;
}

}  // namespace pfour
