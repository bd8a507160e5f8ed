#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pfour/residue_algebra.hpp"

using namespace pfour;

namespace {

ModulusProfile two(Int p) { return ModulusProfile(p, Shape::p2xp); }
ModulusProfile three(Int p) { return ModulusProfile(p, Shape::pxpxp); }

oracle::Mat as_rows(const MixedModulusMatrix& m) { return m.rows(); }

oracle::Vec moduli_of(const ModulusProfile& profile) {
  return oracle::Vec(profile.moduli().begin(), profile.moduli().end());
}

std::vector<MixedModulusMatrix> sample_automorphisms(const ModulusProfile& profile, int count,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MixedModulusMatrix> out;
  const std::size_t d = profile.dim();
  while (static_cast<int>(out.size()) < count) {
    MixedModulusMatrix::Rows rows(d, std::vector<Int>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rows[r][c] = std::uniform_int_distribution<Int>(0, profile.modulus(r) - 1)(rng);
    if (profile.shape() == Shape::p2xp)
      rows[0][1] = profile.p() * (rows[0][1] % profile.p());
    MixedModulusMatrix m(profile, rows);
    if (m.is_automorphism())
      out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("profiles") {
  CHECK(two(3).moduli()[0] == 9);
  CHECK(two(3).moduli()[1] == 3);
  CHECK(two(3).order() == 27);
  CHECK(three(5).order() == 125);
  CHECK(three(5).dim() == 3);
  CHECK_THROWS_AS(ModulusProfile(9, Shape::p2xp), std::invalid_argument);
  CHECK_THROWS_AS(ModulusProfile(101, Shape::p2xp), std::invalid_argument);
  CHECK_NOTHROW(ModulusProfile(2, Shape::p2xp));
  CHECK(parse_shape("pxpxp") == Shape::pxpxp);
  CHECK_THROWS(parse_shape("p3"));
}

TEST_CASE("abelian elements are stored reduced") {
  const AbelianElement x(two(3), {10, -1});
  CHECK(x[0] == 1);
  CHECK(x[1] == 2);
  CHECK(x.to_string() == "(1,2)");
  CHECK(x.order() == 9);
  CHECK(AbelianElement(two(3), {3, 0}).order() == 3);
  CHECK(AbelianElement::zero(two(3)).order() == 1);
  CHECK((x + AbelianElement(two(3), {8, 1})).is_zero());
  CHECK(-x == AbelianElement(two(3), {8, 1}));
  CHECK(x.scaled(3) == AbelianElement(two(3), {3, 0}));
  for (Int i = 0; i < 27; ++i)
    CHECK(AbelianElement::from_index(two(3), i).index() == i);
  CHECK(AbelianElement::from_index(two(3), 4) == AbelianElement(two(3), {1, 1}));
  CHECK(all_elements(three(3)).size() == 27);
}

TEST_CASE("mat_apply") {
  const auto p3 = two(3);
  CHECK(mat_apply(MixedModulusMatrix::identity(p3), AbelianElement(p3, {5, 2})) ==
        AbelianElement(p3, {5, 2}));
  CHECK(mat_apply(MixedModulusMatrix(p3, {{1, 3}, {0, 1}}), AbelianElement(p3, {0, 1})) ==
        AbelianElement(p3, {3, 1}));
  CHECK(mat_apply(MixedModulusMatrix(p3, {{1, 0}, {1, 1}}), AbelianElement(p3, {1, 0})) ==
        AbelianElement(p3, {1, 1}));
  CHECK_THROWS_AS(mat_apply(MixedModulusMatrix::identity(p3), AbelianElement::zero(two(5))),
                  std::invalid_argument);
}

TEST_CASE("the (1,2) entry must be divisible by p") {
  CHECK_THROWS_AS(MixedModulusMatrix(two(3), {{1, 1}, {0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(MixedModulusMatrix(two(3), {{1, 6}, {0, 1}}));
  CHECK_NOTHROW(MixedModulusMatrix(three(3), {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(MixedModulusMatrix(two(3), {{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_FALSE(MixedModulusMatrix(two(3), {{3, 0}, {0, 1}}).is_automorphism());
  CHECK(MixedModulusMatrix(two(3), {{1, 3}, {1, 1}}).is_automorphism());
}

TEST_CASE("mat_mul") {
  const auto p3 = two(3);
  const MixedModulusMatrix r1(p3, {{1, 3}, {0, 1}});
  CHECK(mat_mul(r1, r1) == MixedModulusMatrix(p3, {{1, 6}, {0, 1}}));
  const MixedModulusMatrix m5(two(5), {{1, 5}, {1, 1}});
  CHECK(mat_mul(m5, m5) == MixedModulusMatrix(two(5), {{6, 10}, {2, 1}}));
  CHECK(mat_mul(MixedModulusMatrix::identity(p3), r1) == r1);
}

TEST_CASE("composition matches application") {
  for (const auto& profile : {two(3), three(3)}) {
    const auto mats = sample_automorphisms(profile, 12, 1);
    for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
      const auto& a = mats[i];
      const auto& b = mats[i + 1];
      const auto ab = mat_mul(a, b);
      CHECK(as_rows(ab) == oracle::mul(as_rows(a), as_rows(b), moduli_of(profile)));
      for (const auto& v : all_elements(profile))
        CHECK(mat_apply(ab, v) == mat_apply(a, mat_apply(b, v)));
    }
  }
  std::mt19937_64 rng(7);
  const auto profile = two(5);
  const auto mats = sample_automorphisms(profile, 10, 2);
  const auto elems = all_elements(profile);
  for (std::size_t i = 0; i + 1 < mats.size(); ++i)
    for (int k = 0; k < 20; ++k) {
      const auto& v = elems[rng() % elems.size()];
      CHECK(mat_apply(mat_mul(mats[i], mats[i + 1]), v) ==
            mat_apply(mats[i], mat_apply(mats[i + 1], v)));
    }
}

TEST_CASE("mat_pow and mat_order") {
  CHECK(mat_pow(MixedModulusMatrix(two(5), {{6, 0}, {0, 1}}), 3) ==
        MixedModulusMatrix(two(5), {{16, 0}, {0, 1}}));
  const MixedModulusMatrix m(two(3), {{1, 3}, {1, 1}});
  CHECK(mat_pow(m, 0).is_identity());
  CHECK(mat_pow(m, 3).is_identity());
  CHECK(mat_order(MixedModulusMatrix::identity(two(3))) == 1);
  CHECK(mat_order(MixedModulusMatrix(two(3), {{4, 0}, {0, 1}})) == 3);
  CHECK(mat_order(MixedModulusMatrix(three(5), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})) == 5);
  CHECK_THROWS(mat_order(MixedModulusMatrix(two(3), {{3, 0}, {0, 1}})));
  for (const auto& a : sample_automorphisms(two(3), 10, 3)) {
    CHECK(mat_pow(a, mat_order(a)).is_identity());
    CHECK(mat_mul(a, mat_pow(a, -1)).is_identity());
    CHECK(mat_mul(mat_inverse(a), a).is_identity());
    for (Int k = 0; k < 6; ++k)
      CHECK(as_rows(mat_pow(a, k)) == oracle::power(as_rows(a), k, {9, 3}));
  }
}

TEST_CASE("power closed forms") {
  for (Int p : {3, 5, 7}) {
    const auto profile = two(p);
    for (Int s = 0; s < p; ++s)
      CHECK(mat_pow(MixedModulusMatrix(profile, {{1 + p, 0}, {0, 1}}), s) ==
            MixedModulusMatrix(profile, {{1 + s * p, 0}, {0, 1}}));
    for (Int r = 0; r < p; ++r)
      for (Int q = 0; q < p; ++q) {
        const MixedModulusMatrix m(profile, {{1, r * p}, {1, 1}});
        CHECK(mat_pow(m, q) ==
              MixedModulusMatrix(profile, {{1 + q * (q - 1) / 2 * r * p, q * r * p}, {q, 1}}));
      }
  }
}

TEST_CASE("fixed points") {
  const auto p3 = two(3);
  const auto f1 = fixed_points(MixedModulusMatrix(p3, {{1, 3}, {0, 1}}));
  CHECK(f1.order() == 9);
  CHECK(f1.generators == std::vector<AbelianElement>{AbelianElement(p3, {1, 0})});
  const auto f2 = fixed_points(MixedModulusMatrix(p3, {{4, 0}, {0, 1}}));
  CHECK(f2.generators ==
        std::vector<AbelianElement>{AbelianElement(p3, {3, 0}), AbelianElement(p3, {0, 1})});
  CHECK(fixed_points(MixedModulusMatrix::identity(three(3))).order() == 27);
  for (const auto& m : sample_automorphisms(three(3), 8, 4)) {
    const auto f = fixed_points(m);
    for (const auto& a : f.elements) {
      CHECK(mat_apply(m, a) == a);
      CHECK(f.contains(-a));
      for (const auto& b : f.elements)
        CHECK(f.contains(a + b));
    }
  }
}

TEST_CASE("norm matrix and image") {
  const auto p3 = two(3);
  const auto n1 = norm_matrix(MixedModulusMatrix(p3, {{1, 3}, {0, 1}}), 3);
  CHECK(n1 == MixedModulusMatrix(p3, {{3, 0}, {0, 0}}));
  const auto im1 = image_subgroup(n1);
  CHECK(im1.generators == std::vector<AbelianElement>{AbelianElement(p3, {3, 0})});
  CHECK(im1.order() == 3);

  const MixedModulusMatrix j3(three(3), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const auto n3 = norm_matrix(j3, 3);
  CHECK(n3 == MixedModulusMatrix(three(3), {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(image_subgroup(n3).generators ==
        std::vector<AbelianElement>{AbelianElement(three(3), {1, 0, 0})});
  const MixedModulusMatrix j5(three(5), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(norm_matrix(j5, 5) == MixedModulusMatrix::zero(three(5)));
  CHECK(image_subgroup(MixedModulusMatrix::zero(three(5))).order() == 1);
  CHECK(image_subgroup(MixedModulusMatrix::zero(three(5))).generators.empty());

  // Against the sum of powers computed independently.
  for (const auto& m : sample_automorphisms(two(3), 6, 5)) {
    const Int n = mat_order(m);
    oracle::Mat sum(2, oracle::Vec(2, 0));
    for (Int k = 0; k < n; ++k) {
      const auto pk = oracle::power(as_rows(m), k, {9, 3});
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          sum[r][c] += pk[r][c];
    }
    for (const auto& x : all_elements(two(3))) {
      const auto got = mat_apply(norm_matrix(m, n), x);
      CHECK(oracle::Vec(got.coords().begin(), got.coords().end()) ==
            oracle::apply(sum, oracle::Vec(x.coords().begin(), x.coords().end()), {9, 3}));
    }
  }
}

TEST_CASE("invariant factors of subgroups of N") {
  const auto p3 = two(3);
  CHECK(invariant_factors(span_of(p3, all_elements(p3))) == std::vector<Int>{3, 9});
  const AbelianElement seeds[] = {AbelianElement(p3, {3, 0}), AbelianElement(p3, {0, 1})};
  CHECK(invariant_factors(span_of(p3, seeds)) == std::vector<Int>{3, 3});
  CHECK(invariant_factors(span_of(p3, std::span<const AbelianElement>())).empty());
}
