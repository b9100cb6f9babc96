#include <doctest.h>

#include "generators.hpp"
#include "helixlab/chern.hpp"
#include "helixlab/error.hpp"
#include "helixlab/mutation.hpp"

using namespace helixlab;

namespace {

GramForm p3() { return preset_p3().gram_form(); }
KVector e(std::size_t i) { return KVector::unit(4, i - 1); }
Collection ref() { return reference_basis(4); }

}  // namespace

TEST_CASE("mutate examples") {
  const GramForm g = p3();
  CHECK(mutate(g, ref(), Side::Left, 1) == Collection{{KVector{-4, 1, 0, 0}, e(1), e(3), e(4)}});
  CHECK(mutate(g, ref(), Side::Left, 3) ==
        Collection{{e(1), e(2), e(4) - Integer(4) * e(3), e(3)}});
  CHECK(mutate(g, ref(), Side::Right, 1) == Collection{{e(2), KVector{1, -4, 0, 0}, e(3), e(4)}});
  CHECK(mutate(g, mutate(g, ref(), Side::Left, 2), Side::Right, 2) == ref());
}

TEST_CASE("mutate errors") {
  const GramForm g = p3();
  try {
    mutate(g, ref(), Side::Left, 4);
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::BadPosition);
  }
  CHECK_THROWS_AS(mutate(g, ref(), Side::Left, 0), Error);
  try {
    mutate(g, Collection{{e(2), e(1), e(3), e(4)}}, Side::Left, 1);
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotSODBasis);
  }
}

TEST_CASE("braid words") {
  const GramForm g = p3();
  CHECK(apply_word(g, ref(), BraidWord{}) == ref());
  CHECK(apply_word(g, ref(), BraidWord::parse("L1 R1")) == ref());
  const Collection a = apply_word(g, ref(), BraidWord::parse("L1 L2 L1"));
  const Collection b = apply_word(g, ref(), BraidWord::parse("L2 L1 L2"));
  CHECK(a == b);
  CHECK(a[0] == KVector{6, -4, 1, 0});

  CHECK(BraidWord::parse("  L1\tR2  L3 ").to_string() == "L1 R2 L3");
  CHECK(BraidWord::parse("").empty());
  for (const char* bad : {"X1", "L", "L0", "L1a", "l1", "L-1", "R01"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BraidWord::parse(bad), Error);
  }
  CHECK_THROWS_AS(apply_word(g, ref(), BraidWord::parse("L1 R4")), Error);
}

TEST_CASE("property: word text round-trips") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = gen::word(rng, 7, 12);
    CHECK(BraidWord::parse(w.to_string()) == w);
  }
}

TEST_CASE("Serre operator") {
  SUBCASE("rank-2 toy form") {
    const GramForm g(IntMatrix(2, {1, 4, 0, 1}));
    const SerreOperator s = serre_operator(g);
    CHECK(s.kappa == IntMatrix(2, {15, 4, -4, -1}));
    const KVector e1 = KVector::unit(2, 0);
    CHECK(euler_pair(g, e1, s.apply(e1)) == -1);
  }
  SUBCASE("P3: twist by -K sends O to O(4)") {
    const SerreOperator s = serre_operator(p3());
    CHECK(s.kappa.determinant() == 1);
    const KVector o4(s.twist_by_minus_K() * e(1).coords());
    CHECK(o4 == KVector{-1, 4, -6, 4});
    CHECK(o4 == to_coordinates(preset_p3(), line_bundle(preset_p3(), 4)));
    CHECK(s.twist_by_K() * s.twist_by_minus_K() == IntMatrix::identity(4));
  }
  SUBCASE("twist matrix agrees with Chern twist on Q3") {
    const FanoPreset q3 = preset_q3();
    const SerreOperator s = serre_operator(q3.gram_form());
    for (std::size_t i = 0; i < 4; ++i) {
      const ChernCharacter x = q3.basis()[i];
      const KVector twisted(s.twist_by_K() * KVector::unit(4, i).coords());
      CHECK(twisted == to_coordinates(q3, canonical_twist(q3, x, TwistDirection::ByK)));
    }
  }
}

TEST_CASE("helix shift") {
  const GramForm g = p3();
  const Collection fwd = helix_shift(g, ref(), HelixDirection::Forward);
  CHECK(fwd == Collection{{e(2), e(3), e(4), KVector{-1, 4, -6, 4}}});
  CHECK(check_sod_basis(g, fwd).ok());
  CHECK(helix_shift(g, fwd, HelixDirection::Backward) == ref());

  const SerreOperator s = serre_operator(g);
  Collection c = ref();
  for (int i = 0; i < 4; ++i) c = helix_shift(g, c, HelixDirection::Forward);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c[i] == KVector(s.twist_by_minus_K() * e(i + 1).coords()));
  }
}

// Full property sweep (>= 1000 bases per preset) lives in the acceptance
// suite; a smaller sweep here catches regressions quickly.
TEST_CASE("property: braid relations, inverses, helix identity") {
  gen::Rng rng(17);
  for (const FanoPreset& v : {preset_p3(), preset_q3()}) {
    const GramForm g = v.gram_form();
    for (int trial = 0; trial < 150; ++trial) {
      const Collection c = gen::basis(rng, g, 8);
      REQUIRE(check_sod_basis(g, c).ok());
      for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
          const Collection iji = apply_word(g, c, BraidWord({{Side::Left, i}, {Side::Left, j}, {Side::Left, i}}));
          const Collection jij = apply_word(g, c, BraidWord({{Side::Left, j}, {Side::Left, i}, {Side::Left, j}}));
          if (i + 1 == j || j + 1 == i) CHECK(iji == jij);
          if (i + 1 < j || j + 1 < i) {
            CHECK(apply_word(g, c, BraidWord({{Side::Left, i}, {Side::Left, j}})) ==
                  apply_word(g, c, BraidWord({{Side::Left, j}, {Side::Left, i}})));
          }
        }
        const Collection l = mutate(g, c, Side::Left, i);
        CHECK(check_sod_basis(g, l).ok());
        CHECK(mutate(g, l, Side::Right, i) == c);
        CHECK(mutate(g, mutate(g, c, Side::Right, i), Side::Left, i) == c);
      }
      CHECK(canonicalize(apply_word(g, c, BraidWord::parse("R1 R2 R3"))) ==
            canonicalize(helix_shift(g, c, HelixDirection::Forward)));
    }
  }
}

TEST_CASE("property: Serre antisymmetry") {
  gen::Rng rng(23);
  for (const FanoPreset& v : {preset_p3(), preset_q3()}) {
    const GramForm g = v.gram_form();
    const SerreOperator s = serre_operator(g);
    for (int trial = 0; trial < 500; ++trial) {
      const KVector u = gen::small_vector(rng, 4, 20);
      const KVector w = gen::small_vector(rng, 4, 20);
      CHECK(euler_pair(g, u, s.apply(w)) == -euler_pair(g, w, u));
    }
  }
}
