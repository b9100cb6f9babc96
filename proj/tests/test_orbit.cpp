#include <doctest.h>

#include <algorithm>

#include "helixlab/chern.hpp"
#include "helixlab/error.hpp"
#include "helixlab/orbit.hpp"
#include "oracles.hpp"

using namespace helixlab;

namespace {

GramForm p3() { return preset_p3().gram_form(); }
GramForm q3() { return preset_q3().gram_form(); }
GramForm toy2() { return GramForm(IntMatrix(2, {1, 1, 0, 1})); }
KVector e(std::size_t i) { return KVector::unit(4, i - 1); }

std::vector<std::vector<std::int64_t>> as_int64(const GramForm& g) {
  std::vector<std::vector<std::int64_t>> out(g.rank(), std::vector<std::int64_t>(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) out[i][j] = g(i, j).get_si();
  return out;
}

SearchCaps caps(std::size_t depth, long height_cap = -1, std::size_t max_nodes = 1'000'000) {
  SearchCaps c;
  c.max_depth = depth;
  c.max_nodes = max_nodes;
  if (height_cap >= 0) c.height_cap = Integer(height_cap);
  return c;
}

}  // namespace

TEST_CASE("enumerate_exceptional examples") {
  const auto b1 = enumerate_exceptional(p3(), 1);
  CHECK(b1 == std::vector<KVector>{e(4), e(3), e(2), e(1)});
  CHECK(enumerate_exceptional(p3(), 0).empty());
  const auto b4 = enumerate_exceptional(p3(), 4);
  CHECK(std::find(b4.begin(), b4.end(), KVector{4, -1, 0, 0}) != b4.end());
}

TEST_CASE("enumerate_exceptional matches a 64-bit brute-force scan") {
  for (const GramForm& g : {p3(), q3(), toy2()}) {
    for (int bound = 0; bound <= 5; ++bound) {
      const auto got = enumerate_exceptional(g, bound);
      const auto want = oracle::brute_force_exceptional(as_int64(g), bound);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j) CHECK(got[i][j] == want[i][j]);
    }
  }
}

TEST_CASE("enumeration scan limit") {
  EnumOptions opts;
  opts.max_candidates = 1000;
  try {
    enumerate_exceptional(p3(), 3, opts);  // 7^4 = 2401
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::CapExceeded);
  }
  CHECK_NOTHROW(enumerate_exceptional(p3(), 2, opts));  // 5^4 = 625
}

TEST_CASE("enumerate_sod_bases examples") {
  CHECK(enumerate_sod_bases(p3(), 1) == std::vector<Collection>{reference_basis(4)});
  CHECK(enumerate_sod_bases(p3(), 0).empty());
  const auto b6 = enumerate_sod_bases(p3(), 6);
  const Collection l1{{KVector{4, -1, 0, 0}, e(1), e(3), e(4)}};
  CHECK(std::find(b6.begin(), b6.end(), l1) != b6.end());
  for (const auto& c : b6) {
    CHECK(check_sod_basis(p3(), c).ok());
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (const GramForm& g : {p3(), q3()}) {
    const auto ex = serial::enumerate_exceptional(g, 6);
    const auto bases = serial::enumerate_sod_bases(g, 6);
    for (int workers : {1, 2, 8}) {
      CHECK(enumerate_exceptional(g, 6, {workers}) == ex);
      CHECK(enumerate_sod_bases(g, 6, {workers}) == bases);
    }
  }
}

TEST_CASE("orbit_bfs examples") {
  const GramForm g = p3();
  const Collection start = reference_basis(4);

  const OrbitReport d0 = orbit_bfs(g, start, caps(0));
  CHECK(d0.size() == 1);
  CHECK(d0.contains(start));

  const OrbitReport d1 = orbit_bfs(g, start, caps(1));
  CHECK(d1.size() == 7);
  CHECK(d1.stats().truncated_by_depth);

  const OrbitReport d3 = orbit_bfs(g, start, caps(3));
  const Collection shifted = canonicalize(helix_shift(g, start, HelixDirection::Forward));
  REQUIRE(d3.contains(shifted));
  CHECK(d3.witness(shifted)->to_string() == "R1 R2 R3");
}

TEST_CASE("orbit_bfs on the rank-2 toy form") {
  const GramForm g = toy2();
  const OrbitReport r = orbit_bfs(g, reference_basis(2), caps(2));
  const KVector e1 = KVector::unit(2, 0), e2 = KVector::unit(2, 1);
  CHECK(r.contains(Collection{{KVector{1, -1}, e1}}));
  CHECK(r.contains(Collection{{e2, KVector{1, -1}}}));
}

TEST_CASE("orbit_bfs rejects a non-basis start") {
  try {
    orbit_bfs(p3(), Collection{{e(2), e(1), e(3), e(4)}}, caps(2));
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotSODBasis);
  }
  try {
    orbit_bfs(p3(), reference_basis(4), caps(2, -1, 0));
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::CapExceeded);
  }
}

TEST_CASE("orbit invariants: replay, closure, node checks") {
  for (const GramForm& g : {p3(), q3()}) {
    const OrbitReport r = orbit_bfs(g, reference_basis(4), caps(24, 16), {0, true});
    CHECK_FALSE(r.truncated());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& node = r.nodes()[i];
      CHECK(check_sod_basis(g, node.key).ok());
      const BraidWord w = r.witness(i);
      CHECK(w.length() == node.depth);
      CHECK(canonicalize(apply_word(g, reference_basis(4), w)) == node.key);
      if (node.boundary) continue;
      for (std::size_t pos = 1; pos <= 3; ++pos) {
        for (Side side : {Side::Left, Side::Right}) {
          CHECK(r.contains(canonicalize(mutate(g, node.key, side, pos))));
        }
      }
    }
  }
}

TEST_CASE("orbit determinism across worker counts and the serial reference") {
  for (const GramForm& g : {p3(), q3()}) {
    for (const SearchCaps& c : {caps(24, 32), caps(6), caps(24, 32, 300)}) {
      const OrbitReport ref = serial::orbit_bfs(g, reference_basis(4), c);
      for (int workers : {1, 2, 8}) {
        CAPTURE(workers);
        CHECK(orbit_bfs(g, reference_basis(4), c, {workers, false}) == ref);
      }
    }
  }
}

TEST_CASE("node cap truncates deterministically") {
  const OrbitReport r = orbit_bfs(p3(), reference_basis(4), caps(24, 32, 50));
  CHECK(r.size() == 50);
  CHECK(r.stats().truncated_by_nodes);
  CHECK(r.truncated());
}

TEST_CASE("property: enlarging caps never loses reached bases") {
  const GramForm g = q3();
  const auto bases = enumerate_sod_bases(g, 6);
  std::size_t previous = 0;
  for (const SearchCaps& c : {caps(4, 12), caps(8, 12), caps(8, 24), caps(24, 24), caps(24, 48)}) {
    const OrbitReport r = orbit_bfs(g, reference_basis(4), c);
    std::size_t reached = 0;
    for (const auto& b : bases) reached += r.contains(b);
    CHECK(reached >= previous);
    previous = reached;
  }
}

TEST_CASE("transitivity_report") {
  SUBCASE("P3 height 1") {
    const auto rep = transitivity_report(p3(), 1, caps(2));
    CHECK(rep.bases.size() == 1);
    CHECK(rep.reached.size() == 1);
    CHECK(rep.unreached.empty());
    CHECK(rep.verdict == TransitivityVerdict::Transitive);
    CHECK(*rep.caps.height_cap == 4);
  }
  SUBCASE("quadric height 4") {
    const auto rep = transitivity_report(q3(), 4, caps(24));
    CHECK(rep.unreached.empty());
    CHECK(rep.verdict == TransitivityVerdict::Transitive);
    for (const auto& [c, w] : rep.reached) {
      CHECK(canonicalize(apply_word(q3(), reference_basis(4), w)) == c);
    }
  }
  SUBCASE("depth too small is inconclusive") {
    const auto rep = transitivity_report(p3(), 8, caps(1));
    CHECK_FALSE(rep.unreached.empty());
    CHECK(rep.verdict == TransitivityVerdict::Inconclusive);
  }
}
