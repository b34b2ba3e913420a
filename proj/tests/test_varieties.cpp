#include <doctest.h>

#include "support.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/io.hpp"
#include "tolfac/joinprod.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/varieties.hpp"

using namespace tolfac;
using namespace tolfac::test;

TEST_CASE("builtin catalog") {
  auto const s = builtin("Set", {2, 1});
  CHECK(s.signature == Signature({{"e2", 2}}));
  REQUIRE(s.identities.size() == 1);
  CHECK(s.identities[0].to_string() == Identity(Term::app("e2", {Term::var(0), Term::var(1)}), Term::var(0)).to_string());

  auto const r1 = builtin("Rot", {1});
  CHECK(r1.signature == rot_signature());
  CHECK(r1.identities.size() == lattice_identities().size() + 3);
  // Rot(1) members are lattices with g the identity
  auto const c3 = make_rotational(chain(3), {0, 1, 2}, 1);
  CHECK(member_of(r1, c3).member);

  CHECK(builtin("LatT").identities.size() == 8);
  CHECK(builtin("Lat").identities.size() == 6);
  CHECK(builtin("V", {2, 3}).name == "V(2,3)");
  CHECK(builtin("V", {2, 3}).join->arity() == 2);
  CHECK(builtin("SetJoin", {3}).join->arity() == 3);

  CHECK_THROWS_AS(builtin("Nope"), InvalidArgument);
  CHECK_THROWS_AS(builtin("Set", {2, 3}), InvalidArgument);
  CHECK_THROWS_AS(builtin("Rot", {}), InvalidArgument);
}

TEST_CASE("member_of") {
  CHECK(member_of(lat(), chain(3)).member);
  CHECK(member_of(set_projection(2, 1), band3()).member);
  auto const no = member_of(set_projection(2, 2), band3());
  CHECK_FALSE(no.member);
  REQUIRE(no.failing);
  CHECK(no.assignment == std::vector<Element>{0, 1});
  CHECK(member_of(lat(), quotient(chain(3), rel(3, {{0, 1}, {1, 2}}))).member);

  CHECK_THROWS_AS(member_of(lat(), band3()), InvalidArgument);

  // the join accepts products and rejects a non-decomposable e2
  auto const set2 = set_join(2);
  CHECK(member_of(set2, ProductStructure({band(3, 0), band(2, 1)}).product()).member);
  // e2(x, y) = y on {0,1} but x elsewhere: idempotent, not a rectangular band
  auto const odd = FiniteAlgebra::from_function(3, Signature({{"e2", 2}}), [](std::size_t, std::span<Element const> a) {
    return a[0] < 2 && a[1] < 2 ? a[1] : a[0];
  });
  CHECK_FALSE(member_of(set2, odd).member);
}

TEST_CASE("Set_n membership for n = 3") {
  auto const v = set_join(3);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(member_of(v, projection_algebra(2, 3, i)).member);
    CHECK(member_of(set_projection(3, i), projection_algebra(2, 3, i)).member);
  }
  ProductStructure const p({projection_algebra(2, 3, 1), projection_algebra(2, 3, 2), projection_algebra(2, 3, 3)});
  CHECK(member_of(v, p.product()).member);
  CHECK(essential_coordinates(p.product(), "e3") == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("LatT converters") {
  auto const c3 = chain(3);
  auto const t  = lat_to_latt(c3);
  CHECK(member_of(latt(), t).member);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      for (Element z = 0; z < 3; ++z) {
        CHECK(lookup(t, 0, {x, y, z}) == std::max(x, std::min(y, z)));
        CHECK(lookup(t, 1, {x, y, z}) == std::min(x, std::max(y, z)));
      }
    }
  }
  for (auto const& l : enumerate_lattices(5)) {
    CHECK(latt_to_lat(lat_to_latt(l)) == l);
    CHECK(all_tolerances(l).members == all_tolerances(lat_to_latt(l)).members);
  }
  CHECK_THROWS_AS(lat_to_latt(band3()), InvalidArgument);
  CHECK_THROWS_AS(latt_to_lat(c3), InvalidArgument);
}

TEST_CASE("make_rotational") {
  auto const b = make_rotational(lattice_from_order(*lattice_order(b4())), {0, 2, 1, 3}, 2);
  CHECK(member_of(rot(2), b).member);
  CHECK(b == b4_rotation());
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(member_of(rot(n), make_rotational(chain(4), {0, 1, 2, 3}, n)).member);
  }
  auto const c = make_rotational(chain(3), {0, 1, 2}, 3);
  auto const t = rel(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(t.is_transitive());
  CHECK(member_of(rot(3), quotient(c, t)).member);

  CHECK_THROWS_AS(make_rotational(chain(3), {2, 1, 0}, 2), InvalidArgument);   // not an automorphism
  CHECK_THROWS_AS(make_rotational(b4(), {0, 2, 1, 3}, 3), InvalidArgument);     // g^3 != id
}

TEST_CASE("rot corpus") {
  auto const r2 = rot_corpus(2, 4);
  // every lattice with the identity, plus B4 with its swap
  CHECK(r2.size() == enumerate_lattices(4).size() + 1);
  for (auto const& r : r2) {
    CHECK(member_of(rot(2), r).member);
  }
}

TEST_CASE("combined varieties") {
  auto const v   = combined(2, 2);
  auto const rl  = lift_rotational(b4_rotation(), 2);
  auto const sl  = lift_projection(band3());
  CHECK(member_of(rot_lift(2, 2), rl).member);
  CHECK(member_of(set_lift(2), sl).member);
  CHECK(member_of(v, rl).member);
  CHECK(member_of(v, sl).member);
  CHECK(member_of(v, ProductStructure({rl, sl}).product()).member);
  CHECK_FALSE(member_of(set_lift(2), rl).member);

  // s(x, s(y, x)) = x with s the band operation
  Identity const law(Term::app("e2", {Term::var(0), Term::app("e2", {Term::var(1), Term::var(0)})}), Term::var(0));
  CHECK(holds_identity(sl, law).holds);
}

TEST_CASE("probe Lat") {
  auto const r = probe_properties(lat(), enumerate_lattices(6), "lattices up to 6");
  CHECK(r.algebras == 25);
  CHECK(r.p1.verdict == Verdict::holds);
  CHECK(r.p2.verdict == Verdict::holds);
  CHECK(r.p3.verdict == Verdict::holds);
  CHECK(r.p4.verdict == Verdict::holds);
  REQUIRE(r.p4.tolerance);
  CHECK_FALSE(r.p4.tolerance->is_transitive());
}

TEST_CASE("probe Set2") {
  std::vector<FiniteAlgebra> sample;
  for (std::size_t s1 = 1; s1 <= 3; ++s1) {
    for (std::size_t s2 = 1; s2 <= 3; ++s2) {
      sample.push_back(ProductStructure({band(s1, 0), band(s2, 1)}).product());
    }
  }
  auto const r = probe_properties(set_join(2), sample, "products");
  CHECK(r.p1.verdict == Verdict::holds);
  CHECK(r.p2.verdict == Verdict::holds);
  CHECK(r.p3.verdict == Verdict::holds);
  CHECK(r.p4.verdict == Verdict::holds);
}

TEST_CASE("probe LatT") {
  auto const fx     = read_witness_fixture(std::string(TOLFAC_FIXTURE_DIR) + "/latt_witness.json");
  auto       sample = std::vector<FiniteAlgebra>{lat_to_latt(chain(3)), fx.algebra.algebra};
  auto const r      = probe_properties(latt(), sample, "C3 and the witness");
  CHECK(r.p1.verdict == Verdict::fails);
  CHECK(r.p2.verdict == Verdict::fails);
  CHECK(r.p3.verdict == Verdict::holds);
  CHECK(r.p4.verdict == Verdict::holds);
  REQUIRE(r.p1.algebra_index);
  CHECK(*r.p1.algebra_index == 1);

  CHECK_THROWS_AS(probe_properties(latt(), {chain(3)}, "wrong signature"), InvalidArgument);
}

TEST_CASE("probe without proper tolerances is inconclusive on P4") {
  auto const r = probe_properties(rot(2), {b4_rotation()}, "B4 with swap");
  CHECK(r.p1.verdict == Verdict::holds);
  CHECK(r.p4.verdict == Verdict::inconclusive);
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}
