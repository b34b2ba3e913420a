#include <doctest.h>

#include "support.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/io.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/varieties.hpp"

using namespace tolfac;
using namespace tolfac::test;

namespace {

  std::string fixture(std::string const& name) {
    return std::string(TOLFAC_FIXTURE_DIR) + "/" + name;
  }

  bool same_block_images(FiniteAlgebra const& rot, BlockSet const& bs) {
    auto const& g = rot.table("g");
    for (auto const& b : bs.blocks) {
      Bitset img(rot.size());
      for (Element x : b.elements()) {
        img.set(g[x]);
      }
      if (!bs.index_of(img)) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("is_factorable on the 3-chain") {
  auto const v = is_factorable(chain(3), rel(3, {{0, 1}, {1, 2}}));
  REQUIRE(v.factorable());
  CHECK_FALSE(v.witness);
  CHECK(v.quotient->size() == 2);
  CHECK(find_isomorphism(*v.quotient, chain(2)));
  CHECK(v.block_index[1] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("is_factorable on the band") {
  auto const v = is_factorable(band3(), rel(3, {{0, 1}, {1, 2}}));
  REQUIRE(v.factorable());
  CHECK(*v.quotient == band(2, 0));
  CHECK(member_of(set_projection(2, 1), *v.quotient).member);
}

TEST_CASE("frozen LatT witness") {
  auto const fx = read_witness_fixture(fixture("latt_witness.json"));
  auto const a  = fx.algebra.algebra;
  CHECK(member_of(latt(), a).member);
  auto const v = is_factorable(a, fx.tolerance);
  CHECK_FALSE(v.factorable());
  REQUIRE(v.witness);
  CHECK(v.witness->symbol == "tjoin");
  CHECK(v.witness->tuple.size() == 3);
  CHECK(v.witness->containers.size() >= 2);
  CHECK(v.witness->to_string() == fx.witness.to_string());
  // the image recomputed from the table
  Bitset image(a.size());
  for (Element x : v.witness->tuple[0].elements()) {
    for (Element y : v.witness->tuple[1].elements()) {
      for (Element z : v.witness->tuple[2].elements()) {
        image.set(lookup(a, 0, {x, y, z}));
      }
    }
  }
  for (auto const& c : v.witness->containers) {
    CHECK(c.contains(image));
  }
  CHECK(v.witness->containers[0] != v.witness->containers[1]);

  try {
    quotient(a, fx.tolerance);
    FAIL("expected NotFactorable");
  } catch (NotFactorable const& e) {
    CHECK(e.witness.symbol == "tjoin");
  }

  auto const alg = is_tolerance_factorable_algebra(a);
  CHECK_FALSE(alg.factorable);
  CHECK(alg.failing_tolerance);
  // the alter ego in Lat has the same tolerance and factors by it
  CHECK(is_factorable(latt_to_lat(a), fx.tolerance).factorable());
}

TEST_CASE("quotient by the diagonal and the total relation") {
  for (auto const& a : {chain(3), band3(), b4_rotation()}) {
    auto const byd = quotient(a, BinaryRelation::diagonal(a.size()));
    CHECK(find_isomorphism(byd, a));
    CHECK(quotient(a, BinaryRelation::total(a.size())).size() == 1);
  }
  CHECK_THROWS_AS(quotient(chain(3), rel(3, {{0, 2}})), InvalidArgument);
}

TEST_CASE("covering_construction on the 3-chain") {
  auto const t = rel(3, {{0, 1}, {1, 2}});
  auto const c = covering_construction(chain(3), t);
  CHECK(c.cover.size() == 4);
  CHECK(c.embedding == std::vector<std::pair<Element, std::size_t>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  CHECK(find_isomorphism(c.cover, chain(4)));
  CHECK(equivalence_classes(c.theta).size() == 2);
  CHECK(is_congruence(c.cover, c.theta));
  CHECK(is_surjective(c.phi));
  CHECK(is_homomorphism(c.phi));
  CHECK(image_relation(c.phi, c.theta) == t);

  auto const d = covering_construction(chain(3), BinaryRelation::diagonal(3));
  CHECK(find_isomorphism(d.cover, chain(3)));
  CHECK(d.theta == BinaryRelation::diagonal(3));
  auto const n = covering_construction(chain(3), BinaryRelation::total(3));
  CHECK(n.cover.size() == 3);
  CHECK(n.theta == BinaryRelation::total(3));
}

TEST_CASE("covering_construction refuses non-factorable pairs") {
  auto const fx = read_witness_fixture(fixture("latt_witness.json"));
  CHECK_THROWS_AS(covering_construction(fx.algebra.algebra, fx.tolerance), NotFactorable);
}

TEST_CASE("lattice quotients, covers and congruence quotients") {
  for (auto const& l : enumerate_lattices(6)) {
    for (auto const& t : all_tolerances(l).members) {
      auto const v = is_factorable(l, t);
      REQUIRE(v.factorable());
      CHECK(v.quotient->size() == v.blocks.size());
      CHECK(member_of(lat(), *v.quotient).member);
      if (l.size() <= 5) {
        auto const c = covering_construction(l, t);
        CHECK(c.theta.is_transitive());
        CHECK(is_surjective(c.phi));
        CHECK(image_relation(c.phi, c.theta) == t);
        CHECK(member_of(lat(), c.cover).member);
      }
      if (t.is_transitive()) {
        CHECK(find_isomorphism(*v.quotient, congruence_quotient(l, t).algebra));
      }
    }
  }
}

TEST_CASE("quotient does not depend on block labelling") {
  // relabel B4 by an automorphism; quotients stay isomorphic
  auto const l = lattice_from_order(*lattice_order(b4()));
  for (auto const& aut : automorphisms(l)) {
    auto const moved = FiniteAlgebra::from_function(4, l.signature(), [&](std::size_t op, std::span<Element const> a) {
      std::vector<Element> back(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        back[i] = static_cast<Element>(std::find(aut.begin(), aut.end(), a[i]) - aut.begin());
      }
      return aut[lookup(l, op, back)];
    });
    for (auto const& t : all_tolerances(l).members) {
      BinaryRelation moved_t(4);
      for (auto const& [x, y] : t.pairs()) {
        moved_t.set(aut[x], aut[y]);
      }
      CHECK(find_isomorphism(quotient(l, t), quotient(moved, moved_t)));
    }
  }
}

TEST_CASE("rotational quotients keep g acting on blocks") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (auto const& r : rot_corpus(n, 5)) {
      for (auto const& t : all_tolerances(r).members) {
        auto const v = is_factorable(r, t);
        REQUIRE(v.factorable());
        CHECK(member_of(rot(n), *v.quotient).member);
        CHECK(same_block_images(r, v.blocks));
      }
    }
  }
}

TEST_CASE("find_nonfactorable_witness") {
  CHECK_FALSE(find_nonfactorable_witness(stream_of({})));
  CHECK_FALSE(find_nonfactorable_witness(lattice_stream(7, 8)));
  CHECK_FALSE(find_nonfactorable_witness(lattice_stream(5, 8, lat_to_latt)));

  auto const hit = find_nonfactorable_witness(lattice_stream(8, 8, lat_to_latt), {}, "tjoin");
  REQUIRE(hit);
  auto const fx = read_witness_fixture(fixture("latt_witness.json"));
  CHECK(hit->algebra == fx.algebra.algebra);
  CHECK(hit->tolerance == fx.tolerance);
  CHECK(hit->witness.to_string() == fx.witness.to_string());

  CHECK_THROWS_AS(find_nonfactorable_witness(lattice_stream(3, 8), {}, "nope"), InvalidArgument);
}

TEST_CASE("algebra-level factorability") {
  CHECK(is_tolerance_factorable_algebra(band3()).factorable);
  for (auto const& l : enumerate_lattices(6)) {
    CHECK(is_tolerance_factorable_algebra(l).factorable);
  }
}
