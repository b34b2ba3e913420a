#include <doctest.h>

#include "support.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/joinprod.hpp"
#include "tolfac/varieties.hpp"

using namespace tolfac;
using namespace tolfac::test;

namespace {

  ProductStructure band_product() {
    return ProductStructure({band3(), band(2, 1)});
  }

  // Set2 products with factor sizes up to 3, both factor orders.
  std::vector<ProductStructure> set2_products() {
    std::vector<ProductStructure> out;
    for (std::size_t s1 = 1; s1 <= 3; ++s1) {
      for (std::size_t s2 = 1; s2 <= 3; ++s2) {
        out.emplace_back(std::vector<FiniteAlgebra>{band(s1, 0), band(s2, 1)});
        out.emplace_back(std::vector<FiniteAlgebra>{band(s2, 1), band(s1, 0)});
      }
    }
    return out;
  }

  Bitset all_of(std::size_t n) {
    Bitset b(n);
    b.set_all();
    return b;
  }

}  // namespace

TEST_CASE("ProductStructure encoding") {
  auto const p = band_product();
  CHECK(p.product().size() == 6);
  CHECK(p.radices() == std::vector<std::size_t>{3, 2});
  for (Element x = 0; x < 6; ++x) {
    auto const c = p.decode(x);
    CHECK(c == std::vector<Element>{x / 2, x % 2});
    CHECK(p.encode(c) == x);
  }
  CHECK_THROWS_AS(ProductStructure({}), InvalidArgument);
}

TEST_CASE("decompose_tolerance on the two-element band square") {
  ProductStructure const p({band(2, 0), band(2, 1)});
  auto const             ts = all_tolerances(p.product()).members;
  CHECK(ts.size() == 4);
  std::set<std::pair<bool, bool>> seen;
  for (auto const& t : ts) {
    auto const d = decompose_tolerance(p, t);
    CHECK(d.exact);
    REQUIRE(d.parts.size() == 2);
    for (auto const& part : d.parts) {
      CHECK((part == BinaryRelation::diagonal(2) || part == BinaryRelation::total(2)));
    }
    seen.emplace(d.parts[0] == BinaryRelation::total(2), d.parts[1] == BinaryRelation::total(2));
  }
  CHECK(seen.size() == 4);

  auto const full = decompose_tolerance(p, BinaryRelation::total(4));
  CHECK(full.exact);
  CHECK(full.parts[0] == BinaryRelation::total(2));
  auto const diag = decompose_tolerance(p, BinaryRelation::diagonal(4));
  CHECK(diag.exact);
  CHECK(diag.parts[1] == BinaryRelation::diagonal(2));
  CHECK_THROWS_AS(decompose_tolerance(p, BinaryRelation::total(3)), InvalidArgument);
}

TEST_CASE("decompose_blocks") {
  ProductStructure const p({band(2, 0), band(2, 1)});
  BinaryRelation const   dn[] = {BinaryRelation::diagonal(2), BinaryRelation::total(2)};
  auto const             r    = decompose_blocks(p, product_relation(dn));
  CHECK(r.passed());
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0].elements() == std::vector<Element>{0, 1});
  CHECK(r.blocks[1].elements() == std::vector<Element>{2, 3});

  auto const whole = decompose_blocks(p, BinaryRelation::total(4));
  CHECK(whole.passed());
  CHECK(whole.blocks.size() == 1);

  auto const           q    = band_product();
  BinaryRelation const tn[] = {rel(3, {{0, 1}, {1, 2}}), BinaryRelation::total(2)};
  auto const           b    = decompose_blocks(q, product_relation(tn));
  CHECK(b.passed());
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.blocks[0].size() == 4);
  CHECK(b.blocks[1].size() == 4);
}

TEST_CASE("decompose_blocks needs an exact decomposition") {
  ProductStructure const c({chain(2), chain(2)});
  for (auto const& t : all_tolerances(c.product()).members) {
    if (!decompose_tolerance(c, t).exact) {
      CHECK_THROWS_AS(decompose_blocks(c, t), InvalidArgument);
    }
  }
}

TEST_CASE("decompose_subalgebra") {
  auto const p     = band_product();
  auto const whole = decompose_subalgebra(p, all_of(6));
  CHECK(whole.is_product);
  CHECK(whole.parts[0] == all_of(3));
  CHECK(whole.parts[1] == all_of(2));

  // one generator (2, 1) = element 5
  Bitset seed(6);
  seed.set(5);
  auto const s = subuniverse_generate(p.product(), seed);
  CHECK(s == seed);
  auto const one = decompose_subalgebra(p, s);
  CHECK(one.is_product);
  CHECK(one.parts[0].to_vector() == std::vector<std::size_t>{2});
  CHECK(one.parts[1].to_vector() == std::vector<std::size_t>{1});

  ProductStructure const c({chain(2), chain(2)});
  Bitset                 diag(4);
  diag.set(0);
  diag.set(3);
  auto const d = decompose_subalgebra(c, diag);
  CHECK_FALSE(d.is_product);
  REQUIRE(d.missing);
  CHECK(*d.missing == std::vector<Element>{0, 1});

  Bitset open(4);
  open.set(1);
  open.set(2);
  CHECK_THROWS_AS(decompose_subalgebra(c, open), InvalidArgument);
}

TEST_CASE("every subuniverse of a Set2 product is a product") {
  for (auto const& p : set2_products()) {
    std::size_t const n = p.product().size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Bitset s(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) {
          s.set(i);
        }
      }
      if (is_subuniverse(p.product(), s)) {
        CHECK(decompose_subalgebra(p, s).is_product);
      }
    }
  }
}

TEST_CASE("decompose_algebra") {
  auto const spec = *set_join(2).join;
  auto const p    = band_product();
  auto const d    = decompose_algebra(p.product(), spec);
  REQUIRE(d.member);
  CHECK(d.failed_check.empty());
  CHECK(d.etas[0] == kernel(p.projections()[0]));
  CHECK(d.etas[1] == kernel(p.projections()[1]));
  CHECK(find_isomorphism(d.quotients[0], band3()));
  CHECK(find_isomorphism(d.quotients[1], band(2, 1)));
  REQUIRE(d.iso);
  CHECK(is_bijective(*d.iso));
  CHECK(is_homomorphism(*d.iso));

  auto const s = decompose_algebra(band3(), spec);
  REQUIRE(s.member);
  CHECK(s.etas[0] == BinaryRelation::diagonal(3));
  CHECK(s.etas[1] == BinaryRelation::total(3));
  CHECK(s.quotients[1].size() == 1);

  auto const one = decompose_algebra(band(1, 0), spec);
  CHECK(one.member);
  CHECK(one.quotients.size() == 2);

  // a lattice is not in the join of the projection varieties
  CHECK_THROWS_AS(decompose_algebra(chain(2), spec), InvalidArgument);
}

TEST_CASE("eta equals the projection kernel on every Set2 product") {
  auto const spec = *set_join(2).join;
  for (auto const& p : set2_products()) {
    auto const d = decompose_algebra(p.product(), spec);
    REQUIRE(d.member);
    if (p.factors()[0].size() == 1 || p.factors()[1].size() == 1) {
      continue;
    }
    // factor order may be swapped; etas follow the JoinSpec slot order
    std::size_t const first = p.factors()[0].table(0)[1] == 0 ? 0 : 1;
    CHECK(d.etas[first] == kernel(p.projections()[0]));
    CHECK(d.etas[1 - first] == kernel(p.projections()[1]));
  }
}

TEST_CASE("verify_independence") {
  auto const set2 = *set_join(2).join;
  auto const ok   = verify_independence(set2, {{0, band(2, 0)}, {1, band(2, 1)}});
  CHECK(ok.passed());
  CHECK(ok.checked == 2);

  auto const v = *combined(2, 2).join;
  auto const c2 = make_rotational(chain(2), {0, 1}, 2);
  CHECK(verify_independence(v, {{0, lift_rotational(c2, 2)}, {1, lift_projection(band(2, 0))}}).passed());

  auto const bad = verify_independence(set2, {{1, band(2, 0)}});
  CHECK_FALSE(bad.passed());
  // both the subvariety laws and d's projection law fail
  for (auto const& f : bad.failures) {
    CHECK(f.member == 0);
    CHECK_FALSE(f.problem.empty());
  }
}

TEST_CASE("JoinSpec validation") {
  auto const sig = Signature({{"e2", 2}});
  auto const law = [](std::size_t i) {
    return std::vector<Identity>{Identity(Term::app("e2", {Term::var(0), Term::var(1)}), Term::var(i))};
  };
  CHECK_NOTHROW(JoinSpec(sig, {law(0), law(1)}, Term::app("e2", {Term::var(0), Term::var(1)})));
  CHECK_THROWS_AS(JoinSpec(sig, {law(1), law(0)}, Term::app("e2", {Term::var(0), Term::var(1)})), InvalidArgument);
  CHECK_THROWS_AS(JoinSpec(sig, {law(0), law(1), law(1)}, Term::app("e2", {Term::var(0), Term::var(1)})),
                  InvalidArgument);
}

TEST_CASE("verify_quotient_product") {
  auto const           p    = band_product();
  BinaryRelation const tn[] = {rel(3, {{0, 1}, {1, 2}}), BinaryRelation::total(2)};
  auto const           v    = verify_quotient_product(p, product_relation(tn));
  CHECK(v.isomorphic);
  CHECK(v.whole.size() == 2);
  CHECK(v.product.size() == 2);
  CHECK(v.factors[1].size() == 1);

  auto const d = verify_quotient_product(p, BinaryRelation::diagonal(6));
  CHECK(d.isomorphic);
  CHECK(find_isomorphism(d.whole, p.product()));
  auto const n = verify_quotient_product(p, BinaryRelation::total(6));
  CHECK(n.isomorphic);
  CHECK(n.whole.size() == 1);
}

TEST_CASE("Set2 products: tolerances, blocks and quotients decompose") {
  for (auto const& p : set2_products()) {
    for (auto const& t : all_tolerances(p.product()).members) {
      auto const d = decompose_tolerance(p, t);
      REQUIRE(d.exact);
      auto const b = decompose_blocks(p, t);
      CHECK(b.passed());
      CHECK(b.blocks.size() == b.factor_blocks[0].size() * b.factor_blocks[1].size());
      CHECK(verify_quotient_product(p, t).isomorphic);
    }
  }
}

TEST_CASE("the lattice square has non-product subalgebras") {
  ProductStructure const c({chain(2), chain(2)});
  bool                   all_exact = true;
  for (auto const& t : all_tolerances(c.product()).members) {
    all_exact = all_exact && decompose_tolerance(c, t).exact;
  }
  CHECK(all_exact);
  Bitset diag(4);
  diag.set(0);
  diag.set(3);
  CHECK_FALSE(decompose_subalgebra(c, diag).is_product);
}
