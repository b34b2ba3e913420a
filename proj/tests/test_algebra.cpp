#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tolfac/algebra.hpp"

using namespace tolfac;
using namespace tolfac::test;

namespace {

  Term x() {
    return Term::var(0);
  }
  Term y() {
    return Term::var(1);
  }
  Term z() {
    return Term::var(2);
  }
  Term app(std::string s, std::vector<Term> args) {
    return Term::app(std::move(s), std::move(args));
  }

  Bitset set_of(std::size_t n, std::vector<std::size_t> const& xs) {
    Bitset b(n);
    for (auto v : xs) {
      b.set(v);
    }
    return b;
  }

}  // namespace

TEST_CASE("constructor rejects malformed tables") {
  Signature sig({{"f", 1}});
  CHECK_THROWS_AS(FiniteAlgebra(2, sig, {{0}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(2, sig, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Signature({{"f", 1}, {"f", 2}}), InvalidArgument);
  CHECK_NOTHROW(FiniteAlgebra(2, sig, {{1, 0}}));
}

TEST_CASE("eval_term") {
  auto const c3 = chain(3);
  Element const a[] = {0, 2, 1};
  auto const tjoin = app("join", {x(), app("meet", {y(), z()})});
  CHECK(eval_term(c3, tjoin, a) == 1);

  Element const five[] = {5};
  CHECK(eval_term(chain(7), x(), five) == 5);

  Element const xy[] = {0, 2};
  CHECK(eval_term(band3(), app("e2", {x(), app("e2", {y(), x()})}), xy) == 0);

  CHECK_THROWS_AS(eval_term(c3, app("nope", {x()}), a), InvalidArgument);
  CHECK_THROWS_AS(eval_term(c3, app("join", {x()}), a), InvalidArgument);
}

TEST_CASE("eval_term agrees with naive recursion on random terms") {
  std::mt19937 rng(7);
  for (auto const& a : {chain(4), b4_rotation(), band3()}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto const           t = random_term(a.signature(), 3, 4, rng);
      std::vector<Element> env(3);
      for (auto& v : env) {
        v = static_cast<Element>(rng() % a.size());
      }
      CHECK(eval_term(a, t, env) == naive_eval(a, t, env));
    }
  }
}

TEST_CASE("holds_identity") {
  auto const c3 = chain(3);
  CHECK(holds_identity(c3, Identity(x(), app("join", {x(), app("meet", {x(), y()})}))).holds);

  auto const v = holds_identity(band(2, 0), Identity(app("e2", {x(), y()}), y()));
  CHECK_FALSE(v.holds);
  CHECK(v.counterexample == std::vector<Element>{0, 1});

  CHECK(holds_identity(band3(), Identity(app("e2", {x(), app("e2", {y(), x()})}), x())).holds);
}

TEST_CASE("holds_identity matches random sampling") {
  std::mt19937 rng(11);
  auto const   a = b4_rotation();
  for (int trial = 0; trial < 100; ++trial) {
    Identity const id(random_term(a.signature(), 2, 3, rng), random_term(a.signature(), 2, 3, rng), 2);
    auto const     v = holds_identity(a, id);
    bool           sampled_fail = false;
    for (int s = 0; s < 64; ++s) {
      std::vector<Element> env = {static_cast<Element>(rng() % 4), static_cast<Element>(rng() % 4)};
      if (naive_eval(a, id.lhs, env) != naive_eval(a, id.rhs, env)) {
        sampled_fail = true;
      }
    }
    // a sampled failure implies a reported one
    if (sampled_fail) {
      CHECK_FALSE(v.holds);
    }
    if (!v.holds) {
      CHECK(naive_eval(a, id.lhs, v.counterexample) != naive_eval(a, id.rhs, v.counterexample));
    }
  }
}

TEST_CASE("direct_product") {
  FiniteAlgebra const c2s[] = {chain(2), chain(2)};
  auto const          p     = direct_product(c2s);
  CHECK(p.algebra.size() == 4);
  CHECK(find_isomorphism(p.algebra, b4()).has_value());
  for (auto const& pr : p.projections) {
    CHECK(is_homomorphism(pr));
    CHECK(is_surjective(pr));
  }

  FiniteAlgebra const bands[] = {band3(), band(2, 1)};
  auto const          q       = direct_product(bands);
  REQUIRE(q.algebra.size() == 6);
  // e2((a1,a2),(b1,b2)) = (a1,b2), computed elementwise
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      Element const args[] = {a, b};
      CHECK(q.algebra.apply("e2", args) == (a / 2) * 2 + b % 2);
    }
  }

  FiniteAlgebra const one[] = {chain(3)};
  auto const          s     = direct_product(one);
  CHECK(s.algebra == chain(3));
  CHECK(s.projections[0].values == std::vector<Element>{0, 1, 2});

  FiniteAlgebra const mixed[] = {chain(2), band3()};
  CHECK_THROWS_AS(direct_product(mixed), InvalidArgument);
}

TEST_CASE("terms commute with product projections") {
  std::mt19937        rng(3);
  FiniteAlgebra const fs[] = {b4_rotation(), b4_rotation()};
  auto const          p    = direct_product(fs);
  for (int trial = 0; trial < 100; ++trial) {
    auto const           t = random_term(p.algebra.signature(), 2, 4, rng);
    std::vector<Element> env = {static_cast<Element>(rng() % 16), static_cast<Element>(rng() % 16)};
    auto const           v   = eval_term(p.algebra, t, env);
    for (auto const& pr : p.projections) {
      std::vector<Element> proj_env = {pr(env[0]), pr(env[1])};
      CHECK(pr(v) == eval_term(pr.codomain, t, proj_env));
    }
  }
}

TEST_CASE("find_isomorphism") {
  auto const c3 = chain(3);
  auto const id = find_isomorphism(c3, c3);
  REQUIRE(id);
  CHECK(id->values == std::vector<Element>{0, 1, 2});
  CHECK_FALSE(find_isomorphism(c3, chain(2)));

  FiniteAlgebra const c2s[] = {chain(2), chain(2)};
  auto const          p     = direct_product(c2s).algebra;
  auto const          f     = find_isomorphism(p, b4());
  auto const          g     = find_isomorphism(b4(), p);
  REQUIRE(f);
  REQUIRE(g);
  CHECK(is_bijective(*f));
  CHECK(is_homomorphism(*f));
  // the inverse of f is also an isomorphism
  AlgebraMap inv{b4(), p, std::vector<Element>(4)};
  for (Element a = 0; a < 4; ++a) {
    inv.values[f->values[a]] = a;
  }
  CHECK(is_homomorphism(inv));
  CHECK_FALSE(find_isomorphism(chain(4), b4()));
}

TEST_CASE("essential_coordinates") {
  CHECK(essential_coordinates(band(2, 0), "e2") == std::vector<std::size_t>{0});
  CHECK(essential_coordinates(band(3, 1), "e2") == std::vector<std::size_t>{1});

  FiniteAlgebra const bands[] = {band3(), band(2, 1)};
  CHECK(essential_coordinates(direct_product(bands).algebra, "e2") == std::vector<std::size_t>{0, 1});

  auto const k = FiniteAlgebra::from_function(3, Signature({{"c", 2}}),
                                              [](std::size_t, std::span<Element const>) { return 1U; });
  CHECK(essential_coordinates(k, "c").empty());
  CHECK_THROWS_AS(essential_coordinates(k, "d"), InvalidArgument);
}

TEST_CASE("subuniverse_generate") {
  auto const c3 = chain(3);
  CHECK(subuniverse_generate(c3, set_of(3, {0, 2})) == set_of(3, {0, 2}));
  CHECK(subuniverse_generate(c3, Bitset(3)).none());
  CHECK(subuniverse_generate(b4(), set_of(4, {1, 2})) == set_of(4, {0, 1, 2, 3}));
  CHECK(is_subuniverse(b4(), set_of(4, {0, 1})));
  CHECK_FALSE(is_subuniverse(b4(), set_of(4, {1, 2})));
}
