#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tolfac/lattices.hpp"

using namespace tolfac;
using namespace tolfac::test;

namespace {

  // Minimum order matrix over all n! relabellings.
  std::string brute_code(BinaryRelation const& leq) {
    std::size_t const    n = leq.size();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::string code;
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          code += leq.test(perm[i], perm[j]) ? '1' : '0';
        }
      }
      if (best.empty() || code < best) {
        best = code;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  BinaryRelation chain_order(std::size_t n) {
    BinaryRelation r(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        r.set(a, b);
      }
    }
    return r;
  }

}  // namespace

TEST_CASE("lattice counts by size") {
  std::size_t const expected[] = {1, 1, 1, 2, 5, 15, 53, 222};
  auto const        ls         = enumerate_lattices(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const c = std::count_if(ls.begin(), ls.end(), [n](auto const& l) { return l.size() == n; });
    CHECK(static_cast<std::size_t>(c) == expected[n - 1]);
  }
  CHECK(enumerate_lattices(6).size() == 25);
  CHECK_THROWS_AS(enumerate_lattices(9), BudgetExceeded);
  CHECK(enumerate_lattices(9, 9).size() == 1378);
}

TEST_CASE("two enumeration methods agree") {
  auto const ls = enumerate_lattices(7);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::string> fast, slow;
    for (auto const& l : ls) {
      if (l.size() == n) {
        fast.insert(brute_code(*lattice_order(l)));
      }
    }
    for (auto const& o : brute_force_lattice_orders(n)) {
      slow.insert(brute_code(o));
    }
    CHECK(fast == slow);
    CHECK(fast.size() == static_cast<std::size_t>(std::count_if(
                             ls.begin(), ls.end(), [n](auto const& l) { return l.size() == n; })));
  }
}

TEST_CASE("small sizes") {
  auto const ls = enumerate_lattices(5);
  CHECK(ls[1] == chain(2));
  auto has = [&](FiniteAlgebra const& x) {
    return std::any_of(ls.begin(), ls.end(), [&](auto const& l) { return find_isomorphism(l, x).has_value(); });
  };
  CHECK(has(chain(5)));
  // M3 and N5 from their orders
  BinaryRelation m3 = BinaryRelation::diagonal(5), n5 = BinaryRelation::diagonal(5);
  for (Element x = 0; x < 5; ++x) {
    m3.set(0, x);
    m3.set(x, 4);
    n5.set(0, x);
    n5.set(x, 4);
  }
  n5.set(1, 2);
  CHECK(has(lattice_from_order(m3)));
  CHECK(has(lattice_from_order(n5)));
}

TEST_CASE("enumerated lattices are labelled canonically") {
  for (auto const& l : enumerate_lattices(7)) {
    auto const leq = lattice_order(l);
    REQUIRE(leq);
    auto const lab = canonical_labelling(*leq);
    std::vector<Element> id(l.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(lab == id);
    // a linear extension: i <= j implies position order
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        if (leq->test(a, b)) {
          CHECK(a <= b);
        }
      }
    }
  }
}

TEST_CASE("canonical codes separate isomorphism classes") {
  auto const ls = enumerate_lattices(7);
  std::set<std::string> codes;
  for (auto const& l : ls) {
    codes.insert(std::to_string(l.size()) + ":" + canonical_order_code(*lattice_order(l)));
  }
  CHECK(codes.size() == ls.size());

  // codes survive relabelling
  std::mt19937 rng(5);
  for (auto const& l : ls) {
    auto const           leq = *lattice_order(l);
    std::vector<Element> p(l.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    BinaryRelation moved(l.size());
    for (auto const& [a, b] : leq.pairs()) {
      moved.set(p[a], p[b]);
    }
    CHECK(canonical_order_code(moved) == canonical_order_code(leq));
  }
}

TEST_CASE("lattice_from_order and lattice_order") {
  auto const c = lattice_from_order(chain_order(4));
  CHECK(c == chain(4));
  CHECK(*lattice_order(c) == chain_order(4));

  // two incomparable maximal elements: no join
  BinaryRelation v = BinaryRelation::diagonal(3);
  v.set(0, 1);
  v.set(0, 2);
  CHECK_THROWS_AS(lattice_from_order(v), InvalidArgument);
  CHECK_FALSE(lattice_order(band3()));
}
