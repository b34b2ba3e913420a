#ifndef TOLFAC_TESTS_SUPPORT_HPP_
#define TOLFAC_TESTS_SUPPORT_HPP_

// Small named algebras and naive oracles shared by the unit tests. The
// oracles deliberately avoid the library's own closure, clique and product
// code: they work on plain vectors of bools and recompute table indices.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/relations.hpp"

namespace tolfac::test {

  inline FiniteAlgebra chain(std::size_t n) {
    Signature sig({{"join", 2}, {"meet", 2}});
    return FiniteAlgebra::from_function(n, sig, [](std::size_t op, std::span<Element const> a) {
      return op == 0 ? std::max(a[0], a[1]) : std::min(a[0], a[1]);
    });
  }

  // 0 < 1, 2 < 3 as bit masks 00, 01, 10, 11
  inline FiniteAlgebra b4() {
    Signature sig({{"join", 2}, {"meet", 2}});
    return FiniteAlgebra::from_function(4, sig, [](std::size_t op, std::span<Element const> a) {
      return op == 0 ? (a[0] | a[1]) : (a[0] & a[1]);
    });
  }

  inline FiniteAlgebra b4_rotation() {
    Signature sig({{"join", 2}, {"meet", 2}, {"g", 1}});
    Element const swap[4] = {0, 2, 1, 3};
    return FiniteAlgebra::from_function(4, sig, [&](std::size_t op, std::span<Element const> a) {
      if (op == 2) {
        return swap[a[0]];
      }
      return op == 0 ? (a[0] | a[1]) : (a[0] & a[1]);
    });
  }

  // ({0..n-1}, e2) with e2 the k-th projection, k in {0, 1}
  inline FiniteAlgebra band(std::size_t n, std::size_t k) {
    return FiniteAlgebra::from_function(n, Signature({{"e2", 2}}),
                                        [k](std::size_t, std::span<Element const> a) { return a[k]; });
  }

  inline FiniteAlgebra band3() {
    return band(3, 0);
  }

  inline BinaryRelation rel(std::size_t n, std::vector<ElementPair> const& pairs) {
    return BinaryRelation::tolerance_candidate(n, pairs);
  }

  using Matrix = std::vector<std::vector<bool>>;

  inline Matrix to_matrix(BinaryRelation const& r) {
    Matrix m(r.size(), std::vector<bool>(r.size()));
    for (Element a = 0; a < r.size(); ++a) {
      for (Element b = 0; b < r.size(); ++b) {
        m[a][b] = r.test(a, b);
      }
    }
    return m;
  }

  // table entry for args, first argument most significant
  inline Element lookup(FiniteAlgebra const& a, std::size_t op, std::vector<Element> const& args) {
    std::size_t idx = 0;
    for (Element x : args) {
      idx = idx * a.size() + x;
    }
    return a.table(op)[idx];
  }

  // every tuple of related pairs maps to a related pair
  inline bool naive_compatible(FiniteAlgebra const& a, Matrix const& m) {
    std::size_t const n = a.size();
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (m[x][y]) {
          pairs.emplace_back(x, y);
        }
      }
    }
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      std::size_t const k = a.signature()[op].arity;
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::vector<Element> l(k), r(k);
        for (std::size_t i = 0; i < k; ++i) {
          l[i] = pairs[pick[i]].first;
          r[i] = pairs[pick[i]].second;
        }
        if (!m[lookup(a, op, l)][lookup(a, op, r)]) {
          return false;
        }
        std::size_t i = 0;
        while (i < k && ++pick[i] == pairs.size()) {
          pick[i++] = 0;
        }
        if (i == k) {
          break;
        }
      }
    }
    return true;
  }

  // All reflexive symmetric compatible relations.
  inline std::set<Matrix> naive_tolerances(FiniteAlgebra const& a) {
    std::size_t const n = a.size();
    std::vector<std::pair<Element, Element>> off;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        off.emplace_back(x, y);
      }
    }
    std::set<Matrix> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << off.size()); ++mask) {
      Matrix m(n, std::vector<bool>(n));
      for (Element x = 0; x < n; ++x) {
        m[x][x] = true;
      }
      for (std::size_t i = 0; i < off.size(); ++i) {
        if (mask >> i & 1U) {
          m[off[i].first][off[i].second] = m[off[i].second][off[i].first] = true;
        }
      }
      if (naive_compatible(a, m)) {
        out.insert(m);
      }
    }
    return out;
  }

  // Maximal cliques by subset enumeration, as sorted element lists.
  inline std::set<std::vector<Element>> naive_blocks(BinaryRelation const& r) {
    std::size_t const n = r.size();
    auto clique = [&](std::size_t s) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if ((s >> x & 1U) && (s >> y & 1U) && !r.test(x, y)) {
            return false;
          }
        }
      }
      return true;
    };
    std::set<std::vector<Element>> out;
    for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
      if (!clique(s)) {
        continue;
      }
      bool maximal = true;
      for (Element x = 0; x < n && maximal; ++x) {
        if (!(s >> x & 1U) && clique(s | std::size_t{1} << x)) {
          maximal = false;
        }
      }
      if (maximal) {
        std::vector<Element> b;
        for (Element x = 0; x < n; ++x) {
          if (s >> x & 1U) {
            b.push_back(x);
          }
        }
        out.insert(b);
      }
    }
    return out;
  }

  // Random term over the signature with variables below nvars.
  inline Term random_term(Signature const& sig, std::size_t nvars, int depth, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick_var(0, nvars - 1);
    std::uniform_int_distribution<std::size_t> pick_op(0, sig.size() - 1);
    if (depth == 0 || rng() % 3 == 0) {
      return Term::var(pick_var(rng));
    }
    auto const&       s = sig[pick_op(rng)];
    std::vector<Term> args;
    for (std::size_t i = 0; i < s.arity; ++i) {
      args.push_back(random_term(sig, nvars, depth - 1, rng));
    }
    return Term::app(s.name, std::move(args));
  }

  inline Element naive_eval(FiniteAlgebra const& a, Term const& t, std::vector<Element> const& env) {
    if (t.is_var()) {
      return env[t.var_index()];
    }
    std::vector<Element> vals;
    for (auto const& c : t.args()) {
      vals.push_back(naive_eval(a, c, env));
    }
    return lookup(a, a.signature().index_of(t.symbol()), vals);
  }

}  // namespace tolfac::test

#endif  // TOLFAC_TESTS_SUPPORT_HPP_
