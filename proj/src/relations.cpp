#include "tolfac/relations.hpp"

#include <algorithm>
#include <unordered_set>

namespace tolfac {

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation::BinaryRelation(std::size_t n)
      : _n(n), _wpr((n + 63) / 64), _words(_n * _wpr, 0) {}

  BinaryRelation BinaryRelation::diagonal(std::size_t n) {
    BinaryRelation r(n);
    for (Element a = 0; a < n; ++a) {
      r.set(a, a);
    }
    return r;
  }

  BinaryRelation BinaryRelation::total(std::size_t n) {
    BinaryRelation r(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        r.set(a, b);
      }
    }
    return r;
  }

  BinaryRelation BinaryRelation::tolerance_candidate(std::size_t                  n,
                                                     std::span<ElementPair const> pairs) {
    auto r = diagonal(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw InvalidArgument("pair (" + std::to_string(a) + "," + std::to_string(b)
                              + ") out of range for size " + std::to_string(n));
      }
      r.set_symmetric(a, b);
    }
    return r;
  }

  Bitset BinaryRelation::row(Element a) const {
    Bitset out(_n);
    for (Element b = 0; b < _n; ++b) {
      if (test(a, b)) {
        out.set(b);
      }
    }
    return out;
  }

  std::size_t BinaryRelation::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _words) {
      c += std::popcount(w);
    }
    return c;
  }

  bool BinaryRelation::is_reflexive() const noexcept {
    for (Element a = 0; a < _n; ++a) {
      if (!test(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool BinaryRelation::is_symmetric() const noexcept {
    for (Element a = 0; a < _n; ++a) {
      for (Element b = a + 1; b < _n; ++b) {
        if (test(a, b) != test(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BinaryRelation::is_transitive() const {
    return compose(*this, *this).is_subset_of(*this);
  }

  bool BinaryRelation::is_subset_of(BinaryRelation const& other) const noexcept {
    if (_n != other._n) {
      return false;
    }
    for (std::size_t k = 0; k < _words.size(); ++k) {
      if ((_words[k] & ~other._words[k]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<ElementPair> BinaryRelation::pairs() const {
    std::vector<ElementPair> out;
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        if (test(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::string BinaryRelation::to_string() const {
    std::string out;
    bool const  digits = _n <= 10;
    for (Element a = 0; a < _n; ++a) {
      for (Element b = a + 1; b < _n; ++b) {
        if (!test(a, b)) {
          continue;
        }
        if (!out.empty()) {
          out += ",";
        }
        if (digits) {
          out += static_cast<char>('0' + a);
          out += static_cast<char>('0' + b);
        } else {
          out += std::to_string(a) + "-" + std::to_string(b);
        }
      }
    }
    return out;
  }

  BinaryRelation& BinaryRelation::operator|=(BinaryRelation const& other) noexcept {
    for (std::size_t k = 0; k < _words.size(); ++k) {
      _words[k] |= other._words[k];
    }
    return *this;
  }

  BinaryRelation& BinaryRelation::operator&=(BinaryRelation const& other) noexcept {
    for (std::size_t k = 0; k < _words.size(); ++k) {
      _words[k] &= other._words[k];
    }
    return *this;
  }

  std::size_t BinaryRelation::hash() const noexcept {
    std::size_t h = _n;
    for (auto w : _words) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  BinaryRelation compose(BinaryRelation const& r, BinaryRelation const& s) {
    if (r.size() != s.size()) {
      throw InvalidArgument("cannot compose relations of different sizes");
    }
    std::size_t const n = r.size();
    BinaryRelation    out(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!r.test(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (s.test(b, c)) {
            out.set(a, c);
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compatibility
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_size(FiniteAlgebra const& algebra, BinaryRelation const& r) {
      if (r.size() != algebra.size()) {
        throw InvalidArgument("relation of size " + std::to_string(r.size())
                              + " on an algebra of size " + std::to_string(algebra.size()));
      }
    }

    // Smallest compatible, symmetric relation containing a closed base and
    // some extra pairs. Semi-naive: a tuple of pairs is evaluated once, when
    // the last of its pairs is processed.
    class Closure {
     public:
      Closure(FiniteAlgebra const& algebra, BinaryRelation const& base)
          : _algebra(algebra), _n(algebra.size()), _rel(base) {
        for (auto [a, b] : base.pairs()) {
          _done_a.push_back(a);
          _done_b.push_back(b);
        }
      }

      void add(Element x, Element y) {
        if (_rel.test(x, y)) {
          return;
        }
        _rel.set_symmetric(x, y);
        _queue.emplace_back(x, y);
        if (x != y) {
          _queue.emplace_back(y, x);
        }
      }

      BinaryRelation run() {
        while (!_queue.empty()) {
          auto const [a, b] = _queue.back();
          _queue.pop_back();
          process(a, b);
        }
        return std::move(_rel);
      }

     private:
      void process(Element a, Element b) {
        _done_a.push_back(a);
        _done_b.push_back(b);
        std::size_t const m  = _done_a.size();
        Element const*    da = _done_a.data();
        Element const*    db = _done_b.data();
        std::size_t const n  = _n;
        auto const&       sig = _algebra.signature();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          std::size_t const k   = sig[op].arity;
          Element const*    tab = _algebra.table(op).data();
          switch (k) {
            case 0:
              break;
            case 1:
              add(tab[a], tab[b]);
              break;
            case 2:
              for (std::size_t i = 0; i < m; ++i) {
                add(tab[a * n + da[i]], tab[b * n + db[i]]);
              }
              for (std::size_t i = 0; i + 1 < m; ++i) {
                add(tab[da[i] * n + a], tab[db[i] * n + b]);
              }
              break;
            case 3: {
              std::size_t const nn = n * n;
              // first occurrence of the new pair in slot 0
              for (std::size_t i = 0; i < m; ++i) {
                std::size_t const ia = a * nn + da[i] * n;
                std::size_t const ib = b * nn + db[i] * n;
                for (std::size_t j = 0; j < m; ++j) {
                  add(tab[ia + da[j]], tab[ib + db[j]]);
                }
              }
              // slot 1
              for (std::size_t i = 0; i + 1 < m; ++i) {
                std::size_t const ia = da[i] * nn + a * n;
                std::size_t const ib = db[i] * nn + b * n;
                for (std::size_t j = 0; j < m; ++j) {
                  add(tab[ia + da[j]], tab[ib + db[j]]);
                }
              }
              // slot 2
              for (std::size_t i = 0; i + 1 < m; ++i) {
                for (std::size_t j = 0; j + 1 < m; ++j) {
                  add(tab[da[i] * nn + da[j] * n + a], tab[db[i] * nn + db[j] * n + b]);
                }
              }
              break;
            }
            default:
              process_general(op, k, m);
              break;
          }
        }
      }

      // Arity > 3: slot j holds the new pair, earlier slots range over the
      // older pairs and later slots over all processed pairs.
      void process_general(std::size_t op, std::size_t k, std::size_t m) {
        std::vector<std::size_t> pos(k);
        std::vector<Element>     xa(k), xb(k);
        for (std::size_t j = 0; j < k; ++j) {
          if (j > 0 && m < 2) {
            break;
          }
          std::fill(pos.begin(), pos.end(), 0);
          pos[j] = m - 1;
          while (true) {
            for (std::size_t s = 0; s < k; ++s) {
              xa[s] = _done_a[pos[s]];
              xb[s] = _done_b[pos[s]];
            }
            add(_algebra.apply(op, xa), _algebra.apply(op, xb));
            bool wrapped = true;
            for (std::size_t s = k; s-- > 0;) {
              if (s == j) {
                continue;
              }
              std::size_t const limit = s < j ? m - 1 : m;
              if (++pos[s] < limit) {
                wrapped = false;
                break;
              }
              pos[s] = 0;
            }
            if (wrapped) {
              break;
            }
          }
        }
      }

      FiniteAlgebra const&     _algebra;
      std::size_t              _n;
      BinaryRelation           _rel;
      std::vector<Element>     _done_a;
      std::vector<Element>     _done_b;
      std::vector<ElementPair> _queue;
    };

    // Join of a tolerance with extra pairs, the base being already closed.
    BinaryRelation close_over(FiniteAlgebra const&  algebra,
                              BinaryRelation const& closed_base,
                              BinaryRelation const& extra) {
      Closure c(algebra, closed_base);
      for (auto [x, y] : extra.pairs()) {
        c.add(x, y);
      }
      return c.run();
    }

    void check_budget(FiniteAlgebra const& algebra, Budget const& budget) {
      if (algebra.size() > budget.max_size) {
        throw BudgetExceeded("tolerance enumeration on " + std::to_string(algebra.size())
                             + " elements exceeds the size budget of "
                             + std::to_string(budget.max_size));
      }
      if (budget.max_tolerances == 0) {
        throw BudgetExceeded("tolerance budget is zero");
      }
    }

  }  // namespace

  bool is_compatible(FiniteAlgebra const& algebra, BinaryRelation const& r) {
    check_size(algebra, r);
    auto const               pairs = r.pairs();
    std::size_t const        m     = pairs.size();
    auto const&              sig   = algebra.signature();
    std::vector<std::size_t> pos;
    std::vector<Element>     xa, xb;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const k = sig[op].arity;
      if (k == 0) {
        auto const c = algebra.table(op)[0];
        if (!r.test(c, c)) {
          return false;
        }
        continue;
      }
      if (m == 0) {
        continue;
      }
      pos.assign(k, 0);
      xa.resize(k);
      xb.resize(k);
      while (true) {
        for (std::size_t s = 0; s < k; ++s) {
          xa[s] = pairs[pos[s]].first;
          xb[s] = pairs[pos[s]].second;
        }
        if (!r.test(algebra.apply(op, xa), algebra.apply(op, xb))) {
          return false;
        }
        bool wrapped = true;
        for (std::size_t s = k; s-- > 0;) {
          if (++pos[s] < m) {
            wrapped = false;
            break;
          }
          pos[s] = 0;
        }
        if (wrapped) {
          break;
        }
      }
    }
    return true;
  }

  bool is_tolerance(FiniteAlgebra const& algebra, BinaryRelation const& r) {
    check_size(algebra, r);
    return r.is_reflexive() && r.is_symmetric() && is_compatible(algebra, r);
  }

  bool is_congruence(FiniteAlgebra const& algebra, BinaryRelation const& r) {
    return is_tolerance(algebra, r) && r.is_transitive();
  }

  BinaryRelation compatibility_closure(FiniteAlgebra const& algebra, BinaryRelation const& seed) {
    check_size(algebra, seed);
    std::size_t const n = algebra.size();
    Closure           c(algebra, BinaryRelation(n));
    for (Element a = 0; a < n; ++a) {
      c.add(a, a);
    }
    for (auto [x, y] : seed.pairs()) {
      c.add(x, y);
    }
    return c.run();
  }

  BinaryRelation principal_tolerance(FiniteAlgebra const& algebra, Element a, Element b) {
    std::size_t const n = algebra.size();
    if (a >= n || b >= n) {
      throw InvalidArgument("element out of range in principal tolerance");
    }
    Closure c(algebra, BinaryRelation::diagonal(n));
    c.add(a, b);
    return c.run();
  }

  BinaryRelation tolerance_join(FiniteAlgebra const&  algebra,
                                BinaryRelation const& s,
                                BinaryRelation const& t) {
    if (!is_tolerance(algebra, s) || !is_tolerance(algebra, t)) {
      throw InvalidArgument("tolerance_join requires two tolerances");
    }
    return close_over(algebra, s, t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  ToleranceSet tolerances_by_join_closure(FiniteAlgebra const& algebra, Budget const& budget) {
    check_budget(algebra, budget);
    std::size_t const n = algebra.size();

    std::vector<BinaryRelation> principals;
    {
      std::unordered_set<BinaryRelation, BinaryRelationHash> seen;
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          auto p = principal_tolerance(algebra, a, b);
          if (seen.insert(p).second) {
            principals.push_back(std::move(p));
          }
        }
      }
    }

    std::unordered_set<BinaryRelation, BinaryRelationHash> seen;
    std::vector<BinaryRelation>                             found;
    auto                                                    record = [&](BinaryRelation r) {
      if (seen.insert(r).second) {
        if (found.size() >= budget.max_tolerances) {
          throw BudgetExceeded("more than " + std::to_string(budget.max_tolerances)
                               + " tolerances");
        }
        found.push_back(std::move(r));
        return true;
      }
      return false;
    };
    record(BinaryRelation::diagonal(n));
    for (std::size_t next = 0; next < found.size(); ++next) {
      for (auto const& p : principals) {
        if (p.is_subset_of(found[next])) {
          continue;
        }
        record(close_over(algebra, found[next], p));
      }
    }
    std::sort(found.begin(), found.end());
    return ToleranceSet{algebra, std::move(found)};
  }

  ToleranceSet tolerances_by_brute_force(FiniteAlgebra const& algebra, Budget const& budget) {
    check_budget(algebra, budget);
    std::size_t const        n = algebra.size();
    std::vector<ElementPair> offdiag;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        offdiag.emplace_back(a, b);
      }
    }
    if (offdiag.size() > 30) {
      throw BudgetExceeded("brute-force tolerance enumeration on " + std::to_string(n)
                           + " elements is out of range");
    }
    std::vector<BinaryRelation> found;
    std::uint64_t const         limit = std::uint64_t{1} << offdiag.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      auto r = BinaryRelation::diagonal(n);
      for (std::size_t i = 0; i < offdiag.size(); ++i) {
        if ((mask >> i) & 1U) {
          r.set_symmetric(offdiag[i].first, offdiag[i].second);
        }
      }
      if (is_compatible(algebra, r)) {
        if (found.size() >= budget.max_tolerances) {
          throw BudgetExceeded("more than " + std::to_string(budget.max_tolerances)
                               + " tolerances");
        }
        found.push_back(std::move(r));
      }
    }
    std::sort(found.begin(), found.end());
    return ToleranceSet{algebra, std::move(found)};
  }

  ToleranceSet all_tolerances(FiniteAlgebra const& algebra, Budget const& budget) {
    auto result = tolerances_by_join_closure(algebra, budget);
    if (algebra.size() <= brute_force_threshold) {
      auto const oracle = tolerances_by_brute_force(algebra, budget);
      if (oracle.members != result.members) {
        throw VerificationFailure("join-closure enumeration found "
                                  + std::to_string(result.members.size())
                                  + " tolerances, brute force found "
                                  + std::to_string(oracle.members.size()));
      }
    }
    return result;
  }

  std::vector<BinaryRelation> all_congruences(FiniteAlgebra const& algebra, Budget const& budget) {
    std::vector<BinaryRelation> out;
    for (auto& t : all_tolerances(algebra, budget).members) {
      if (t.is_transitive()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Images, products, kernels
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation image_relation(AlgebraMap const& phi, BinaryRelation const& theta) {
    if (theta.size() != phi.domain.size() || phi.values.size() != phi.domain.size()) {
      throw InvalidArgument("relation size does not match the domain of the map");
    }
    if (!is_surjective(phi)) {
      throw InvalidArgument("image_relation requires a surjective map");
    }
    BinaryRelation out(phi.codomain.size());
    for (auto [x, y] : theta.pairs()) {
      out.set(phi(x), phi(y));
    }
    return out;
  }

  BinaryRelation product_relation(std::span<BinaryRelation const> parts) {
    if (parts.empty()) {
      throw InvalidArgument("product of an empty list of relations");
    }
    std::vector<std::size_t> radices;
    std::size_t              total = 1;
    for (auto const& p : parts) {
      radices.push_back(p.size());
      total *= p.size();
    }
    std::vector<std::vector<Element>> coords(total);
    for (std::size_t x = 0; x < total; ++x) {
      coords[x] = decode_tuple(x, radices);
    }
    BinaryRelation out(total);
    for (Element x = 0; x < total; ++x) {
      for (Element y = 0; y < total; ++y) {
        bool related = true;
        for (std::size_t i = 0; i < parts.size() && related; ++i) {
          related = parts[i].test(coords[x][i], coords[y][i]);
        }
        if (related) {
          out.set(x, y);
        }
      }
    }
    return out;
  }

  BinaryRelation kernel(AlgebraMap const& map) {
    std::size_t const n = map.values.size();
    BinaryRelation    out(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (map(x) == map(y)) {
          out.set(x, y);
        }
      }
    }
    return out;
  }

  PermutabilityVerdict congruences_permute(FiniteAlgebra const& algebra, Budget const& budget) {
    auto const cons = all_congruences(algebra, budget);
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        if (!(compose(cons[i], cons[j]) == compose(cons[j], cons[i]))) {
          return {false, std::make_pair(cons[i], cons[j])};
        }
      }
    }
    return {};
  }

  std::vector<std::vector<Element>> equivalence_classes(BinaryRelation const& theta) {
    std::size_t const                 n = theta.size();
    std::vector<bool>                 placed(n, false);
    std::vector<std::vector<Element>> classes;
    for (Element x = 0; x < n; ++x) {
      if (placed[x]) {
        continue;
      }
      std::vector<Element> cls;
      for (Element y = x; y < n; ++y) {
        if (theta.test(x, y)) {
          cls.push_back(y);
          placed[y] = true;
        }
      }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  CongruenceQuotient congruence_quotient(FiniteAlgebra const& algebra, BinaryRelation const& theta) {
    if (!is_congruence(algebra, theta)) {
      throw InvalidArgument("congruence_quotient requires a congruence");
    }
    auto const           classes = equivalence_classes(theta);
    std::vector<Element> cls(algebra.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto x : classes[c]) {
        cls[x] = static_cast<Element>(c);
      }
    }
    std::vector<Element> reps;
    auto q = FiniteAlgebra::from_function(
        classes.size(), algebra.signature(), [&](std::size_t op, std::span<Element const> args) {
          reps.resize(args.size());
          for (std::size_t j = 0; j < args.size(); ++j) {
            reps[j] = classes[args[j]].front();
          }
          return cls[algebra.apply(op, reps)];
        });
    return CongruenceQuotient{q, AlgebraMap{algebra, q, std::move(cls)}};
  }

}  // namespace tolfac
