#include "tolfac/lattices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace tolfac {

  Signature lattice_signature() {
    return Signature({{"join", 2}, {"meet", 2}});
  }

  FiniteAlgebra lattice_from_order(BinaryRelation const& leq) {
    std::size_t const n = leq.size();
    auto bound = [&](Element a, Element b, bool upper) -> Element {
      Element best = UNDEFINED;
      for (Element u = 0; u < n; ++u) {
        bool const is_bound = upper ? (leq.test(a, u) && leq.test(b, u))
                                    : (leq.test(u, a) && leq.test(u, b));
        if (!is_bound) {
          continue;
        }
        if (best == UNDEFINED || (upper ? leq.test(u, best) : leq.test(best, u))) {
          best = u;
        }
      }
      // best must be comparable with, and extremal among, all bounds
      for (Element u = 0; u < n && best != UNDEFINED; ++u) {
        bool const is_bound = upper ? (leq.test(a, u) && leq.test(b, u))
                                    : (leq.test(u, a) && leq.test(u, b));
        if (is_bound && !(upper ? leq.test(best, u) : leq.test(u, best))) {
          best = UNDEFINED;
        }
      }
      if (best == UNDEFINED) {
        throw InvalidArgument("elements " + std::to_string(a) + " and " + std::to_string(b)
                              + " have no " + (upper ? "join" : "meet"));
      }
      return best;
    };
    return FiniteAlgebra::from_function(
        n, lattice_signature(), [&](std::size_t op, std::span<Element const> args) {
          return bound(args[0], args[1], op == 0);
        });
  }

  std::optional<BinaryRelation> lattice_order(FiniteAlgebra const& lattice) {
    auto const& sig  = lattice.signature();
    auto const  join = sig.find("join");
    auto const  meet = sig.find("meet");
    if (!join || !meet || sig[*join].arity != 2 || sig[*meet].arity != 2) {
      return std::nullopt;
    }
    std::size_t const n = lattice.size();
    BinaryRelation    leq(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        std::array<Element, 2> const args{a, b};
        if (lattice.apply(*join, args) == b) {
          leq.set(a, b);
        }
      }
    }
    if (!leq.is_reflexive() || !leq.is_transitive()) {
      return std::nullopt;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (leq.test(a, b) && leq.test(b, a)) {
          return std::nullopt;
        }
      }
    }
    return leq;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical labelling by individualisation and refinement
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Canonizer {
     public:
      explicit Canonizer(BinaryRelation const& leq) : _leq(leq), _n(leq.size()) {
        std::vector<std::size_t> key(_n);
        std::vector<std::pair<std::size_t, std::size_t>> initial(_n);
        for (Element x = 0; x < _n; ++x) {
          std::size_t down = 0, up = 0;
          for (Element y = 0; y < _n; ++y) {
            down += _leq.test(y, x);
            up += _leq.test(x, y);
          }
          initial[x] = {down, up};
        }
        _start = rank(initial);
      }

      void run() {
        search(_start);
      }

      std::string const& code() const noexcept {
        return _best_code;
      }

      std::vector<Element> const& labelling() const noexcept {
        return _best_labelling;
      }

     private:
      template <typename Key>
      static std::vector<std::size_t> rank(std::vector<Key> const& keys) {
        std::vector<Key> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::size_t> out(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) {
          out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i])
                                            - sorted.begin());
        }
        return out;
      }

      static std::size_t num_colours(std::vector<std::size_t> const& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
      }

      std::vector<std::size_t> refine(std::vector<std::size_t> colour) const {
        using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
        std::size_t count = num_colours(colour);
        while (true) {
          std::vector<Key> keys(_n);
          for (Element x = 0; x < _n; ++x) {
            std::vector<std::size_t> below, above;
            for (Element y = 0; y < _n; ++y) {
              if (y == x) {
                continue;
              }
              if (_leq.test(y, x)) {
                below.push_back(colour[y]);
              } else if (_leq.test(x, y)) {
                above.push_back(colour[y]);
              }
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            keys[x] = Key{colour[x], std::move(below), std::move(above)};
          }
          colour                 = rank(keys);
          std::size_t const next = num_colours(colour);
          if (next == count) {
            return colour;
          }
          count = next;
        }
      }

      void search(std::vector<std::size_t> colour) {
        colour = refine(std::move(colour));
        std::vector<std::size_t> cell_size(_n, 0);
        for (auto c : colour) {
          ++cell_size[c];
        }
        std::size_t target = _n;
        for (std::size_t c = 0; c < _n; ++c) {
          if (cell_size[c] > 1) {
            target = c;
            break;
          }
        }
        if (target == _n) {
          leaf(colour);
          return;
        }
        for (Element x = 0; x < _n; ++x) {
          if (colour[x] != target) {
            continue;
          }
          std::vector<std::size_t> split(_n);
          for (Element y = 0; y < _n; ++y) {
            split[y] = 2 * colour[y] + (colour[y] == target && y != x ? 1 : 0);
          }
          search(rank(split));
        }
      }

      void leaf(std::vector<std::size_t> const& colour) {
        std::vector<Element> labelling(_n);
        for (Element x = 0; x < _n; ++x) {
          labelling[colour[x]] = x;
        }
        std::string code;
        code.reserve(_n * (_n - 1) / 2);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = i + 1; j < _n; ++j) {
            code += _leq.test(labelling[i], labelling[j]) ? '1' : '0';
          }
        }
        if (!_have || code < _best_code) {
          _best_code      = std::move(code);
          _best_labelling = std::move(labelling);
          _have           = true;
        }
      }

      BinaryRelation const&    _leq;
      std::size_t              _n;
      std::vector<std::size_t> _start;
      bool                     _have = false;
      std::string              _best_code;
      std::vector<Element>     _best_labelling;
    };

    BinaryRelation relabel(BinaryRelation const& leq, std::vector<Element> const& labelling) {
      std::size_t const n = leq.size();
      BinaryRelation    out(n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          if (leq.test(labelling[i], labelling[j])) {
            out.set(i, j);
          }
        }
      }
      return out;
    }

    // Down-sets D of the lattice minus its top, given by nonempty antichains
    // of generators, such that D meets every principal ideal of a non-top
    // element in a principal ideal. Exactly the lower covers a new coatom
    // may have.
    std::vector<Bitset> coatom_extensions(BinaryRelation const& leq) {
      std::size_t const n   = leq.size();
      Element const     top = static_cast<Element>(n - 1);
      std::vector<Bitset> down(n, Bitset(n));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (leq.test(y, x)) {
            down[x].set(y);
          }
        }
      }
      std::vector<Bitset>  result;
      std::vector<Element> chosen;
      auto accept = [&](Bitset const& d) {
        for (Element y = 0; y < n; ++y) {
          if (y == top) {
            continue;
          }
          Bitset const s   = d & down[y];
          bool         has = false;
          s.for_each([&](std::size_t m) {
            if (!has && s.is_subset_of(down[m])) {
              has = true;
            }
          });
          if (!has) {
            return false;
          }
        }
        return true;
      };
      std::function<void(Element)> extend = [&](Element from) {
        if (!chosen.empty()) {
          Bitset d(n);
          for (auto m : chosen) {
            d |= down[m];
          }
          if (accept(d)) {
            result.push_back(std::move(d));
          }
        }
        for (Element x = from; x < top; ++x) {
          bool free = true;
          for (auto m : chosen) {
            if (leq.test(x, m) || leq.test(m, x)) {
              free = false;
              break;
            }
          }
          if (free) {
            chosen.push_back(x);
            extend(x + 1);
            chosen.pop_back();
          }
        }
      };
      extend(0);
      return result;
    }

  }  // namespace

  std::string canonical_order_code(BinaryRelation const& leq) {
    Canonizer c(leq);
    c.run();
    return c.code();
  }

  std::vector<Element> canonical_labelling(BinaryRelation const& leq) {
    Canonizer c(leq);
    c.run();
    return c.labelling();
  }

  std::vector<FiniteAlgebra> enumerate_lattices(std::size_t max_size, std::size_t bound) {
    if (max_size > bound) {
      throw BudgetExceeded("lattice enumeration up to size " + std::to_string(max_size)
                           + " exceeds the bound " + std::to_string(bound));
    }
    std::vector<FiniteAlgebra> out;
    if (max_size == 0) {
      return out;
    }
    // canonical code -> canonically labelled order, one map per size
    std::map<std::string, BinaryRelation> level;
    level.emplace("", BinaryRelation::total(1));
    for (auto const& [code, leq] : level) {
      out.push_back(lattice_from_order(leq));
    }
    for (std::size_t size = 2; size <= max_size; ++size) {
      std::map<std::string, BinaryRelation> next;
      if (size == 2) {
        BinaryRelation chain = BinaryRelation::diagonal(2);
        chain.set(0, 1);
        next.emplace(canonical_order_code(chain), chain);
      } else {
        for (auto const& [code, parent] : level) {
          std::size_t const m = parent.size();
          for (auto const& d : coatom_extensions(parent)) {
            // new coatom gets index m; the top stays at m - 1
            BinaryRelation leq(m + 1);
            for (Element x = 0; x < m; ++x) {
              for (Element y = 0; y < m; ++y) {
                if (parent.test(x, y)) {
                  leq.set(x, y);
                }
              }
            }
            d.for_each([&](std::size_t x) { leq.set(static_cast<Element>(x), m); });
            leq.set(m, m);
            leq.set(m, m - 1);
            Canonizer c(leq);
            c.run();
            if (next.find(c.code()) == next.end()) {
              next.emplace(c.code(), relabel(leq, c.labelling()));
            }
          }
        }
      }
      for (auto const& [code, leq] : next) {
        out.push_back(lattice_from_order(leq));
      }
      level = std::move(next);
    }
    return out;
  }

  std::vector<BinaryRelation> brute_force_lattice_orders(std::size_t size) {
    std::vector<BinaryRelation> out;
    if (size == 0) {
      return out;
    }
    if (size <= 2) {
      auto r = BinaryRelation::diagonal(size);
      if (size == 2) {
        r.set(0, 1);
      }
      out.push_back(r);
      return out;
    }
    // strict comparabilities among the middle elements 1..size-2, oriented
    // along the labelling
    std::vector<ElementPair> middle;
    for (Element i = 1; i + 1 < size; ++i) {
      for (Element j = i + 1; j + 1 < size; ++j) {
        middle.emplace_back(i, j);
      }
    }
    std::vector<Element> perm(size);
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle.size()); ++mask) {
      auto leq = BinaryRelation::diagonal(size);
      for (Element x = 0; x < size; ++x) {
        leq.set(0, x);
        leq.set(x, static_cast<Element>(size - 1));
      }
      for (std::size_t i = 0; i < middle.size(); ++i) {
        if ((mask >> i) & 1U) {
          leq.set(middle[i].first, middle[i].second);
        }
      }
      if (!leq.is_transitive()) {
        continue;
      }
      try {
        lattice_from_order(leq);
      } catch (InvalidArgument const&) {
        continue;
      }
      std::iota(perm.begin(), perm.end(), 0);
      std::string best;
      do {
        std::string code;
        for (Element i = 0; i < size; ++i) {
          for (Element j = 0; j < size; ++j) {
            code += leq.test(perm[i], perm[j]) ? '1' : '0';
          }
        }
        if (best.empty() || code < best) {
          best = std::move(code);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) {
        out.push_back(leq);
      }
    }
    return out;
  }

  AlgebraStream lattice_stream(std::size_t                                         max_size,
                               std::size_t                                         bound,
                               std::function<FiniteAlgebra(FiniteAlgebra const&)> convert) {
    auto lattices = enumerate_lattices(max_size, bound);
    if (convert) {
      for (auto& l : lattices) {
        l = convert(l);
      }
    }
    return stream_of(std::move(lattices));
  }

}  // namespace tolfac
