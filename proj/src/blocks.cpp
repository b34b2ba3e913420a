#include "tolfac/blocks.hpp"

#include <algorithm>

namespace tolfac {

  Block::Block(std::size_t universe, std::vector<Element> elements)
      : _elements(std::move(elements)), _members(universe) {
    std::sort(_elements.begin(), _elements.end());
    _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());
    for (auto x : _elements) {
      if (x >= universe) {
        throw InvalidArgument("block element " + std::to_string(x) + " out of range");
      }
      _members.set(x);
    }
  }

  Block::Block(Bitset members) : _members(std::move(members)) {
    _members.for_each([this](std::size_t x) { _elements.push_back(static_cast<Element>(x)); });
  }

  std::string Block::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(_elements[i]);
    }
    return out + "}";
  }

  std::optional<std::size_t> BlockSet::index_of(Bitset const& b) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].members() == b) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::string BlockSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += blocks[i].to_string();
    }
    return out + "}";
  }

  namespace {

    class CliqueEnumerator {
     public:
      explicit CliqueEnumerator(BinaryRelation const& r) : _n(r.size()) {
        for (Element v = 0; v < _n; ++v) {
          auto row = r.row(v);
          row.reset(v);
          _adj.push_back(std::move(row));
        }
      }

      std::vector<Block> run() {
        auto const order = degeneracy_order();
        Bitset     later(_n);
        later.set_all();
        Bitset earlier(_n);
        for (auto v : order) {
          later.reset(v);
          Bitset r(_n);
          r.set(v);
          expand(r, _adj[v] & later, _adj[v] & earlier);
          earlier.set(v);
        }
        std::sort(_out.begin(), _out.end());
        return std::move(_out);
      }

     private:
      std::vector<Element> degeneracy_order() const {
        std::vector<std::size_t> degree(_n);
        for (Element v = 0; v < _n; ++v) {
          degree[v] = _adj[v].count();
        }
        std::vector<bool>    removed(_n, false);
        std::vector<Element> order;
        for (std::size_t step = 0; step < _n; ++step) {
          Element best = 0;
          bool    have = false;
          for (Element v = 0; v < _n; ++v) {
            if (!removed[v] && (!have || degree[v] < degree[best])) {
              best = v;
              have = true;
            }
          }
          removed[best] = true;
          order.push_back(best);
          _adj[best].for_each([&](std::size_t u) {
            if (!removed[u]) {
              --degree[u];
            }
          });
        }
        return order;
      }

      void expand(Bitset const& r, Bitset p, Bitset x) {
        if (p.none() && x.none()) {
          _out.emplace_back(r);
          return;
        }
        // pivot maximising |P & N(u)| over P | X
        std::size_t pivot = 0;
        std::size_t best  = 0;
        bool        have  = false;
        (p | x).for_each([&](std::size_t u) {
          std::size_t const c = (p & _adj[u]).count();
          if (!have || c > best) {
            pivot = u;
            best  = c;
            have  = true;
          }
        });
        Bitset candidates = p;
        candidates.subtract(_adj[pivot]);
        candidates.for_each([&](std::size_t v) {
          Bitset r2 = r;
          r2.set(v);
          expand(r2, p & _adj[v], x & _adj[v]);
          p.reset(v);
          x.set(v);
        });
      }

      std::size_t        _n;
      std::vector<Bitset> _adj;
      std::vector<Block> _out;
    };

  }  // namespace

  std::vector<Block> maximal_cliques(BinaryRelation const& r) {
    return CliqueEnumerator(r).run();
  }

  BlockSet blocks(FiniteAlgebra const& algebra, BinaryRelation const& tolerance) {
    if (!is_tolerance(algebra, tolerance)) {
      throw InvalidArgument("blocks requires a tolerance; got {" + tolerance.to_string() + "}");
    }
    return BlockSet{tolerance, maximal_cliques(tolerance)};
  }

  std::optional<Block> covering_block(BlockSet const& bs, Bitset const& subset) {
    auto const xs = subset.to_vector();
    for (auto a : xs) {
      for (auto b : xs) {
        if (!bs.tolerance.test(static_cast<Element>(a), static_cast<Element>(b))) {
          return std::nullopt;
        }
      }
    }
    for (auto const& b : bs.blocks) {
      if (b.contains(subset)) {
        return b;
      }
    }
    return std::nullopt;
  }

  bool blocks_determine(BlockSet const& bs) {
    BinaryRelation rebuilt(bs.tolerance.size());
    for (auto const& b : bs.blocks) {
      for (auto x : b.elements()) {
        for (auto y : b.elements()) {
          rebuilt.set(x, y);
        }
      }
    }
    return rebuilt == bs.tolerance;
  }

  BlockImage op_image_over_blocks(FiniteAlgebra const&         algebra,
                                  BlockSet const&              bs,
                                  std::size_t                  op,
                                  std::span<std::size_t const> tuple) {
    std::size_t const k = algebra.signature()[op].arity;
    if (tuple.size() != k) {
      throw InvalidArgument("symbol '" + algebra.signature()[op].name + "' has arity "
                            + std::to_string(k) + ", got a tuple of "
                            + std::to_string(tuple.size()) + " blocks");
    }
    for (auto i : tuple) {
      if (i >= bs.size()) {
        throw InvalidArgument("block index " + std::to_string(i) + " out of range");
      }
    }
    BlockImage               result{Bitset(algebra.size()), {}};
    std::vector<std::size_t> pos(k, 0);
    std::vector<Element>     args(k);
    while (true) {
      for (std::size_t j = 0; j < k; ++j) {
        args[j] = bs[tuple[j]].elements()[pos[j]];
      }
      result.image.set(algebra.apply(op, args));
      bool wrapped = true;
      for (std::size_t j = k; j-- > 0;) {
        if (++pos[j] < bs[tuple[j]].size()) {
          wrapped = false;
          break;
        }
        pos[j] = 0;
      }
      if (wrapped) {
        break;
      }
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (bs[i].contains(result.image)) {
        result.containers.push_back(i);
      }
    }
    return result;
  }

  BlockImage op_image_over_blocks(FiniteAlgebra const&         algebra,
                                  BlockSet const&              bs,
                                  std::string_view             symbol,
                                  std::span<std::size_t const> tuple) {
    return op_image_over_blocks(algebra, bs, algebra.signature().index_of(symbol), tuple);
  }

}  // namespace tolfac
