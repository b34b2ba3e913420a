#ifndef TOLFAC_BLOCKS_HPP_
#define TOLFAC_BLOCKS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/bitset.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  // A maximal subset B with B x B inside a tolerance.
  class Block {
   public:
    Block() = default;
    Block(std::size_t universe, std::vector<Element> elements);
    explicit Block(Bitset members);

    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }

    Bitset const& members() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    bool contains(Element x) const noexcept {
      return _members.test(x);
    }

    bool contains(Bitset const& xs) const noexcept {
      return xs.is_subset_of(_members);
    }

    // "{0,1}"
    std::string to_string() const;

    friend bool operator==(Block const& lhs, Block const& rhs) noexcept {
      return lhs._elements == rhs._elements;
    }

    // lexicographic on the sorted element lists
    friend bool operator<(Block const& lhs, Block const& rhs) noexcept {
      return lhs._elements < rhs._elements;
    }

   private:
    std::vector<Element> _elements;
    Bitset               _members;
  };

  struct BlockSet {
    BinaryRelation     tolerance;
    std::vector<Block> blocks;  // canonical order

    std::size_t size() const noexcept {
      return blocks.size();
    }

    Block const& operator[](std::size_t i) const {
      return blocks[i];
    }

    // Index of a block equal to `b`, if any.
    std::optional<std::size_t> index_of(Bitset const& b) const;

    std::string to_string() const;
  };

  // All maximal cliques of the graph whose edges are the off-diagonal pairs
  // of a reflexive symmetric relation, in canonical order. Bron-Kerbosch
  // with pivoting over a degeneracy ordering.
  std::vector<Block> maximal_cliques(BinaryRelation const& r);

  // Throws InvalidArgument if `tolerance` is not a tolerance of `algebra`.
  BlockSet blocks(FiniteAlgebra const& algebra, BinaryRelation const& tolerance);

  // Canonically first block containing X when X x X is inside the tolerance.
  std::optional<Block> covering_block(BlockSet const& blocks, Bitset const& subset);

  // Union of B x B over the blocks equals the tolerance.
  bool blocks_determine(BlockSet const& blocks);

  struct BlockImage {
    Bitset image;
    // indices into the BlockSet of every block containing the image
    std::vector<std::size_t> containers;
  };

  // {f(b_1, ..., b_k) : b_i in B_i} and the blocks containing it.
  BlockImage op_image_over_blocks(FiniteAlgebra const&         algebra,
                                  BlockSet const&              blocks,
                                  std::size_t                  op,
                                  std::span<std::size_t const> tuple);

  BlockImage op_image_over_blocks(FiniteAlgebra const&         algebra,
                                  BlockSet const&              blocks,
                                  std::string_view             symbol,
                                  std::span<std::size_t const> tuple);

}  // namespace tolfac

#endif  // TOLFAC_BLOCKS_HPP_
