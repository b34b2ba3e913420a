#ifndef TOLFAC_JOINPROD_HPP_
#define TOLFAC_JOINPROD_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/blocks.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  // A direct product together with its factors and the mixed-radix
  // encoding (first factor most significant).
  class ProductStructure {
   public:
    explicit ProductStructure(std::vector<FiniteAlgebra> factors);

    FiniteAlgebra const& product() const noexcept {
      return _product.algebra;
    }
    std::vector<FiniteAlgebra> const& factors() const noexcept {
      return _factors;
    }
    std::vector<std::size_t> const& radices() const noexcept {
      return _radices;
    }
    std::vector<AlgebraMap> const& projections() const noexcept {
      return _product.projections;
    }
    std::size_t arity() const noexcept {
      return _factors.size();
    }

    Element              encode(std::span<Element const> coordinates) const;
    std::vector<Element> decode(Element x) const;

   private:
    std::vector<FiniteAlgebra> _factors;
    std::vector<std::size_t>   _radices;
    DirectProduct              _product;
  };

  // Identity lists of V_1, ..., V_n and a term d with d(x_1, ..., x_n) = x_i
  // in V_i.
  struct JoinSpec {
    Signature                          signature;
    std::vector<std::vector<Identity>> subvariety_identities;
    Term                               d;

    // Throws InvalidArgument unless d has exactly n variables and each list
    // contains d(x_0, ..., x_{n-1}) = x_i (either orientation).
    JoinSpec(Signature sig, std::vector<std::vector<Identity>> ids, Term term);

    std::size_t arity() const noexcept {
      return subvariety_identities.size();
    }
    Identity projection_law(std::size_t i) const;
  };

  struct ToleranceDecomposition {
    std::vector<BinaryRelation> parts;
    bool                        exact = false;  // product of parts equals T
  };

  // parts[i] is the projection of T to factor i.
  ToleranceDecomposition decompose_tolerance(ProductStructure const& p, BinaryRelation const& t);

  struct BlockDecompositionReport {
    BlockSet              blocks;
    std::vector<BlockSet> factor_blocks;
    // (a) every block is the product of its projections, each a factor block
    bool blocks_are_products = true;
    // (b) block counts multiply and every product of factor blocks is a block
    bool counts_multiply      = true;
    bool products_are_blocks  = true;
    std::string failure;  // first failure, empty when passed

    bool passed() const noexcept {
      return blocks_are_products && counts_multiply && products_are_blocks;
    }
  };

  // Requires an exact decomposition; throws InvalidArgument otherwise.
  BlockDecompositionReport decompose_blocks(ProductStructure const& p, BinaryRelation const& t);

  struct SubalgebraDecomposition {
    std::vector<Bitset> parts;
    bool                is_product = false;
    // a tuple of the product of parts missing from S
    std::optional<std::vector<Element>> missing;
  };

  // Throws InvalidArgument if S is not closed.
  SubalgebraDecomposition decompose_subalgebra(ProductStructure const& p, Bitset const& s);

  struct JoinDecomposition {
    bool                        member = false;
    std::string                 failed_check;  // empty when member
    std::vector<BinaryRelation> etas;
    std::vector<FiniteAlgebra>  quotients;
    // a -> ([a]eta_1, ..., [a]eta_n), into direct_product(quotients)
    std::optional<AlgebraMap> iso;
  };

  // eta_i = {(a, b) : d(b, ..., b, a, b, ..., b) = b, a in slot i}. Each must
  // be a congruence and the natural map to the product of the quotients a
  // bijective homomorphism. Throws InvalidArgument on a signature mismatch.
  JoinDecomposition decompose_algebra(FiniteAlgebra const& algebra, JoinSpec const& spec);

  struct IndependenceReport {
    struct Failure {
      std::size_t member;
      std::string problem;
    };
    std::size_t          checked = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  // members[k] = (subvariety index, algebra).
  IndependenceReport verify_independence(JoinSpec const&                                       spec,
                                         std::vector<std::pair<std::size_t, FiniteAlgebra>> const& members);

  struct QuotientProductVerdict {
    bool                       isomorphic = false;
    FiniteAlgebra              whole;     // A/T
    std::vector<FiniteAlgebra> factors;   // A_i/T_i
    FiniteAlgebra              product;   // product of the factors
    std::optional<AlgebraMap>  iso;       // whole -> product
  };

  // Requires an exact decomposition (InvalidArgument) and factorable parts
  // (NotFactorable).
  QuotientProductVerdict verify_quotient_product(ProductStructure const& p, BinaryRelation const& t);

}  // namespace tolfac

#endif  // TOLFAC_JOINPROD_HPP_
