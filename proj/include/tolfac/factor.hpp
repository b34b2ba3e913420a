#ifndef TOLFAC_FACTOR_HPP_
#define TOLFAC_FACTOR_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/blocks.hpp"
#include "tolfac/errors.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  // A block tuple whose operation image lies in two or more blocks.
  struct NonFactorableWitness {
    std::string          symbol;
    std::vector<Block>   tuple;
    std::vector<Element> image;
    std::vector<Block>   containers;  // at least two, canonical order

    std::string to_string() const;
  };

  struct FactorabilityVerdict {
    BlockSet blocks;
    // present iff factorable; element i of the quotient is blocks[i]
    std::optional<FiniteAlgebra> quotient;
    // for each element, the indices of the blocks containing it
    std::vector<std::vector<std::size_t>> block_index;
    std::optional<NonFactorableWitness>   witness;

    bool factorable() const noexcept {
      return quotient.has_value();
    }
  };

  class NotFactorable : public Error {
   public:
    explicit NotFactorable(NonFactorableWitness w)
        : Error("algebra is not factorable by the tolerance: " + w.to_string()),
          witness(std::move(w)) {}

    NonFactorableWitness witness;
  };

  // Scans symbols in signature order and block tuples in lexicographic
  // index order; reports the first tuple with several containing blocks.
  FactorabilityVerdict is_factorable(FiniteAlgebra const& algebra, BinaryRelation const& tolerance);

  // Throws NotFactorable with the witness when the quotient is undefined.
  FiniteAlgebra quotient(FiniteAlgebra const& algebra, BinaryRelation const& tolerance);

  // D = {(x, Y) : x in Y} inside A x A/T, with theta the kernel of the
  // second coordinate and phi the first coordinate.
  struct CoverResult {
    FiniteAlgebra  cover;
    BinaryRelation theta;
    AlgebraMap     phi;
    // embedding[d] = (x, index of Y in the canonical block order)
    std::vector<std::pair<Element, std::size_t>> embedding;
    FiniteAlgebra                                quotient;
  };

  // Verifies its own postconditions (D closed, theta a congruence, phi a
  // surjective homomorphism, phi(theta) = T) and throws VerificationFailure
  // if any fails.
  CoverResult covering_construction(FiniteAlgebra const& algebra, BinaryRelation const& tolerance);

  struct AlgebraFactorability {
    bool                                factorable = true;
    std::size_t                         tolerances_checked = 0;
    std::optional<BinaryRelation>       failing_tolerance;
    std::optional<NonFactorableWitness> witness;
  };

  AlgebraFactorability is_tolerance_factorable_algebra(FiniteAlgebra const& algebra,
                                                       Budget const&        budget = {});

  struct WitnessHit {
    std::size_t          algebra_index;  // position in the stream
    FiniteAlgebra        algebra;
    BinaryRelation       tolerance;
    NonFactorableWitness witness;
  };

  // Yields the next algebra, or nullopt when exhausted.
  using AlgebraStream = std::function<std::optional<FiniteAlgebra>()>;

  AlgebraStream stream_of(std::vector<FiniteAlgebra> algebras);

  // First witness in stream order, then canonical tolerance order. With
  // `symbol` set, only tolerances whose canonical witness uses that symbol
  // count.
  std::optional<WitnessHit> find_nonfactorable_witness(AlgebraStream const&       next,
                                                       Budget const&              budget = {},
                                                       std::optional<std::string> symbol = {});

}  // namespace tolfac

#endif  // TOLFAC_FACTOR_HPP_
